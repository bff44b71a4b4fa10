#pragma once

#include <string>
#include <vector>

#include "ybme/canonical.hpp"
#include "ybme/mat2.hpp"

namespace ybme {

/// How a solution set was obtained.
enum class Provenance { closed_form, oracle, conjectural };

const char* provenance_name(Provenance p);

enum class ComponentKind { isolated, family_1d, family_2d, oracle_bulk };

const char* component_kind_name(ComponentKind k);

/// One piece of a solution variety.  Families keep their full membership
/// lists; overlaps between components are allowed and retained.
struct Component {
    std::string label;
    ComponentKind kind;
    int dimension = -1;  // -1 when nothing is asserted about it
    std::vector<Mat2> members;
};

/// All X with X A X = A X A, as a deduplicated ascending point list plus
/// the structural components the closed forms describe.
struct SolutionSet {
    std::string field;  // field spec, enough to rebuild the context
    Mat2 A;
    Provenance provenance = Provenance::oracle;
    std::vector<Component> components;
    std::vector<Mat2> points;

    std::size_t cardinality() const { return points.size(); }
    bool contains(const Mat2& X) const;
};

/// X A X - A X A.
Mat2 residual(const FieldCtx& F, const Mat2& A, const Mat2& X);

/// Exhaustive scan of all q^4 candidates.  The default mode is the OpenMP
/// kernel; ScanMode::serial is the reference it is checked against.
SolutionSet brute_force_solutions(const FieldCtx& F, const Mat2& A,
                                  unsigned max_q = kDefaultScanBound,
                                  ScanMode mode = ScanMode::parallel);

/// A = diag(c1, 0), c1 != 0: three families, 2q^2 points in total.
SolutionSet solve_A1_one_zero(const FieldCtx& F, Fq c1);

/// A = diag(c1, c2), both nonzero and distinct.  The invariant
/// delta = c1^2 - c1 c2 + c2^2 picks between 2q+2 and q+3 points.
SolutionSet solve_A1_nonzero(const FieldCtx& F, Fq c1, Fq c2);

/// A = [[c,1],[0,c]]: 2q^2 - q points for c = 0, q + 2 otherwise.
SolutionSet solve_A2(const FieldCtx& F, Fq c);

/// A = [[0,-b],[1,a]] with x^2 - a x + b irreducible.  Odd q with
/// discriminant = -b gives the closed form {0, A}; other companion cases
/// fall back to the oracle (conjectural provenance when a q+3 prediction
/// exists, plain oracle provenance in even characteristic).
SolutionSet solve_A3(const FieldCtx& F, Fq a, Fq b,
                     unsigned max_q = kDefaultScanBound);

/// Classify B, solve the canonical matrix, and carry the solutions back
/// through the classifying transform.
SolutionSet solve(const FieldCtx& F, const Mat2& B,
                  unsigned max_q = kDefaultScanBound);

/// Where a cardinality formula for |D_A| comes from.
enum class PredictionSource {
    Thm1_case1,
    Thm1_case2_delta0,
    Thm1_case2_deltaNonzero,
    Thm2_c0,
    Thm2_cNonzero,
    Thm3,
    Conjecture6_5,
    none,
};

const char* prediction_source_name(PredictionSource s);

struct CardinalityPrediction {
    PredictionSource source = PredictionSource::none;
    std::uint64_t count = 0;      // meaningful unless source == none
    bool conjectural = false;     // true exactly for Conjecture6_5
    bool has_delta = false;       // c1^2 - c1 c2 + c2^2, diagonal case
    Fq delta = 0;
    bool has_discriminant = false;  // a^2 - 4b, companion case
    Fq discriminant = 0;
};

CardinalityPrediction predict_cardinality(const FieldCtx& F, const Mat2& B);

/// Re-check that every recorded point actually solves X A X = A X A.
bool verify_residuals(const FieldCtx& F, const SolutionSet& S);

}  // namespace ybme
