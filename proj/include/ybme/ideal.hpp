#pragma once

#include <string>
#include <vector>

#include "ybme/canonical.hpp"
#include "ybme/mat2.hpp"
#include "ybme/mpoly.hpp"

namespace ybme {

/// A finitely generated ideal, tagged with a human-readable label.
struct IdealGens {
    PolyRing ring;
    std::string label;
    std::vector<MPoly> gens;
};

/// Reduced monic lex basis: unique for the ideal, sorted with the largest
/// leading monomial first.  An empty basis is the zero ideal.
struct GroebnerBasis {
    PolyRing ring;
    std::vector<MPoly> polys;
};

/// Remainder of multivariate division by the basis list, scanning divisors
/// first-to-last.  Zero exactly for ideal members once G is a Groebner basis.
MPoly normal_form(const PolyRing& R, MPoly f, const std::vector<MPoly>& G);

/// Buchberger with the normal selection strategy (smallest lcm degree first,
/// then first-indexed pair) and the coprime-leading-term skip, followed by
/// reduction to the unique reduced monic basis.
GroebnerBasis buchberger(const IdealGens& I);

bool ideal_contains(const GroebnerBasis& G, const MPoly& f);

/// Pairwise products of generators; labels concatenate.
IdealGens ideal_product(const IdealGens& I, const IdealGens& J);

/// Elimination intersection: Groebner basis of t*I + (1-t)*J in the extended
/// ring, keeping the t-free elements.
IdealGens ideal_intersect(const IdealGens& I, const IdealGens& J);

/// Radical membership via the auxiliary-variable trick: f lies in the
/// radical of I exactly when 1 lies in I + <1 - t*f> in the extended ring
/// with t greatest.
bool radical_contains(const IdealGens& I, const MPoly& f);

/// Entries of X A X - A X A for symbolic X; at most four generators, fewer
/// when entries collapse.  A = 0 yields the zero ideal.
IdealGens ybme_ideal(const FieldPtr& field, const Mat2& A,
                     const std::string& label = "J");

/// Generators given as polynomial text; zero polynomials are stripped.
IdealGens parse_ideal(const PolyRing& R, const std::string& label,
                      const std::vector<std::string>& gens);

/// All F_q-points of V(I) read as matrices, ascending; exhaustive scan.
std::vector<Mat2> variety_points(const IdealGens& I,
                                 unsigned max_q = kDefaultScanBound,
                                 ScanMode mode = ScanMode::parallel);

/// S-polynomial; exposed for the basis-soundness property tests.
MPoly s_poly(const PolyRing& R, const MPoly& f, const MPoly& g);

bool same_ideal(const GroebnerBasis& A, const GroebnerBasis& B);

}  // namespace ybme
