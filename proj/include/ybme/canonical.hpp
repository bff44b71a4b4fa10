#pragma once

#include <vector>

#include "ybme/mat2.hpp"

namespace ybme {

/// Default ceiling on q for anything that walks all q^4 matrices.
inline constexpr unsigned kDefaultScanBound = 32;

/// Whether a q^4 scan runs on the OpenMP kernel or the serial reference.
enum class ScanMode { parallel, serial };

/// The four similarity classes of a 2x2 matrix over F_q.
enum class CanonicalTag {
    DistinctDiag,  // diag(c1, c2), c1 != c2, ordered by encoding
    Jordan,        // [[c,1],[0,c]]
    Companion,     // [[0,-b],[1,a]] for irreducible x^2 - a x + b
    Scalar,        // c*I
};

const char* tag_name(CanonicalTag t);

struct CanonicalForm {
    CanonicalTag tag;
    Fq c1 = 0, c2 = 0;  // DistinctDiag; c1 doubles as the value for Jordan/Scalar
    Fq a = 0, b = 0;    // Companion: char poly x^2 - a x + b
    Mat2 transform;     // P with P^{-1} B P equal to the canonical matrix
    int root_count = 0; // distinct roots of the characteristic polynomial
};

/// Classify B up to similarity.  Canonical matrices classify to themselves
/// with transform = I.
CanonicalForm rational_canonical_form(const FieldCtx& F, const Mat2& B);

/// The canonical matrix a form describes.
Mat2 canonical_matrix(const FieldCtx& F, const CanonicalForm& form);

/// Distinct roots of a monic quadratic x^2 - a x + b, ascending.
std::vector<Fq> quadratic_roots(const FieldCtx& F, Fq a, Fq b);

/// Throws std::domain_error when det P = 0.
Mat2 mat_inverse(const FieldCtx& F, const Mat2& P);

/// P^{-1} X P.
Mat2 conjugate(const FieldCtx& F, const Mat2& P, const Mat2& X);

/// All invertible matrices, ascending; |GL_2| = (q^2-1)(q^2-q).
std::vector<Mat2> gl2_enumerate(const FieldCtx& F,
                                unsigned max_q = kDefaultScanBound,
                                ScanMode mode = ScanMode::parallel);

/// {Q in GL_2 : Q A = A Q}, ascending.  Conjugation by any member fixes A.
std::vector<Mat2> stabilizer(const FieldCtx& F, const Mat2& A,
                             unsigned max_q = kDefaultScanBound,
                             ScanMode mode = ScanMode::parallel);

}  // namespace ybme
