#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ybme/field.hpp"

namespace ybme {

/// 2x2 matrix over F_q, row major.  Ordered lexicographically by
/// (x11, x12, x21, x22) encodings; that order is also the enumeration
/// order used by the exhaustive scans.
struct Mat2 {
    Fq x11 = 0, x12 = 0, x21 = 0, x22 = 0;
    auto operator<=>(const Mat2&) const = default;
};

Mat2 mat_add(const FieldCtx& F, const Mat2& A, const Mat2& B);
Mat2 mat_sub(const FieldCtx& F, const Mat2& A, const Mat2& B);
Mat2 mat_neg(const FieldCtx& F, const Mat2& A);
Mat2 mat_mul(const FieldCtx& F, const Mat2& A, const Mat2& B);
Mat2 scalar_mul(const FieldCtx& F, Fq c, const Mat2& A);

Fq det(const FieldCtx& F, const Mat2& A);
Fq trace(const FieldCtx& F, const Mat2& A);

inline bool is_zero(const Mat2& A) { return A == Mat2{}; }
inline Mat2 identity() { return {1, 0, 0, 1}; }
Mat2 scalar(Fq c);

/// True when A is c*I for some c, decided entry-wise (works in every
/// characteristic; trace-halving does not).
bool is_scalar(const Mat2& A);

/// Number of 2x2 matrices over F_q.
std::uint64_t mat_count(const FieldCtx& F);

/// Bijection between [0, q^4) and matrices, monotone for Mat2's ordering.
std::uint64_t mat_index(const FieldCtx& F, const Mat2& A);
Mat2 mat_at(const FieldCtx& F, std::uint64_t idx);

/// Polynomial in one variable, coefficients ascending by degree.
struct Poly1 {
    std::vector<Fq> coeffs;
    int degree() const;
    auto operator<=>(const Poly1&) const = default;
};

/// x^2 - trace(A) x + det(A), returned as {det, -trace, 1}.
Poly1 char_poly(const FieldCtx& F, const Mat2& A);

/// Degree 1 (x - c) exactly for scalar matrices, else the characteristic
/// polynomial.
Poly1 min_poly(const FieldCtx& F, const Mat2& A);

Fq eval_poly(const FieldCtx& F, const Poly1& f, Fq x);
Mat2 eval_poly_at(const FieldCtx& F, const Poly1& f, const Mat2& A);

/// Parses "[[a,b],[c,d]]" with integer-encoded entries; whitespace tolerated.
Mat2 parse_mat2(const FieldCtx& F, const std::string& text);
std::string format_mat2(const Mat2& A);

}  // namespace ybme
