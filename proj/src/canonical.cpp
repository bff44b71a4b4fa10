#include "ybme/canonical.hpp"

#include <stdexcept>

#include "scan_util.hpp"

namespace ybme {

const char* tag_name(CanonicalTag t) {
    switch (t) {
        case CanonicalTag::DistinctDiag: return "A1";
        case CanonicalTag::Jordan: return "A2";
        case CanonicalTag::Companion: return "A3";
        case CanonicalTag::Scalar: return "A4";
    }
    return "?";
}

std::vector<Fq> quadratic_roots(const FieldCtx& F, Fq a, Fq b) {
    std::vector<Fq> roots;
    for (Fq x = 0; x < F.q(); ++x) {
        // x^2 - a x + b
        Fq v = F.add(F.sub(F.mul(x, x), F.mul(a, x)), b);
        if (v == 0) roots.push_back(x);
    }
    return roots;
}

namespace {

struct Vec2 {
    Fq v1, v2;
};

// A nonzero kernel vector of a singular nonzero 2x2 matrix: each row is
// orthogonal to (x12, -x11) resp. (x22, -x21) once det = 0.
Vec2 kernel_vector(const FieldCtx& F, const Mat2& M) {
    if (M.x11 != 0 || M.x12 != 0) return {M.x12, F.neg(M.x11)};
    return {M.x22, F.neg(M.x21)};
}

Vec2 normalize(const FieldCtx& F, Vec2 v) {
    Fq lead = v.v1 != 0 ? v.v1 : v.v2;
    Fq s = F.inv(lead);
    return {F.mul(s, v.v1), F.mul(s, v.v2)};
}

Mat2 columns(Vec2 u, Vec2 w) { return {u.v1, w.v1, u.v2, w.v2}; }

}  // namespace

CanonicalForm rational_canonical_form(const FieldCtx& F, const Mat2& B) {
    F.check(B.x11);
    F.check(B.x12);
    F.check(B.x21);
    F.check(B.x22);

    CanonicalForm form;
    Fq tr = trace(F, B);
    Fq dt = det(F, B);
    std::vector<Fq> roots = quadratic_roots(F, tr, dt);
    form.root_count = static_cast<int>(roots.size());

    if (roots.size() == 2) {
        form.tag = CanonicalTag::DistinctDiag;
        form.c1 = roots[0];
        form.c2 = roots[1];
        Vec2 u = normalize(F, kernel_vector(F, mat_sub(F, B, scalar(form.c1))));
        Vec2 w = normalize(F, kernel_vector(F, mat_sub(F, B, scalar(form.c2))));
        form.transform = columns(u, w);
        return form;
    }

    if (roots.size() == 1) {
        Fq c = roots[0];
        if (is_scalar(B)) {
            form.tag = CanonicalTag::Scalar;
            form.c1 = c;
            form.transform = identity();
            return form;
        }
        form.tag = CanonicalTag::Jordan;
        form.c1 = c;
        // generalized eigenvector chain: w with N w != 0, u = N w, N = B - cI;
        // scaling the pair keeps N w = u intact while normalizing u
        Mat2 N = mat_sub(F, B, scalar(c));
        Vec2 w = {1, 0};
        Vec2 u = {N.x11, N.x21};
        if (u.v1 == 0 && u.v2 == 0) {
            w = {0, 1};
            u = {N.x12, N.x22};
        }
        Fq lead = u.v1 != 0 ? u.v1 : u.v2;
        Fq sc = F.inv(lead);
        u = {F.mul(sc, u.v1), F.mul(sc, u.v2)};
        w = {F.mul(sc, w.v1), F.mul(sc, w.v2)};
        form.transform = columns(u, w);
        return form;
    }

    // irreducible characteristic polynomial: every nonzero vector is cyclic
    form.tag = CanonicalTag::Companion;
    form.a = tr;
    form.b = dt;
    Vec2 v = {1, 0};
    Vec2 bv = {B.x11, B.x21};
    if (F.sub(F.mul(v.v1, bv.v2), F.mul(v.v2, bv.v1)) == 0) {
        v = {0, 1};
        bv = {B.x12, B.x22};
    }
    form.transform = columns(v, bv);
    return form;
}

Mat2 canonical_matrix(const FieldCtx& F, const CanonicalForm& form) {
    switch (form.tag) {
        case CanonicalTag::DistinctDiag: return {form.c1, 0, 0, form.c2};
        case CanonicalTag::Jordan: return {form.c1, 1, 0, form.c1};
        case CanonicalTag::Companion: return {0, F.neg(form.b), 1, form.a};
        case CanonicalTag::Scalar: return scalar(form.c1);
    }
    throw std::logic_error("bad canonical tag");
}

Mat2 mat_inverse(const FieldCtx& F, const Mat2& P) {
    Fq d = det(F, P);
    if (d == 0)
        throw std::domain_error("matrix " + format_mat2(P) + " is singular");
    Fq di = F.inv(d);
    return {F.mul(di, P.x22), F.mul(di, F.neg(P.x12)),
            F.mul(di, F.neg(P.x21)), F.mul(di, P.x11)};
}

Mat2 conjugate(const FieldCtx& F, const Mat2& P, const Mat2& X) {
    return mat_mul(F, mat_mul(F, mat_inverse(F, P), X), P);
}

std::vector<Mat2> gl2_enumerate(const FieldCtx& F, unsigned max_q, ScanMode mode) {
    detail::check_scan_bound(F, max_q, "GL_2 enumeration");
    return detail::scan_matrices(
        F, [&](const Mat2& M) { return det(F, M) != 0; }, mode);
}

std::vector<Mat2> stabilizer(const FieldCtx& F, const Mat2& A, unsigned max_q,
                             ScanMode mode) {
    detail::check_scan_bound(F, max_q, "stabilizer scan");
    return detail::scan_matrices(
        F,
        [&](const Mat2& Q) {
            return det(F, Q) != 0 && mat_mul(F, Q, A) == mat_mul(F, A, Q);
        },
        mode);
}

}  // namespace ybme
