#include "ybme/solve.hpp"

#include <algorithm>
#include <stdexcept>

#include "scan_util.hpp"

namespace ybme {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::closed_form: return "closed_form";
        case Provenance::oracle: return "oracle";
        case Provenance::conjectural: return "conjectural";
    }
    return "?";
}

const char* component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::isolated: return "isolated";
        case ComponentKind::family_1d: return "family_1d";
        case ComponentKind::family_2d: return "family_2d";
        case ComponentKind::oracle_bulk: return "oracle_bulk";
    }
    return "?";
}

bool SolutionSet::contains(const Mat2& X) const {
    return std::binary_search(points.begin(), points.end(), X);
}

Mat2 residual(const FieldCtx& F, const Mat2& A, const Mat2& X) {
    Mat2 xa = mat_mul(F, X, A);
    return mat_sub(F, mat_mul(F, xa, X), mat_mul(F, A, xa));
}

namespace {

Component isolated_point(std::string label, const Mat2& M) {
    return {std::move(label), ComponentKind::isolated, 0, {M}};
}

void rebuild_points(SolutionSet& S) {
    S.points.clear();
    for (const auto& comp : S.components)
        S.points.insert(S.points.end(), comp.members.begin(), comp.members.end());
    std::sort(S.points.begin(), S.points.end());
    S.points.erase(std::unique(S.points.begin(), S.points.end()), S.points.end());
}

// Collect the union of all component members into the sorted point list and
// make sure the two always-solutions are present.
SolutionSet finalize(const FieldCtx& F, const Mat2& A, Provenance prov,
                     std::vector<Component> components) {
    SolutionSet S;
    S.field = F.spec_string();
    S.A = A;
    S.provenance = prov;
    S.components = std::move(components);
    rebuild_points(S);
    if (!S.contains(Mat2{}) || (!is_zero(A) && !S.contains(A)))
        throw std::logic_error("solution set lost a guaranteed point");
    return S;
}

// Carry a solved set across a similarity: every member Y becomes Q^{-1} Y Q,
// and the solved matrix moves the same way.
SolutionSet conjugate_solutions(const FieldCtx& F, const SolutionSet& base,
                                const Mat2& Q) {
    Mat2 qinv = mat_inverse(F, Q);
    SolutionSet S;
    S.field = base.field;
    S.A = mat_mul(F, mat_mul(F, qinv, base.A), Q);
    S.provenance = base.provenance;
    S.components = base.components;
    for (auto& comp : S.components)
        for (auto& M : comp.members) M = mat_mul(F, mat_mul(F, qinv, M), Q);
    rebuild_points(S);
    return S;
}

}  // namespace

SolutionSet brute_force_solutions(const FieldCtx& F, const Mat2& A,
                                  unsigned max_q, ScanMode mode) {
    detail::check_scan_bound(F, max_q, "brute-force solve");
    std::vector<Mat2> pts = detail::scan_matrices(
        F, [&](const Mat2& X) { return is_zero(residual(F, A, X)); }, mode);
    SolutionSet S;
    S.field = F.spec_string();
    S.A = A;
    S.provenance = Provenance::oracle;
    S.components.push_back(
        {"oracle", ComponentKind::oracle_bulk, -1, pts});
    S.points = std::move(pts);
    if (!S.contains(Mat2{}) || (!is_zero(A) && !S.contains(A)))
        throw std::logic_error("solution set lost a guaranteed point");
    return S;
}

SolutionSet solve_A1_one_zero(const FieldCtx& F, Fq c1) {
    F.check(c1);
    if (c1 == 0) throw std::invalid_argument("diag(c1, 0) needs c1 != 0");
    Mat2 A{c1, 0, 0, 0};

    Component d1{"D1", ComponentKind::family_2d, 2, {}};
    Component d2{"D2", ComponentKind::family_2d, 2, {}};
    Component d3{"D3", ComponentKind::family_1d, 1, {}};
    for (Fq a = 0; a < F.q(); ++a) {
        for (Fq b = 0; b < F.q(); ++b) {
            d1.members.push_back({0, 0, a, b});
            d2.members.push_back({0, a, 0, b});
        }
        d3.members.push_back({c1, 0, 0, a});
    }
    return finalize(F, A, Provenance::closed_form, {d1, d2, d3});
}

SolutionSet solve_A1_nonzero(const FieldCtx& F, Fq c1, Fq c2) {
    F.check(c1);
    F.check(c2);
    if (c1 == 0 || c2 == 0 || c1 == c2)
        throw std::invalid_argument("diag(c1, c2) needs distinct nonzero entries");
    Mat2 A{c1, 0, 0, c2};

    // delta = c1^2 - c1 c2 + c2^2 decides the shape
    Fq delta = F.add(F.sub(F.mul(c1, c1), F.mul(c1, c2)), F.mul(c2, c2));
    std::vector<Component> comps;
    comps.push_back(isolated_point("0", Mat2{}));
    comps.push_back(isolated_point("diag(c1,0)", {c1, 0, 0, 0}));
    comps.push_back(isolated_point("diag(0,c2)", {0, 0, 0, c2}));

    if (delta == 0) {
        Component e1{"E1", ComponentKind::family_1d, 1, {}};
        Component e2{"E2", ComponentKind::family_1d, 1, {}};
        for (Fq t = 0; t < F.q(); ++t) {
            e1.members.push_back({c1, 0, t, c2});
            e2.members.push_back({c1, t, 0, c2});
        }
        comps.push_back(e1);
        comps.push_back(e2);
    } else {
        comps.push_back(isolated_point("diag(c1,c2)", A));
        // corners are fixed; the off-diagonal entries sweep a hyperbola
        Fq diff = F.sub(c2, c1);
        Fq corner11 = F.div(F.mul(c2, c2), diff);
        Fq corner22 = F.div(F.mul(c1, c1), F.neg(diff));
        Fq rhs = F.neg(F.div(F.mul(F.mul(c1, c2), delta), F.mul(diff, diff)));
        Component e3{"E3", ComponentKind::family_1d, 1, {}};
        for (Fq t = 1; t < F.q(); ++t)
            e3.members.push_back({corner11, t, F.div(rhs, t), corner22});
        comps.push_back(e3);
    }
    return finalize(F, A, Provenance::closed_form, std::move(comps));
}

SolutionSet solve_A2(const FieldCtx& F, Fq c) {
    F.check(c);
    Mat2 A{c, 1, 0, c};

    if (c == 0) {
        Component v1{"V(p1)", ComponentKind::family_2d, 2, {}};
        Component v2{"V(p2)", ComponentKind::family_2d, 2, {}};
        for (Fq a = 0; a < F.q(); ++a)
            for (Fq b = 0; b < F.q(); ++b) {
                v1.members.push_back({0, a, 0, b});
                v2.members.push_back({a, b, 0, 0});
            }
        return finalize(F, A, Provenance::closed_form, {v1, v2});
    }

    std::vector<Component> comps;
    comps.push_back(isolated_point("0", Mat2{}));
    comps.push_back(isolated_point("A", A));
    Component e{"E", ComponentKind::family_1d, 1, {}};
    Fq ci = F.inv(c);
    Fq ci2 = F.mul(ci, ci);
    Fq two = F.of_int(2);
    Fq m_c2 = F.neg(F.mul(c, c));
    for (Fq t = 0; t < F.q(); ++t) {
        Fq x11 = F.sub(F.mul(two, c), t);
        Fq x12 = F.add(F.sub(F.mul(ci2, F.mul(t, t)), F.mul(F.mul(two, ci), t)), 1);
        e.members.push_back({x11, x12, m_c2, t});
    }
    comps.push_back(e);
    return finalize(F, A, Provenance::closed_form, std::move(comps));
}

namespace {

bool companion_is_irreducible(const FieldCtx& F, Fq a, Fq b) {
    return quadratic_roots(F, a, b).empty();
}

}  // namespace

SolutionSet solve_A3(const FieldCtx& F, Fq a, Fq b, unsigned max_q) {
    F.check(a);
    F.check(b);
    if (!companion_is_irreducible(F, a, b))
        throw std::invalid_argument("x^2 - " + std::to_string(a) + "x + " +
                                    std::to_string(b) +
                                    " is reducible over F_" + std::to_string(F.q()));
    Mat2 A{0, F.neg(b), 1, a};

    Fq disc = F.sub(F.mul(a, a), F.mul(F.of_int(4), b));
    if (F.q() % 2 == 1 && disc == F.neg(b)) {
        // the only solutions are the two obvious ones
        return finalize(F, A, Provenance::closed_form,
                        {isolated_point("0", Mat2{}), isolated_point("A", A)});
    }

    SolutionSet S = brute_force_solutions(F, A, max_q);
    if (F.q() % 2 == 1) S.provenance = Provenance::conjectural;
    return S;
}

SolutionSet solve(const FieldCtx& F, const Mat2& B, unsigned max_q) {
    CanonicalForm form = rational_canonical_form(F, B);

    SolutionSet canon;
    switch (form.tag) {
        case CanonicalTag::DistinctDiag:
            if (form.c2 == 0) {
                canon = solve_A1_one_zero(F, form.c1);
            } else if (form.c1 == 0) {
                // diag(0, c) is the swap-conjugate of diag(c, 0)
                canon = conjugate_solutions(F, solve_A1_one_zero(F, form.c2),
                                            Mat2{0, 1, 1, 0});
            } else {
                canon = solve_A1_nonzero(F, form.c1, form.c2);
            }
            break;
        case CanonicalTag::Jordan:
            canon = solve_A2(F, form.c1);
            break;
        case CanonicalTag::Companion:
            canon = solve_A3(F, form.a, form.b, max_q);
            break;
        case CanonicalTag::Scalar:
            return brute_force_solutions(F, B, max_q);
    }

    if (form.transform == identity()) return canon;

    // C = P^{-1} B P was solved; Y solves C iff P Y P^{-1} solves B
    return conjugate_solutions(F, canon, mat_inverse(F, form.transform));
}

const char* prediction_source_name(PredictionSource s) {
    switch (s) {
        case PredictionSource::Thm1_case1: return "Thm1_case1";
        case PredictionSource::Thm1_case2_delta0: return "Thm1_case2_delta0";
        case PredictionSource::Thm1_case2_deltaNonzero:
            return "Thm1_case2_deltaNonzero";
        case PredictionSource::Thm2_c0: return "Thm2_c0";
        case PredictionSource::Thm2_cNonzero: return "Thm2_cNonzero";
        case PredictionSource::Thm3: return "Thm3";
        case PredictionSource::Conjecture6_5: return "Conjecture6_5";
        case PredictionSource::none: return "none";
    }
    return "?";
}

CardinalityPrediction predict_cardinality(const FieldCtx& F, const Mat2& B) {
    CanonicalForm form = rational_canonical_form(F, B);
    CardinalityPrediction pred;
    std::uint64_t q = F.q();

    switch (form.tag) {
        case CanonicalTag::DistinctDiag: {
            if (form.c1 == 0 || form.c2 == 0) {
                pred.source = PredictionSource::Thm1_case1;
                pred.count = 2 * q * q;
                return pred;
            }
            Fq c1 = form.c1, c2 = form.c2;
            Fq delta =
                F.add(F.sub(F.mul(c1, c1), F.mul(c1, c2)), F.mul(c2, c2));
            pred.has_delta = true;
            pred.delta = delta;
            if (delta == 0) {
                pred.source = PredictionSource::Thm1_case2_delta0;
                pred.count = 2 * q + 2;
            } else {
                pred.source = PredictionSource::Thm1_case2_deltaNonzero;
                pred.count = q + 3;
            }
            return pred;
        }
        case CanonicalTag::Jordan:
            if (form.c1 == 0) {
                pred.source = PredictionSource::Thm2_c0;
                pred.count = 2 * q * q - q;
            } else {
                pred.source = PredictionSource::Thm2_cNonzero;
                pred.count = q + 2;
            }
            return pred;
        case CanonicalTag::Companion: {
            Fq disc = F.sub(F.mul(form.a, form.a), F.mul(F.of_int(4), form.b));
            pred.has_discriminant = true;
            pred.discriminant = disc;
            if (q % 2 == 0) return pred;  // no statement covers even q
            if (disc == F.neg(form.b)) {
                pred.source = PredictionSource::Thm3;
                pred.count = 2;
            } else {
                pred.source = PredictionSource::Conjecture6_5;
                pred.count = q + 3;
                pred.conjectural = true;
            }
            return pred;
        }
        case CanonicalTag::Scalar:
            return pred;  // deferred: no cardinality statement is implemented
    }
    return pred;
}

bool verify_residuals(const FieldCtx& F, const SolutionSet& S) {
    for (const auto& X : S.points)
        if (!is_zero(residual(F, S.A, X))) return false;
    for (const auto& comp : S.components)
        for (const auto& X : comp.members)
            if (!S.contains(X)) return false;
    return true;
}

}  // namespace ybme
