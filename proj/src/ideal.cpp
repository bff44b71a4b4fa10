#include "ybme/ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "scan_util.hpp"

namespace ybme {

namespace {

void require_same_ring(const PolyRing& a, const PolyRing& b, const char* what) {
    if (!(a == b))
        throw std::invalid_argument(std::string(what) + ": ring mismatch");
}

}  // namespace

MPoly s_poly(const PolyRing& R, const MPoly& f, const MPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_poly needs nonzero operands");
    const FieldCtx& F = *R.field;
    Monomial lcm = mono_lcm(f.leading().m, g.leading().m);
    Term tf{mono_div(lcm, f.leading().m), F.inv(f.leading().c)};
    Term tg{mono_div(lcm, g.leading().m), F.inv(g.leading().c)};
    return mp_sub(R, mp_mul_term(R, tf, f), mp_mul_term(R, tg, g));
}

MPoly normal_form(const PolyRing& R, MPoly f, const std::vector<MPoly>& G) {
    // Multivariate division keeping only the remainder.  The divisor is
    // always the first list element whose leading monomial divides the
    // current leading monomial, so the result is deterministic in G's order.
    const FieldCtx& F = *R.field;
    std::vector<Term> remainder;
    while (!f.is_zero()) {
        const Term lead = f.leading();
        bool reduced = false;
        for (const MPoly& g : G) {
            if (g.is_zero() || !g.leading().m.divides(lead.m)) continue;
            Term t{mono_div(lead.m, g.leading().m), F.div(lead.c, g.leading().c)};
            f = mp_sub(R, f, mp_mul_term(R, t, g));
            reduced = true;
            break;
        }
        if (!reduced) {
            // The leading monomial strictly decreases every round, so the
            // terms moved here arrive already in descending order.
            remainder.push_back(lead);
            f.terms.erase(f.terms.begin());
        }
    }
    return MPoly{std::move(remainder)};
}

GroebnerBasis buchberger(const IdealGens& I) {
    const PolyRing& R = I.ring;
    std::vector<MPoly> G;
    for (const MPoly& g : I.gens)
        if (!g.is_zero()) G.push_back(mp_monic(R, g));

    // Normal selection strategy: the open pair with the smallest lcm total
    // degree goes first, ties broken by index.  Basis elements are only ever
    // appended, so keys stay valid.
    using PairKey = std::tuple<unsigned, std::size_t, std::size_t>;
    std::set<PairKey> queue;
    auto push_pairs_with = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            Monomial lcm = mono_lcm(G[i].leading().m, G[k].leading().m);
            queue.insert({lcm.total_degree(), i, k});
        }
    };
    for (std::size_t k = 1; k < G.size(); ++k) push_pairs_with(k);

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        (void)deg;
        const Monomial& mi = G[i].leading().m;
        const Monomial& mj = G[j].leading().m;
        if (mono_lcm(mi, mj) == mono_mul(mi, mj)) continue;  // coprime leads
        MPoly r = normal_form(R, s_poly(R, G[i], G[j]), G);
        if (r.is_zero()) continue;
        G.push_back(mp_monic(R, r));
        push_pairs_with(G.size() - 1);
    }

    // Minimalize: drop any element whose leading monomial another kept
    // element's leading monomial divides.
    std::vector<char> drop(G.size(), 0);
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || drop[j]) continue;
            if (G[j].leading().m.divides(G[i].leading().m)) {
                drop[i] = 1;
                break;
            }
        }
    std::vector<MPoly> basis;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!drop[i]) basis.push_back(G[i]);

    // Tail-reduce each element modulo the others.  Leading monomials are now
    // pairwise indivisible, so one pass fully reduces: divisibility tests
    // depend only on the others' leading monomials, which no longer change.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<MPoly> others;
        others.reserve(basis.size() - 1);
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i) others.push_back(basis[j]);
        basis[i] = mp_monic(R, normal_form(R, basis[i], others));
        if (basis[i].is_zero())
            throw std::logic_error("minimal basis element reduced to zero");
    }

    std::sort(basis.begin(), basis.end(), [](const MPoly& a, const MPoly& b) {
        return b.leading().m < a.leading().m;
    });
    return {R, std::move(basis)};
}

bool ideal_contains(const GroebnerBasis& G, const MPoly& f) {
    return normal_form(G.ring, f, G.polys).is_zero();
}

bool same_ideal(const GroebnerBasis& A, const GroebnerBasis& B) {
    if (!(A.ring == B.ring)) return false;
    for (const MPoly& f : A.polys)
        if (!ideal_contains(B, f)) return false;
    for (const MPoly& g : B.polys)
        if (!ideal_contains(A, g)) return false;
    return true;
}

IdealGens ideal_product(const IdealGens& I, const IdealGens& J) {
    require_same_ring(I.ring, J.ring, "ideal_product");
    IdealGens out{I.ring, I.label + "*" + J.label, {}};
    out.gens.reserve(I.gens.size() * J.gens.size());
    for (const MPoly& f : I.gens)
        for (const MPoly& g : J.gens) {
            MPoly p = mp_mul(I.ring, f, g);
            if (!p.is_zero()) out.gens.push_back(std::move(p));
        }
    return out;
}

namespace {

// Move matrix-variable exponents from slots 0..3 into 1..4, freeing slot 0
// for t.  Lex order is preserved, so term lists stay canonical.
MPoly lift_to_elim(const MPoly& f) {
    MPoly out = f;
    for (Term& t : out.terms) {
        Monomial m;
        for (int k = 0; k < 4; ++k)
            m.e[static_cast<std::size_t>(k + 1)] = t.m.e[static_cast<std::size_t>(k)];
        t.m = m;
    }
    return out;
}

MPoly lower_from_elim(const MPoly& f) {
    MPoly out = f;
    for (Term& t : out.terms) {
        if (t.m.e[0] != 0)
            throw std::logic_error("polynomial still involves t");
        Monomial m;
        for (int k = 0; k < 4; ++k)
            m.e[static_cast<std::size_t>(k)] = t.m.e[static_cast<std::size_t>(k + 1)];
        t.m = m;
    }
    return out;
}

}  // namespace

IdealGens ideal_intersect(const IdealGens& I, const IdealGens& J) {
    require_same_ring(I.ring, J.ring, "ideal_intersect");
    if (I.ring.nvars != 4)
        throw std::invalid_argument("ideal_intersect needs the 4-variable ring");

    // Standard elimination: I cap J is the t-free part of t*I + (1-t)*J,
    // with t greatest in the lex order.
    PolyRing E = elimination_ring(I.ring.field);
    MPoly t = mp_var(E, 0);
    MPoly one_minus_t = mp_sub(E, mp_const(E, 1), t);
    IdealGens mixed{E, "elim", {}};
    for (const MPoly& f : I.gens)
        mixed.gens.push_back(mp_mul(E, t, lift_to_elim(f)));
    for (const MPoly& g : J.gens)
        mixed.gens.push_back(mp_mul(E, one_minus_t, lift_to_elim(g)));

    GroebnerBasis GB = buchberger(mixed);
    IdealGens out{I.ring, I.label + "&" + J.label, {}};
    for (const MPoly& p : GB.polys)
        if (p.leading().m.e[0] == 0) out.gens.push_back(lower_from_elim(p));
    return out;
}

bool radical_contains(const IdealGens& I, const MPoly& f) {
    if (I.ring.nvars != 4)
        throw std::invalid_argument("radical_contains needs the 4-variable ring");
    if (f.terms.empty()) return true;

    PolyRing E = elimination_ring(I.ring.field);
    MPoly t = mp_var(E, 0);
    IdealGens mixed{E, "rad", {}};
    for (const MPoly& g : I.gens) mixed.gens.push_back(lift_to_elim(g));
    mixed.gens.push_back(
        mp_sub(E, mp_const(E, 1), mp_mul(E, t, lift_to_elim(f))));
    return ideal_contains(buchberger(mixed), mp_const(E, 1));
}

IdealGens ybme_ideal(const FieldPtr& field, const Mat2& A, const std::string& label) {
    PolyRing R = matrix_entry_ring(field);
    struct Sym {
        MPoly e11, e12, e21, e22;
    };
    auto mul = [&R](const Sym& L, const Sym& M) {
        return Sym{
            mp_add(R, mp_mul(R, L.e11, M.e11), mp_mul(R, L.e12, M.e21)),
            mp_add(R, mp_mul(R, L.e11, M.e12), mp_mul(R, L.e12, M.e22)),
            mp_add(R, mp_mul(R, L.e21, M.e11), mp_mul(R, L.e22, M.e21)),
            mp_add(R, mp_mul(R, L.e21, M.e12), mp_mul(R, L.e22, M.e22)),
        };
    };
    Sym X{mp_var(R, 0), mp_var(R, 1), mp_var(R, 2), mp_var(R, 3)};
    Sym C{mp_const(R, A.x11), mp_const(R, A.x12), mp_const(R, A.x21),
          mp_const(R, A.x22)};
    Sym lhs = mul(mul(X, C), X);
    Sym rhs = mul(mul(C, X), C);

    IdealGens out{R, label, {}};
    for (MPoly entry : {mp_sub(R, lhs.e11, rhs.e11), mp_sub(R, lhs.e12, rhs.e12),
                        mp_sub(R, lhs.e21, rhs.e21), mp_sub(R, lhs.e22, rhs.e22)})
        if (!entry.is_zero()) out.gens.push_back(std::move(entry));
    return out;
}

IdealGens parse_ideal(const PolyRing& R, const std::string& label,
                      const std::vector<std::string>& gens) {
    IdealGens out{R, label, {}};
    for (const std::string& text : gens) {
        MPoly f = parse_mpoly(R, text);
        if (!f.is_zero()) out.gens.push_back(std::move(f));
    }
    return out;
}

std::vector<Mat2> variety_points(const IdealGens& I, unsigned max_q, ScanMode mode) {
    if (I.ring.nvars != 4)
        throw std::invalid_argument("variety_points needs the 4-variable ring");
    const FieldCtx& F = *I.ring.field;
    detail::check_scan_bound(F, max_q, "variety scan");
    return detail::scan_matrices(
        F,
        [&](const Mat2& M) {
            for (const MPoly& g : I.gens)
                if (mp_eval(I.ring, g, {M.x11, M.x12, M.x21, M.x22, 0}) != 0)
                    return false;
            return true;
        },
        mode);
}

}  // namespace ybme
