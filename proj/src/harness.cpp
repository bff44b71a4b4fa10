#include "ybme/harness.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

namespace ybme {

namespace {

using Clock = std::chrono::steady_clock;

VerdictReport finish(VerdictReport report, Clock::time_point t0) {
    report.overall_pass =
        std::all_of(report.records.begin(), report.records.end(),
                    [](const CaseRecord& r) { return r.pass; });
    report.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - t0).count();
    return report;
}

std::string kv(const char* k, Fq v) {
    return std::string(k) + "=" + std::to_string(v);
}

Mat2 companion_of(const FieldCtx& F, Fq a, Fq b) {
    return {0, F.neg(b), 1, a};
}

/// One matrix per similarity class: distinct diagonals with c1 < c2, all
/// Jordan blocks, all irreducible companions, all scalars.
std::vector<Mat2> canonical_representatives(const FieldCtx& F) {
    std::vector<Mat2> reps;
    for (Fq c1 : F.enumerate())
        for (Fq c2 : F.enumerate())
            if (c1 < c2) reps.push_back({c1, 0, 0, c2});
    for (Fq c : F.enumerate()) reps.push_back({c, 1, 0, c});
    for (Fq a : F.enumerate())
        for (Fq b : F.enumerate())
            if (quadratic_roots(F, a, b).empty())
                reps.push_back(companion_of(F, a, b));
    for (Fq c : F.enumerate()) reps.push_back(scalar(c));
    return reps;
}

std::vector<Mat2> conjugated_sorted(const FieldCtx& F, const Mat2& P,
                                    const std::vector<Mat2>& points) {
    std::vector<Mat2> out;
    out.reserve(points.size());
    for (const Mat2& X : points) out.push_back(conjugate(F, P, X));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

NablaSets nabla_sets(const FieldCtx& F) {
    if (F.q() % 2 == 0)
        throw std::invalid_argument(
            "the discriminant census needs odd q; in characteristic 2 the "
            "square criterion does not detect irreducibility");
    NablaSets N;
    N.q = F.q();
    for (Fq a : F.enumerate())
        for (Fq b : F.enumerate()) {
            Fq disc = F.sub(F.mul(a, a), F.mul(F.of_int(4), b));
            if (F.is_square(disc)) continue;
            if (disc == F.neg(b))
                N.nabla0.emplace_back(a, b);
            else
                N.nabla1.emplace_back(a, b);
        }
    return N;
}

const char* campaign_kind_name(CampaignKind k) {
    switch (k) {
        case CampaignKind::theorem: return "theorem";
        case CampaignKind::conjectural_evidence: return "conjectural evidence";
        case CampaignKind::data: return "data";
    }
    return "?";
}

VerdictReport verify_theorem1(const FieldPtr& F) {
    auto t0 = Clock::now();
    VerdictReport rep{"theorem1(" + F->spec_string() + ")",
                      CampaignKind::theorem,
                      false,
                      0.0,
                      {}};
    for (Fq c1 : F->enumerate())
        for (Fq c2 : F->enumerate()) {
            if (c1 == c2) continue;
            Mat2 A{c1, 0, 0, c2};
            SolutionSet S = solve(*F, A);
            SolutionSet O = brute_force_solutions(*F, A);
            CardinalityPrediction pred = predict_cardinality(*F, A);
            CaseRecord r;
            r.q = F->q();
            r.cls = "A1";
            r.params = kv("c1", c1) + "," + kv("c2", c2);
            r.claim = prediction_source_name(pred.source);
            r.predicted = pred.count;
            r.observed = S.cardinality();
            r.set_equal = S.points == O.points;
            r.provenance = provenance_name(S.provenance);
            r.pass = r.set_equal && r.observed == r.predicted;
            rep.records.push_back(std::move(r));
        }
    return finish(std::move(rep), t0);
}

VerdictReport verify_theorem2(const FieldPtr& F) {
    auto t0 = Clock::now();
    VerdictReport rep{"theorem2(" + F->spec_string() + ")",
                      CampaignKind::theorem,
                      false,
                      0.0,
                      {}};
    for (Fq c : F->enumerate()) {
        Mat2 A{c, 1, 0, c};
        SolutionSet S = solve(*F, A);
        SolutionSet O = brute_force_solutions(*F, A);
        CardinalityPrediction pred = predict_cardinality(*F, A);
        CaseRecord r;
        r.q = F->q();
        r.cls = "A2";
        r.params = kv("c", c);
        r.claim = prediction_source_name(pred.source);
        r.predicted = pred.count;
        r.observed = S.cardinality();
        r.set_equal = S.points == O.points;
        r.provenance = provenance_name(S.provenance);
        r.pass = r.set_equal && r.observed == r.predicted;
        rep.records.push_back(std::move(r));
    }
    return finish(std::move(rep), t0);
}

VerdictReport verify_theorem3(const FieldPtr& F) {
    auto t0 = Clock::now();
    VerdictReport rep{"theorem3(" + F->spec_string() + ")",
                      CampaignKind::theorem,
                      false,
                      0.0,
                      {}};
    NablaSets N = nabla_sets(*F);
    for (auto [a, b] : N.nabla0) {
        Mat2 A = companion_of(*F, a, b);
        SolutionSet S = solve(*F, A);
        SolutionSet O = brute_force_solutions(*F, A);
        CaseRecord r;
        r.q = F->q();
        r.cls = "A3";
        r.params = kv("a", a) + "," + kv("b", b);
        r.claim = "Thm3";
        r.predicted = 2;
        r.observed = S.cardinality();
        r.set_equal = S.points == O.points;
        r.provenance = provenance_name(S.provenance);
        // the two points must be exactly the trivial ones
        r.pass = r.set_equal && S.points == std::vector<Mat2>{Mat2{}, A};
        rep.records.push_back(std::move(r));
    }
    return finish(std::move(rep), t0);
}

VerdictReport check_conjecture(const FieldPtr& F) {
    auto t0 = Clock::now();
    VerdictReport rep{"conjecture(" + F->spec_string() + ")",
                      CampaignKind::conjectural_evidence,
                      false,
                      0.0,
                      {}};
    NablaSets N = nabla_sets(*F);
    for (auto [a, b] : N.nabla1) {
        Mat2 A = companion_of(*F, a, b);
        SolutionSet S = solve(*F, A);
        CaseRecord r;
        r.q = F->q();
        r.cls = "A3";
        r.params = kv("a", a) + "," + kv("b", b);
        r.claim = "Conjecture6_5";
        r.predicted = static_cast<std::uint64_t>(F->q()) + 3;
        r.observed = S.cardinality();
        r.set_equal = true;  // no closed form exists to compare against
        r.provenance = provenance_name(S.provenance);
        r.pass = r.observed == r.predicted;

        // raw structural data: how the solution set splits into orbits
        // under conjugation by the stabilizer of A
        std::vector<Mat2> stab = stabilizer(*F, A);
        std::set<Mat2> remaining(S.points.begin(), S.points.end());
        std::vector<std::size_t> sizes;
        while (!remaining.empty()) {
            std::set<Mat2> orbit;
            for (const Mat2& Q : stab) orbit.insert(conjugate(*F, Q, *remaining.begin()));
            for (const Mat2& y : orbit) remaining.erase(y);
            sizes.push_back(orbit.size());
        }
        std::sort(sizes.begin(), sizes.end());
        r.notes = "stabilizer orbit sizes:";
        for (std::size_t i = 0; i < sizes.size(); ++i)
            r.notes += (i ? "+" : " ") + std::to_string(sizes[i]);
        rep.records.push_back(std::move(r));
    }
    return finish(std::move(rep), t0);
}

VerdictReport verify_prop_3_2(const FieldPtr& F, Fq c1) {
    if (c1 == 0)
        throw std::invalid_argument("the rank-one diagonal identity needs c1 != 0");
    auto t0 = Clock::now();
    std::string params = kv("c1", c1);
    VerdictReport rep{"prop3_2(" + F->spec_string() + "," + params + ")",
                      CampaignKind::theorem,
                      false,
                      0.0,
                      {}};
    Mat2 A{c1, 0, 0, 0};
    PolyRing R = matrix_entry_ring(F);
    IdealGens J = ybme_ideal(F, A, "J");
    GroebnerBasis GJ = buchberger(J);
    IdealGens p1 = parse_ideal(R, "p1", {"x11", "x12"});
    IdealGens p2 = parse_ideal(R, "p2", {"x11", "x21"});
    IdealGens p3{R, "p3",
                 {mp_sub(R, mp_var(R, 0), mp_const(R, c1)), mp_var(R, 1),
                  mp_var(R, 2)}};

    CaseRecord prod_rec;
    prod_rec.q = F->q();
    prod_rec.cls = "A1";
    prod_rec.params = params;
    prod_rec.claim = "Prop3_2";
    prod_rec.has_predicted = false;
    IdealGens prod = ideal_product(ideal_product(p1, p2), p3);
    prod_rec.observed = prod.gens.size();
    prod_rec.pass = std::all_of(prod.gens.begin(), prod.gens.end(),
                                [&](const MPoly& g) { return ideal_contains(GJ, g); });
    prod_rec.notes = "p1*p2*p3 generators all reduce to zero modulo J";
    rep.records.push_back(std::move(prod_rec));

    CaseRecord meet_rec;
    meet_rec.q = F->q();
    meet_rec.cls = "A1";
    meet_rec.params = params;
    meet_rec.claim = "Prop3_2";
    meet_rec.has_predicted = false;
    IdealGens meet = ideal_intersect(ideal_intersect(p1, p2), p3);
    meet_rec.set_equal = same_ideal(buchberger(meet), GJ);
    meet_rec.pass = meet_rec.set_equal;
    meet_rec.notes = "J equals p1 & p2 & p3 by mutual membership";
    rep.records.push_back(std::move(meet_rec));

    CaseRecord var_rec;
    var_rec.q = F->q();
    var_rec.cls = "A1";
    var_rec.params = params;
    var_rec.claim = "Prop3_2";
    var_rec.predicted = 2ull * F->q() * F->q();
    std::vector<Mat2> pts = variety_points(J);
    var_rec.observed = pts.size();
    var_rec.set_equal = pts == brute_force_solutions(*F, A).points;
    var_rec.provenance = "oracle";
    var_rec.pass = var_rec.set_equal && var_rec.observed == var_rec.predicted;
    var_rec.notes = "V(J) is exactly the scanned solution set";
    rep.records.push_back(std::move(var_rec));

    return finish(std::move(rep), t0);
}

namespace {

Monomial mono(unsigned e11, unsigned e12, unsigned e21, unsigned e22) {
    Monomial m;
    m.e = {static_cast<std::uint8_t>(e11), static_cast<std::uint8_t>(e12),
           static_cast<std::uint8_t>(e21), static_cast<std::uint8_t>(e22), 0};
    return m;
}

MPoly from_terms(const PolyRing& R, std::vector<Term> terms) {
    return mp_normalize(R, std::move(terms));
}

/// The recorded reduced lex basis of the companion entry ideal in the
/// discriminant = -b regime, with coefficients given as rational functions
/// of (a, b); only valid when a (and hence b) is invertible.
std::vector<MPoly> recorded_companion_basis(const PolyRing& R, Fq a, Fq b) {
    const FieldCtx& F = *R.field;
    Fq ia = F.inv(a), ib = F.inv(b);
    Fq a_b = F.mul(a, ib);         // a/b
    Fq b_a = F.mul(b, ia);         // b/a
    Fq two = F.of_int(2), four = F.of_int(4);
    auto neg = [&](Fq x) { return F.neg(x); };

    MPoly s1 = from_terms(
        R, {{mono(1, 0, 0, 0), 1},
            {mono(0, 1, 0, 1), ib},
            {mono(0, 1, 0, 0), neg(a_b)},
            {mono(0, 0, 1, 1), neg(1)},
            {mono(0, 0, 1, 0), a},
            {mono(0, 0, 0, 2), a_b},
            {mono(0, 0, 0, 1), neg(F.mul(a, a_b))}});
    MPoly s2 = from_terms(
        R, {{mono(0, 2, 0, 0), 1},
            {mono(0, 1, 0, 1), a},
            {mono(0, 1, 0, 0), neg(b)},
            {mono(0, 0, 2, 0), neg(F.mul(b, b))},
            {mono(0, 0, 1, 1), F.mul(a, b)},
            {mono(0, 0, 1, 0), neg(F.mul(b, b))}});
    MPoly s3 = from_terms(
        R, {{mono(0, 1, 1, 0), 1},
            {mono(0, 1, 0, 1), neg(a_b)},
            {mono(0, 1, 0, 0), 1},
            {mono(0, 0, 2, 1), neg(F.mul(two, b_a))},
            {mono(0, 0, 1, 2), two},
            {mono(0, 0, 1, 1), b_a},
            {mono(0, 0, 1, 0), neg(b)},
            {mono(0, 0, 0, 3), neg(F.mul(two, ia))},
            {mono(0, 0, 0, 1), b_a}});
    MPoly s4 = from_terms(
        R, {{mono(0, 1, 0, 2), 1},
            {mono(0, 1, 0, 1), neg(a)},
            {mono(0, 1, 0, 0), b},
            {mono(0, 0, 2, 0), F.mul(b, b)},
            {mono(0, 0, 1, 2), neg(b)},
            {mono(0, 0, 0, 3), a},
            {mono(0, 0, 0, 2), neg(F.mul(a, a))},
            {mono(0, 0, 0, 1), F.mul(a, b)}});
    MPoly s5 = from_terms(
        R, {{mono(0, 0, 3, 0), 1},
            {mono(0, 0, 2, 1), neg(F.mul(four, ia))},
            {mono(0, 0, 2, 0), 1},
            {mono(0, 0, 1, 2), F.mul(two, ib)},
            {mono(0, 0, 1, 1), neg(F.mul(four, ia))},
            {mono(0, 0, 1, 0), 1},
            {mono(0, 0, 0, 3), neg(F.mul(ia, ib))},
            {mono(0, 0, 0, 2), ib},
            {mono(0, 0, 0, 1), neg(ia)}});
    MPoly s6 = from_terms(
        R, {{mono(0, 0, 2, 2), 1},
            {mono(0, 0, 2, 1), neg(a)},
            {mono(0, 0, 1, 3), neg(a_b)},
            {mono(0, 0, 1, 2), four},
            {mono(0, 0, 1, 1), neg(a)},
            {mono(0, 0, 0, 4), ib},
            {mono(0, 0, 0, 3), neg(F.mul(two, a_b))},
            {mono(0, 0, 0, 2), four},
            {mono(0, 0, 0, 1), neg(a)}});
    return {s1, s2, s3, s4, s5, s6};
}

}  // namespace

VerdictReport verify_lemma_5_4(const FieldPtr& F, Fq a, Fq b) {
    NablaSets N = nabla_sets(*F);
    if (std::find(N.nabla0.begin(), N.nabla0.end(), std::make_pair(a, b)) ==
        N.nabla0.end())
        throw std::invalid_argument(
            "(" + std::to_string(a) + "," + std::to_string(b) +
            ") is not an irreducible pair with discriminant = -b over F_" +
            std::to_string(F->q()));

    auto t0 = Clock::now();
    std::string params = kv("a", a) + "," + kv("b", b);
    VerdictReport rep{"lemma5_4(" + F->spec_string() + "," + params + ")",
                      CampaignKind::theorem,
                      false,
                      0.0,
                      {}};
    Mat2 A = companion_of(*F, a, b);
    PolyRing R = matrix_entry_ring(F);
    IdealGens J = ybme_ideal(F, A, "J");
    GroebnerBasis GJ = buchberger(J);

    const FieldCtx& K = *F;
    Fq a_b = K.div(a, b);
    MPoly g1 = from_terms(R, {{mono(1, 0, 0, 0), 1},
                              {mono(0, 0, 0, 1), 1},
                              {mono(0, 0, 0, 0), K.neg(a)}});
    MPoly g2 = from_terms(R, {{mono(0, 1, 0, 0), 1},
                              {mono(0, 0, 1, 0), K.neg(b)},
                              {mono(0, 0, 0, 1), a},
                              {mono(0, 0, 0, 0), K.neg(b)}});
    MPoly g3 = from_terms(R, {{mono(0, 0, 2, 0), 1},
                              {mono(0, 0, 1, 1), K.neg(a_b)},
                              {mono(0, 0, 1, 0), 1},
                              {mono(0, 0, 0, 2), K.inv(b)},
                              {mono(0, 0, 0, 1), K.neg(a_b)},
                              {mono(0, 0, 0, 0), 1}});
    MPoly h1 = from_terms(R, {{mono(1, 0, 0, 0), 1},
                              {mono(0, 0, 0, 1), K.of_int(2)},
                              {mono(0, 0, 0, 0), K.neg(a)}});
    MPoly h2 = from_terms(R, {{mono(0, 1, 0, 0), 1},
                              {mono(0, 0, 0, 1), a},
                              {mono(0, 0, 0, 0), K.neg(b)}});
    MPoly h3 = from_terms(R, {{mono(0, 0, 1, 0), 1},
                              {mono(0, 0, 0, 1), K.neg(a_b)},
                              {mono(0, 0, 0, 0), 1}});
    MPoly h4 = from_terms(R, {{mono(0, 0, 0, 2), 1},
                              {mono(0, 0, 0, 1), K.neg(a)},
                              {mono(0, 0, 0, 0), b}});
    IdealGens p1{R, "p1", {g1, g2, g3}};
    IdealGens p2{R, "p2", {h1, h2, h3, h4}};
    IdealGens p3 = parse_ideal(R, "p3", {"x11", "x12", "x21", "x22"});

    auto push = [&](std::string claim, bool pass, std::string notes,
                    bool has_pred = false, std::uint64_t pred = 0,
                    std::uint64_t obs = 0) {
        CaseRecord r;
        r.q = K.q();
        r.cls = "A3";
        r.params = params;
        r.claim = std::move(claim);
        r.has_predicted = has_pred;
        r.predicted = pred;
        r.observed = obs;
        r.pass = pass;
        r.notes = std::move(notes);
        rep.records.push_back(std::move(r));
    };

    for (const IdealGens* pi : {&p1, &p2, &p3}) {
        GroebnerBasis G = buchberger(*pi);
        bool ok = std::all_of(J.gens.begin(), J.gens.end(), [&](const MPoly& f) {
            return ideal_contains(G, f);
        });
        push("Lemma5_4", ok, "J is contained in " + pi->label);
    }

    // the recorded route: every product generator of p1*p3*p2 should have
    // normal form zero modulo J; report exactly what the division finds
    IdealGens prod = ideal_product(ideal_product(p1, p3), p2);
    std::size_t bad = 0;
    std::string first_bad;
    static const char* vn[4] = {"x11", "x12", "x21", "x22"};
    for (std::size_t idx = 0; idx < prod.gens.size(); ++idx)
        if (!ideal_contains(GJ, prod.gens[idx])) {
            if (bad == 0)
                first_bad = "g" + std::to_string(idx / 16 + 1) + "*" +
                            vn[(idx / 4) % 4] + "*h" +
                            std::to_string(idx % 4 + 1);
            ++bad;
        }
    push("Lemma5_4", bad == 0,
         bad == 0 ? "all " + std::to_string(prod.gens.size()) +
                        " generators of p1*p3*p2 reduce to zero modulo J"
                  : std::to_string(bad) + " of " +
                        std::to_string(prod.gens.size()) +
                        " generators of p1*p3*p2 have nonzero normal form"
                        " modulo J; first counterexample " +
                        first_bad);

    // the identity itself, checked without the product route: J sits inside
    // each component, and every generator of the intersection has a power
    // in J, so J and p1 & p2 & p3 have equal radicals
    IdealGens meet = ideal_intersect(ideal_intersect(p1, p2), p3);
    GroebnerBasis Gmeet = buchberger(meet);
    bool rad_ok = std::all_of(J.gens.begin(), J.gens.end(), [&](const MPoly& f) {
        return ideal_contains(Gmeet, f);
    });
    rad_ok = rad_ok && std::all_of(meet.gens.begin(), meet.gens.end(),
                                   [&](const MPoly& u) {
                                       return radical_contains(J, u);
                                   });
    push("Lemma5_4", rad_ok,
         "sqrt(J) = p1 & p2 & p3: J lies in the intersection and every"
         " intersection generator lies in the radical of J");

    if (a != 0) {
        GroebnerBasis recorded{R, recorded_companion_basis(R, a, b)};
        bool same = same_ideal(recorded, GJ);
        push("Lemma5_4", same,
             "recorded six-element basis generates the same ideal as J");
    } else {
        // the recorded basis divides by a; in characteristic 3 this regime
        // forces a = 0, so only the containment chain applies there
        push("Lemma5_4", true, "basis comparison skipped: a = 0");
    }

    std::vector<Mat2> v2 = variety_points(p2);
    push("Lemma5_4", v2.empty(), "V(p2) is empty", true, 0, v2.size());
    std::vector<Mat2> v3 = variety_points(p3);
    push("Lemma5_4", v3 == std::vector<Mat2>{Mat2{}}, "V(p3) is the origin",
         true, 1, v3.size());
    std::vector<Mat2> v1 = variety_points(p1);
    push("Lemma5_4", v1 == std::vector<Mat2>{A},
         "V(p1) is the companion matrix itself", true, 1, v1.size());

    return finish(std::move(rep), t0);
}

VerdictReport verify_section2_properties(const FieldPtr& F, unsigned trials,
                                         std::uint64_t seed) {
    auto t0 = Clock::now();
    VerdictReport rep{"section2(" + F->spec_string() + ")",
                      CampaignKind::theorem,
                      false,
                      0.0,
                      {}};
    const FieldCtx& K = *F;
    std::mt19937_64 rng(seed);
    auto rand_fq = [&] { return static_cast<Fq>(rng() % K.q()); };
    auto rand_mat = [&] { return Mat2{rand_fq(), rand_fq(), rand_fq(), rand_fq()}; };
    auto rand_invertible = [&] {
        for (;;) {
            Mat2 P = rand_mat();
            if (det(K, P) != 0) return P;
        }
    };

    bool transport_ok = true, cardinality_ok = true;
    for (unsigned t = 0; t < trials; ++t) {
        Mat2 B = rand_mat();
        Mat2 P = rand_invertible();
        SolutionSet SB = solve(K, B);
        SolutionSet SC = solve(K, conjugate(K, P, B));
        transport_ok &= SC.points == conjugated_sorted(K, P, SB.points);
        cardinality_ok &= SB.cardinality() == SC.cardinality();
    }
    CaseRecord tr;
    tr.q = K.q();
    tr.cls = "all";
    tr.params = "trials=" + std::to_string(trials) + ",seed=" + std::to_string(seed);
    tr.claim = "Prop2_1";
    tr.has_predicted = false;
    tr.pass = transport_ok;
    tr.notes = "conjugation maps solution sets onto solution sets";
    rep.records.push_back(tr);

    CaseRecord cr = tr;
    cr.claim = "Cor2_2";
    cr.pass = cardinality_ok;
    cr.notes = "similar matrices have equally many solutions";
    rep.records.push_back(cr);

    if (K.q() == 2) {
        bool ok = true;
        std::vector<Mat2> gl2 = gl2_enumerate(K);
        for (std::uint64_t i = 0; i < mat_count(K); ++i) {
            Mat2 B = mat_at(K, i);
            SolutionSet SB = solve(K, B);
            for (const Mat2& P : gl2) {
                SolutionSet SC = solve(K, conjugate(K, P, B));
                ok &= SC.points == conjugated_sorted(K, P, SB.points);
            }
        }
        CaseRecord ex;
        ex.q = 2;
        ex.cls = "all";
        ex.params = "exhaustive";
        ex.claim = "Prop2_1";
        ex.has_predicted = false;
        ex.pass = ok;
        ex.notes = "every matrix against every invertible conjugator";
        rep.records.push_back(ex);
    }

    if (K.q() <= 5) {
        bool stable = true;
        for (const Mat2& A : canonical_representatives(K)) {
            SolutionSet S = solve(K, A);
            for (const Mat2& Q : stabilizer(K, A))
                stable &= conjugated_sorted(K, Q, S.points) == S.points;
        }
        CaseRecord st;
        st.q = K.q();
        st.cls = "all";
        st.params = "exhaustive canonical representatives";
        st.claim = "Prop2_3";
        st.has_predicted = false;
        st.pass = stable;
        st.notes = "solution sets are fixed setwise by the stabilizer";
        rep.records.push_back(st);
    }

    return finish(std::move(rep), t0);
}

VerdictReport observe_even_char_companions(const FieldPtr& F) {
    if (F->q() % 2 != 0)
        throw std::invalid_argument("this data sweep is for even q only");
    auto t0 = Clock::now();
    VerdictReport rep{"even_companion_data(" + F->spec_string() + ")",
                      CampaignKind::data,
                      false,
                      0.0,
                      {}};
    for (Fq a : F->enumerate())
        for (Fq b : F->enumerate()) {
            if (!quadratic_roots(*F, a, b).empty()) continue;
            Mat2 A = companion_of(*F, a, b);
            SolutionSet S = brute_force_solutions(*F, A);
            CaseRecord r;
            r.q = F->q();
            r.cls = "A3";
            r.params = kv("a", a) + "," + kv("b", b);
            r.claim = "none";
            r.has_predicted = false;
            r.observed = S.cardinality();
            r.provenance = provenance_name(S.provenance);
            r.pass = true;  // observation only, no statement to fail
            r.notes = "no formula is claimed in even characteristic";
            rep.records.push_back(std::move(r));
        }
    return finish(std::move(rep), t0);
}

std::vector<VerdictReport> run_default_campaigns(std::uint64_t seed) {
    std::vector<VerdictReport> out;
    auto field = [](unsigned q) { return parse_field_spec(std::to_string(q)); };

    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
        out.push_back(verify_theorem1(field(q)));
        out.push_back(verify_theorem2(field(q)));
    }
    for (unsigned q : {3u, 5u, 7u, 9u, 11u, 13u})
        out.push_back(verify_theorem3(field(q)));
    for (unsigned q : {3u, 5u, 7u, 11u, 13u})
        out.push_back(check_conjecture(field(q)));
    for (unsigned q : {2u, 3u, 5u, 11u}) {
        auto F = field(q);
        for (Fq c1 = 1; c1 < F->q(); ++c1)
            out.push_back(verify_prop_3_2(F, c1));
    }
    for (unsigned q : {3u, 5u, 11u}) {
        auto F = field(q);
        for (auto [a, b] : nabla_sets(*F).nabla0)
            out.push_back(verify_lemma_5_4(F, a, b));
    }
    for (unsigned q : {2u, 3u, 4u, 5u, 7u})
        out.push_back(verify_section2_properties(field(q), 100, seed));
    for (unsigned q : {2u, 4u, 8u})
        out.push_back(observe_even_char_companions(field(q)));
    return out;
}

}  // namespace ybme
