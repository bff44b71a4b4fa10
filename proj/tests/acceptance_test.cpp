// Acceptance gate for the whole toolkit: eight criteria, one verdict line
// each, nonzero exit when any criterion fails.  Set comparisons are exact
// (zero tolerance); the only numeric knobs are the wall-clock budgets below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ybme/harness.hpp"
#include "ybme/ideal.hpp"
#include "ybme/solve.hpp"

using namespace ybme;

namespace {

constexpr double kBudgetExampleSeconds = 1.0;     // criteria 1 to 3, per solve
constexpr double kBudgetSweepSeconds = 120.0;     // criterion 4 in total
constexpr double kBudgetExtensionSeconds = 300.0; // criterion 6, q = 13 run
constexpr double kBudgetBasisSeconds = 10.0;      // criterion 7, per campaign
constexpr double kBudgetPropertySeconds = 60.0;   // criterion 8 in total

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::set<Mat2> as_set(const std::vector<Mat2>& v) {
    return std::set<Mat2>(v.begin(), v.end());
}

bool same_set(const SolutionSet& S, const std::vector<Mat2>& expected) {
    return as_set(S.points) == as_set(expected);
}

struct Line {
    bool pass = true;
    std::vector<std::string> details;

    void note(const std::string& s) { details.push_back(s); }
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            details.push_back("FAIL: " + what);
        }
    }
};

void print_line(int index, const char* title, const Line& line) {
    std::printf("criterion %d: %s  %s\n", index, line.pass ? "PASS" : "FAIL",
                title);
    for (const std::string& d : line.details)
        std::printf("    %s\n", d.c_str());
}

// rank-one diagonal matrix over F_2: the recorded eight-element set
Line criterion1() {
    Line line;
    Clock::time_point t0 = Clock::now();
    FieldPtr F = parse_field_spec("2");
    SolutionSet S = solve(*F, {1, 0, 0, 0});
    std::vector<Mat2> expected = {
        {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1},
        {0, 1, 0, 0}, {0, 1, 0, 1}, {1, 0, 0, 0}, {1, 0, 0, 1},
    };
    line.require(same_set(S, expected), "solved set differs from the recorded "
                                        "eight matrices over F_2");
    double dt = seconds_since(t0);
    line.require(dt < kBudgetExampleSeconds, "runtime over budget");
    line.note("8 points, " + std::to_string(dt) + " s");
    return line;
}

// diag(1,2) over F_3 and F_7, with the corner-entry and product constraints
// of the ten-element set made explicit
Line criterion2() {
    Line line;
    Clock::time_point t0 = Clock::now();

    FieldPtr F3 = parse_field_spec("3");
    SolutionSet S3 = solve(*F3, {1, 0, 0, 2});
    std::vector<Mat2> expected3 = {
        {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}, {1, 0, 0, 2},
        {1, 0, 1, 2}, {1, 0, 2, 2}, {1, 1, 0, 2}, {1, 2, 0, 2},
    };
    line.require(same_set(S3, expected3),
                 "solved set differs from the recorded eight matrices over F_3");

    FieldPtr F7 = parse_field_spec("7");
    SolutionSet S7 = solve(*F7, {1, 0, 0, 2});
    std::vector<Mat2> expected7 = {
        {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}, {1, 0, 0, 2}, {4, 1, 1, 6},
        {4, 2, 4, 6}, {4, 3, 5, 6}, {4, 4, 2, 6}, {4, 5, 3, 6}, {4, 6, 6, 6},
    };
    line.require(same_set(S7, expected7),
                 "solved set differs from the recorded ten matrices over F_7");
    std::size_t family = 0;
    for (const Mat2& X : S7.points)
        if (X.x12 != 0 || X.x21 != 0) {
            ++family;
            line.require(X.x11 == 4 && X.x22 == 6,
                         "family corner entries are not 4 and 6");
            line.require(F7->mul(X.x12, X.x21) == 1,
                         "family off-diagonal product is not 1");
        }
    line.require(family == 6, "family size is not 6");

    double dt = seconds_since(t0);
    line.require(dt < kBudgetExampleSeconds, "runtime over budget");
    line.note("8 + 10 points, " + std::to_string(dt) + " s");
    return line;
}

// Jordan blocks over F_5 with eigenvalues 2 and 3: both recorded sets
Line criterion3() {
    Line line;
    Clock::time_point t0 = Clock::now();
    FieldPtr F = parse_field_spec("5");

    SolutionSet S2 = solve(*F, {2, 1, 0, 2});
    std::vector<Mat2> expected2 = {
        {0, 0, 0, 0}, {2, 1, 0, 2}, {0, 1, 1, 4}, {1, 4, 1, 3},
        {2, 0, 1, 2}, {3, 4, 1, 1}, {4, 1, 1, 0},
    };
    line.require(same_set(S2, expected2),
                 "solved set differs from the recorded seven matrices, c = 2");

    SolutionSet S3 = solve(*F, {3, 1, 0, 3});
    std::vector<Mat2> expected3 = {
        {0, 0, 0, 0}, {3, 1, 0, 3}, {2, 4, 1, 4}, {3, 0, 1, 3},
        {4, 4, 1, 2}, {0, 1, 1, 1}, {1, 1, 1, 0},
    };
    line.require(same_set(S3, expected3),
                 "solved set differs from the recorded seven matrices, c = 3");

    double dt = seconds_since(t0);
    line.require(dt < kBudgetExampleSeconds, "runtime over budget");
    line.note("7 + 7 points, " + std::to_string(dt) + " s");
    return line;
}

// every closed-form count and set against the exhaustive oracle
Line criterion4() {
    Line line;
    Clock::time_point t0 = Clock::now();
    for (const char* spec :
         {"2", "3", "2^2", "5", "7", "2^3", "3^2", "11", "13"}) {
        FieldPtr F = parse_field_spec(spec);
        VerdictReport t1 = verify_theorem1(F);
        VerdictReport t2 = verify_theorem2(F);
        line.require(t1.overall_pass,
                     std::string("distinct-diagonal sweep fails at ") + spec);
        line.require(t2.overall_pass,
                     std::string("Jordan sweep fails at ") + spec);
        if (F->q() % 2 == 1) {
            VerdictReport t3 = verify_theorem3(F);
            line.require(t3.overall_pass,
                         std::string("companion sweep fails at ") + spec);
        }
    }
    double dt = seconds_since(t0);
    line.require(dt < kBudgetSweepSeconds, "runtime over budget");
    line.note("9 fields, " + std::to_string(dt) + " s");
    return line;
}

// discriminant census against the recorded tables
Line criterion5() {
    Line line;
    using P = std::vector<std::pair<Fq, Fq>>;

    NablaSets n3 = nabla_sets(*parse_field_spec("3"));
    line.require(n3.nabla0 == P{{0, 1}}, "nabla0(3) differs");
    line.require(n3.nabla1 == P{{1, 2}, {2, 2}}, "nabla1(3) differs");

    NablaSets n5 = nabla_sets(*parse_field_spec("5"));
    line.require(n5.nabla0 == P{{1, 2}, {2, 3}, {3, 3}, {4, 2}},
                 "nabla0(5) differs");
    line.require(n5.nabla1 == P{{0, 2}, {0, 3}, {1, 1}, {2, 4}, {3, 4}, {4, 1}},
                 "nabla1(5) differs");

    NablaSets n7 = nabla_sets(*parse_field_spec("7"));
    line.require(n7.nabla0.empty(), "nabla0(7) is not empty");
    line.require(n7.nabla1.size() == 21, "nabla1(7) does not have 21 pairs");

    NablaSets n11 = nabla_sets(*parse_field_spec("11"));
    line.require(n11.nabla0 == P{{1, 4},
                                 {2, 5},
                                 {3, 3},
                                 {4, 9},
                                 {5, 1},
                                 {6, 1},
                                 {7, 9},
                                 {8, 3},
                                 {9, 5},
                                 {10, 4}},
                 "nabla0(11) differs");
    line.require(n11.nabla1.size() == 45, "nabla1(11) does not have 45 pairs");

    line.note("q in {3, 5, 7, 11}, exact");
    return line;
}

// the open q + 3 count on every remaining irreducible pair, plus the q = 13
// extension, all labeled as evidence rather than proof
Line criterion6() {
    Line line;
    for (const char* spec : {"3", "5", "7", "11"}) {
        VerdictReport rep = check_conjecture(parse_field_spec(spec));
        line.require(rep.overall_pass,
                     std::string("a pair misses q + 3 at q = ") + spec);
        line.require(rep.kind == CampaignKind::conjectural_evidence,
                     std::string("report not labeled conjectural at q = ") +
                         spec);
    }
    Clock::time_point t0 = Clock::now();
    VerdictReport ext = check_conjecture(parse_field_spec("13"));
    double dt = seconds_since(t0);
    line.require(ext.overall_pass, "a pair misses q + 3 at q = 13");
    line.require(ext.kind == CampaignKind::conjectural_evidence,
                 "report not labeled conjectural at q = 13");
    line.require(dt < kBudgetExtensionSeconds, "q = 13 runtime over budget");
    line.note("q = 13 extension " + std::to_string(dt) + " s, " +
              std::to_string(ext.records.size()) + " pairs");
    return line;
}

// ideal identities for the rank-one diagonal and companion settings.  The
// recorded route for the companion product containment is genuinely false
// and is reported as such; see the campaign notes for the counterexamples.
Line criterion7() {
    Line line;
    double max_campaign = 0.0;

    bool prop_ok = true;
    for (const char* spec : {"2", "3", "5"}) {
        FieldPtr F = parse_field_spec(spec);
        for (Fq c1 = 1; c1 < F->q(); ++c1) {
            VerdictReport rep = verify_prop_3_2(F, c1);
            prop_ok = prop_ok && rep.overall_pass;
            max_campaign = std::max(max_campaign, rep.elapsed_seconds);
        }
    }
    line.require(prop_ok, "rank-one diagonal ideal identity");
    if (prop_ok)
        line.note("rank-one diagonal identity and product containment: pass "
                  "for q in {2, 3, 5}, every nonzero c1");

    struct Target {
        const char* spec;
        Fq a, b;
    };
    for (Target t : {Target{"5", 1, 2}, Target{"11", 5, 1}}) {
        VerdictReport rep = verify_lemma_5_4(parse_field_spec(t.spec), t.a, t.b);
        max_campaign = std::max(max_campaign, rep.elapsed_seconds);
        const std::vector<CaseRecord>& r = rep.records;
        std::string where = std::string("q=") + t.spec +
                            ",a=" + std::to_string(t.a) +
                            ",b=" + std::to_string(t.b);
        line.require(r[0].pass && r[1].pass && r[2].pass,
                     "J inside each component ideal at " + where);
        line.require(r[5].pass, "recorded basis does not generate J at " + where);
        line.require(r[6].pass && r[7].pass && r[8].pass,
                     "component varieties at " + where);
        line.require(r[3].pass, "product containment at " + where + ": " +
                                    r[3].notes);
        if (r[4].pass)
            line.note("radical identity holds at " + where +
                      ": every intersection generator is radical-inside J");
    }
    line.require(max_campaign < kBudgetBasisSeconds,
                 "a basis campaign ran over budget");
    line.note("max campaign " + std::to_string(max_campaign) + " s");
    return line;
}

Mat2 random_matrix(const FieldCtx& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> d(0, F.q() - 1);
    return {static_cast<Fq>(d(rng)), static_cast<Fq>(d(rng)),
            static_cast<Fq>(d(rng)), static_cast<Fq>(d(rng))};
}

std::vector<Mat2> representatives(const FieldCtx& F) {
    std::vector<Mat2> reps;
    for (Fq c1 = 0; c1 < F.q(); ++c1)
        for (Fq c2 = c1 + 1; c2 < F.q(); ++c2) reps.push_back({c1, 0, 0, c2});
    for (Fq c = 0; c < F.q(); ++c) reps.push_back({c, 1, 0, c});
    for (Fq a = 0; a < F.q(); ++a)
        for (Fq b = 0; b < F.q(); ++b)
            if (quadratic_roots(F, a, b).empty())
                reps.push_back({0, F.neg(b), 1, a});
    for (Fq c = 0; c < F.q(); ++c) reps.push_back(scalar(c));
    return reps;
}

// structural properties with no recorded numbers behind them
Line criterion8() {
    Line line;
    Clock::time_point t0 = Clock::now();
    std::mt19937_64 rng(20250822);

    // field axioms on random triples
    for (const char* spec :
         {"2", "3", "2^2", "5", "7", "2^3", "3^2", "11", "13", "2^4"}) {
        FieldPtr F = parse_field_spec(spec);
        std::uniform_int_distribution<unsigned> d(0, F->q() - 1);
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            Fq a = static_cast<Fq>(d(rng));
            Fq b = static_cast<Fq>(d(rng));
            Fq c = static_cast<Fq>(d(rng));
            ok = ok && F->add(F->add(a, b), c) == F->add(a, F->add(b, c));
            ok = ok && F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c));
            ok = ok && F->add(a, b) == F->add(b, a);
            ok = ok && F->mul(a, b) == F->mul(b, a);
            ok = ok && F->mul(a, F->add(b, c)) ==
                           F->add(F->mul(a, b), F->mul(a, c));
            ok = ok && F->add(a, F->neg(a)) == 0;
            if (a != 0) ok = ok && F->mul(a, F->inv(a)) == 1;
        }
        line.require(ok, std::string("field axioms fail over F_") + spec);
    }

    // Cayley-Hamilton on every matrix
    for (const char* spec : {"2", "3", "2^2", "5"}) {
        FieldPtr F = parse_field_spec(spec);
        bool ok = true;
        for (std::uint64_t i = 0; i < mat_count(*F) && ok; ++i) {
            Mat2 A = mat_at(*F, i);
            ok = is_zero(eval_poly_at(*F, char_poly(*F, A), A));
        }
        line.require(ok, std::string("Cayley-Hamilton fails over F_") + spec);
    }

    // every S-polynomial of every computed basis reduces to zero
    for (const char* spec : {"2", "3"}) {
        FieldPtr F = parse_field_spec(spec);
        bool ok = true;
        for (std::uint64_t i = 0; i < mat_count(*F) && ok; ++i) {
            GroebnerBasis G = buchberger(ybme_ideal(F, mat_at(*F, i)));
            for (std::size_t j = 0; j < G.polys.size() && ok; ++j)
                for (std::size_t k = j + 1; k < G.polys.size() && ok; ++k)
                    ok = normal_form(G.ring, s_poly(G.ring, G.polys[j],
                                                    G.polys[k]),
                                     G.polys)
                             .terms.empty();
        }
        line.require(ok, std::string("an S-polynomial does not reduce to zero "
                                     "over F_") +
                             spec);
    }

    // similarity transport on seeded random pairs
    for (const char* spec : {"2", "3", "2^2", "5", "7"}) {
        FieldPtr F = parse_field_spec(spec);
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i) {
            Mat2 B = random_matrix(*F, rng);
            Mat2 P = random_matrix(*F, rng);
            if (det(*F, P) == 0) continue;
            SolutionSet S = solve(*F, B);
            SolutionSet T = solve(*F, conjugate(*F, P, B));
            std::vector<Mat2> moved;
            moved.reserve(S.points.size());
            for (const Mat2& X : S.points)
                moved.push_back(conjugate(*F, P, X));
            std::sort(moved.begin(), moved.end());
            ok = moved == T.points;
        }
        line.require(ok, std::string("similarity transport fails over F_") +
                             spec);
    }

    // stabilizer elements must fix each solution set as a set
    for (const char* spec : {"2", "3", "2^2", "5"}) {
        FieldPtr F = parse_field_spec(spec);
        bool ok = true;
        for (const Mat2& A : representatives(*F)) {
            SolutionSet S = solve(*F, A);
            for (const Mat2& Q : stabilizer(*F, A)) {
                std::vector<Mat2> moved;
                moved.reserve(S.points.size());
                for (const Mat2& X : S.points)
                    moved.push_back(conjugate(*F, Q, X));
                std::sort(moved.begin(), moved.end());
                ok = ok && moved == S.points;
            }
            if (!ok) break;
        }
        line.require(ok, std::string("stabilizer stability fails over F_") +
                             spec);
    }

    double dt = seconds_since(t0);
    line.require(dt < kBudgetPropertySeconds, "runtime over budget");
    line.note("all property families, " + std::to_string(dt) + " s");
    return line;
}

}  // namespace

int main() {
    struct Entry {
        const char* title;
        Line (*run)();
    };
    const Entry entries[] = {
        {"rank-one diagonal solutions over F_2 match the recorded set",
         criterion1},
        {"distinct-diagonal solutions over F_3 and F_7 match the recorded "
         "sets",
         criterion2},
        {"Jordan solutions over F_5 match both recorded sets", criterion3},
        {"closed forms equal the exhaustive oracle on the full sweep grid",
         criterion4},
        {"discriminant census matches the recorded tables", criterion5},
        {"every remaining irreducible pair shows the conjectured q + 3 count",
         criterion6},
        {"ideal identities hold as recorded", criterion7},
        {"structural property suites hold", criterion8},
    };

    int failures = 0;
    int index = 1;
    for (const Entry& e : entries) {
        Line line = e.run();
        print_line(index, e.title, line);
        if (!line.pass) ++failures;
        ++index;
    }
    std::printf("%d of 8 criteria pass\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
