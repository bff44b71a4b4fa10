#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ybme/field.hpp"

using namespace ybme;

namespace {

// Independent modulus oracle: multiply out every pair of lower-degree monic
// polynomials over F_p and mark their products reducible; the first monic
// survivor in (c_0, ..., c_{s-1}) tuple order is the expected modulus.
std::vector<unsigned> expected_modulus(unsigned p, unsigned s) {
    auto tuple_at = [&](unsigned d, unsigned m) {
        std::vector<unsigned> c(d + 1, 0);
        c[d] = 1;
        for (unsigned i = 0; i < d; ++i) {
            c[d - 1 - i] = m % p;
            m /= p;
        }
        return c;
    };
    auto mul = [&](const std::vector<unsigned>& f, const std::vector<unsigned>& g) {
        std::vector<unsigned> r(f.size() + g.size() - 1, 0);
        for (unsigned i = 0; i < f.size(); ++i)
            for (unsigned j = 0; j < g.size(); ++j)
                r[i + j] = (r[i + j] + f[i] * g[j]) % p;
        return r;
    };
    std::set<std::vector<unsigned>> reducible;
    for (unsigned d1 = 1; d1 < s; ++d1) {
        unsigned d2 = s - d1;
        unsigned n1 = 1, n2 = 1;
        for (unsigned k = 0; k < d1; ++k) n1 *= p;
        for (unsigned k = 0; k < d2; ++k) n2 *= p;
        for (unsigned m1 = 0; m1 < n1; ++m1)
            for (unsigned m2 = 0; m2 < n2; ++m2)
                reducible.insert(mul(tuple_at(d1, m1), tuple_at(d2, m2)));
    }
    unsigned count = 1;
    for (unsigned k = 0; k < s; ++k) count *= p;
    for (unsigned m = 0; m < count; ++m) {
        auto f = tuple_at(s, m);
        if (!reducible.count(f)) return f;
    }
    return {};
}

}  // namespace

TEST_CASE("moduli are the lexicographically first irreducibles") {
    // F_4: x^2 + x + 1 is the only monic irreducible quadratic over F_2
    auto f4 = make_field(2, 2);
    CHECK(f4->modulus() == std::vector<Fq>{1, 1, 1});

    // F_9: x^2 + 1 comes before x^2 + x + 2 etc. in tuple order
    auto f9 = make_field(3, 2);
    CHECK(f9->modulus() == std::vector<Fq>{1, 0, 1});

    // tuple order puts the constant coefficient first, so x^3 + x^2 + 1
    // precedes x^3 + x + 1: (1,0,1) < (1,1,0)
    auto f8 = make_field(2, 3);
    CHECK(f8->modulus() == std::vector<Fq>{1, 0, 1, 1});

    auto f16 = make_field(2, 4);
    CHECK(f16->modulus() == std::vector<Fq>{1, 0, 0, 1, 1});  // x^4 + x^3 + 1

    for (auto [p, s] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {2u, 4u},
                        {5u, 2u}, {3u, 3u}}) {
        auto F = make_field(p, s);
        auto want = expected_modulus(p, s);
        std::vector<unsigned> got(F->modulus().begin(), F->modulus().end());
        CAPTURE(p);
        CAPTURE(s);
        CHECK(got == want);
    }
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 11), std::invalid_argument);  // 2048 > 1024
    CHECK_NOTHROW(make_field(2, 10));
    CHECK_NOTHROW(make_field(2, 11, 4096));
}

TEST_CASE("field spec strings parse and round-trip") {
    CHECK(parse_field_spec("7")->q() == 7);
    CHECK(parse_field_spec("3^2")->q() == 9);
    CHECK(parse_field_spec("9")->q() == 9);  // plain prime powers factor
    CHECK(parse_field_spec("2^4")->spec_string() == "2^4");
    CHECK(parse_field_spec("5")->spec_string() == "5");
    CHECK_THROWS_AS(parse_field_spec("6"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_spec("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_spec("2^"), std::invalid_argument);
}

TEST_CASE("F_4 multiplication table") {
    auto F = make_field(2, 2);
    // encoding 2 is the residue of x; x * x = x + 1 = encoding 3
    CHECK(F->mul(2, 2) == 3);
    CHECK(F->mul(2, 3) == 1);  // x(x+1) = x^2 + x = 1
    CHECK(F->mul(3, 3) == 2);  // (x+1)^2 = x^2 + 1 = x
    CHECK(F->add(2, 3) == 1);
}

TEST_CASE("inverses: worked examples and the product check") {
    auto f5 = make_field(5, 1);
    CHECK(f5->inv(3) == 2);

    // inv(x) in F_9 with modulus x^2 + 1: x * (-x) = -x^2 = 1, -x = 2x = enc 6
    auto f9 = make_field(3, 2);
    CHECK(f9->inv(3) == 6);
    CHECK(f9->mul(3, 6) == 1);

    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
        auto F = parse_field_spec(std::to_string(q));
        for (Fq x = 1; x < F->q(); ++x) {
            CAPTURE(q);
            CAPTURE(x);
            CHECK(F->mul(x, F->inv(x)) == 1);
        }
        CHECK_THROWS_AS(F->inv(0), std::domain_error);
        CHECK_THROWS_AS(F->div(1, 0), std::domain_error);
    }
}

TEST_CASE("squares: Euler criterion against the exhaustive table") {
    auto f7 = make_field(7, 1);
    for (Fq x : {0, 1, 2, 4}) CHECK(f7->is_square(x));
    for (Fq x : {3, 5, 6}) CHECK(!f7->is_square(x));

    for (unsigned q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u, 49u}) {
        auto F = parse_field_spec(std::to_string(q));
        std::set<Fq> squares;
        for (Fq x = 0; x < F->q(); ++x) squares.insert(F->mul(x, x));
        // exactly (q+1)/2 squares in odd order, and the criterion agrees
        CHECK(squares.size() == (q + 1) / 2);
        for (Fq x = 0; x < F->q(); ++x) {
            CAPTURE(q);
            CAPTURE(x);
            CHECK(F->is_square(x) == (squares.count(x) > 0));
        }
    }

    // even order: squaring is onto
    for (unsigned q : {2u, 4u, 8u, 16u}) {
        auto F = parse_field_spec(std::to_string(q));
        std::set<Fq> squares;
        for (Fq x = 0; x < F->q(); ++x) squares.insert(F->mul(x, x));
        CHECK(squares.size() == q);
        for (Fq x = 0; x < F->q(); ++x) CHECK(F->is_square(x));
    }
}

TEST_CASE("field axioms on seeded random triples") {
    std::mt19937_64 rng(20240817);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        auto F = parse_field_spec(std::to_string(q));
        std::uniform_int_distribution<unsigned> pick(0, q - 1);
        for (int trial = 0; trial < 1000; ++trial) {
            Fq a = static_cast<Fq>(pick(rng));
            Fq b = static_cast<Fq>(pick(rng));
            Fq c = static_cast<Fq>(pick(rng));
            CAPTURE(q);
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(c);
            // (a + b) + c = a + (b + c)
            CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
            // (a b) c = a (b c)
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            // a (b + c) = a b + a c
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            // commutativity and units
            CHECK(F->add(a, b) == F->add(b, a));
            CHECK(F->mul(a, b) == F->mul(b, a));
            CHECK(F->add(a, 0) == a);
            CHECK(F->mul(a, 1) == a);
            CHECK(F->add(a, F->neg(a)) == 0);
            CHECK(F->sub(a, b) == F->add(a, F->neg(b)));
        }
    }
}

TEST_CASE("Frobenius: p-th power is additive and q-th power is identity") {
    for (unsigned q : {4u, 8u, 9u, 16u, 25u, 27u}) {
        auto F = parse_field_spec(std::to_string(q));
        unsigned p = F->p();
        for (Fq x = 0; x < F->q(); ++x) {
            CHECK(F->pow(x, q) == x);
            for (Fq y = 0; y < F->q(); ++y)
                CHECK(F->pow(F->add(x, y), p) ==
                      F->add(F->pow(x, p), F->pow(y, p)));
        }
    }
}

TEST_CASE("coefficient view round-trips") {
    auto F = make_field(3, 2);
    for (Fq x = 0; x < F->q(); ++x) {
        auto c = F->coeffs(x);
        REQUIRE(c.size() == 2);
        CHECK(F->from_coeffs(c) == x);
        CHECK(c[0] + 3 * c[1] == x);
    }
    CHECK_THROWS_AS(F->from_coeffs({1}), std::invalid_argument);
    CHECK_THROWS_AS(F->from_coeffs({3, 0}), std::invalid_argument);
}

TEST_CASE("out-of-range encodings are rejected") {
    auto F = make_field(5, 1);
    CHECK_THROWS_AS(F->add(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(F->mul(0, 200), std::invalid_argument);
    CHECK_THROWS_AS(F->is_square(9), std::invalid_argument);
    auto all = F->enumerate();
    CHECK(all.size() == 5);
    CHECK(all.front() == 0);
    CHECK(all.back() == 4);
}
