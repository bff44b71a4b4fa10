#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ybme/field.hpp"

namespace ybme {

/// Polynomial ring F_q[x11, x12, x21, x22], optionally extended by an
/// elimination variable t that sorts above everything else.  The monomial
/// order is lexicographic with x11 > x12 > x21 > x22 (and t greatest).
struct PolyRing {
    FieldPtr field;
    int nvars = 4;  // 4, or 5 with t in front

    const std::vector<std::string>& names() const;
    bool operator==(const PolyRing& o) const {
        return field->q() == o.field->q() && nvars == o.nvars;
    }
};

PolyRing matrix_entry_ring(FieldPtr field);
PolyRing elimination_ring(FieldPtr field);

/// Exponent tuple; slot 0 is the greatest variable.  Unused slots stay 0.
struct Monomial {
    std::array<std::uint8_t, 5> e{};
    auto operator<=>(const Monomial&) const = default;

    unsigned total_degree() const;
    bool divides(const Monomial& m) const;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

struct Term {
    Monomial m;
    Fq c = 0;
    bool operator==(const Term&) const = default;
};

/// Terms strictly descending in the monomial order, no zero coefficients.
struct MPoly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& leading() const { return terms.front(); }
    bool operator==(const MPoly&) const = default;
};

MPoly mp_zero();
MPoly mp_const(const PolyRing& R, Fq c);
MPoly mp_var(const PolyRing& R, int var);

/// Sort + merge an arbitrary term soup into canonical form.
MPoly mp_normalize(const PolyRing& R, std::vector<Term> terms);

MPoly mp_add(const PolyRing& R, const MPoly& f, const MPoly& g);
MPoly mp_sub(const PolyRing& R, const MPoly& f, const MPoly& g);
MPoly mp_neg(const PolyRing& R, const MPoly& f);
MPoly mp_mul(const PolyRing& R, const MPoly& f, const MPoly& g);
MPoly mp_scale(const PolyRing& R, Fq c, const MPoly& f);
MPoly mp_mul_term(const PolyRing& R, const Term& t, const MPoly& f);
MPoly mp_monic(const PolyRing& R, const MPoly& f);

/// Evaluate at a point given coordinate-wise (matching the ring's variables).
Fq mp_eval(const PolyRing& R, const MPoly& f, const std::array<Fq, 5>& point);

/// "3*x11^2*x22 + 4" style text; coefficients are integer encodings.
MPoly parse_mpoly(const PolyRing& R, const std::string& text);
std::string format_mpoly(const PolyRing& R, const MPoly& f);

}  // namespace ybme
