#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ybme {

/// Element of F_q stored as its integer encoding sum_i c_i * p^i,
/// where (c_0, ..., c_{s-1}) are the coordinates over the prime subfield.
/// For prime fields this is just the residue itself.
using Fq = std::uint16_t;

inline constexpr unsigned kDefaultFieldBound = 1024;

/// Arithmetic context for a finite field F_q, q = p^s.
///
/// The modulus is not a free choice: it is the lexicographically smallest
/// monic irreducible polynomial of degree s over F_p, comparing coefficient
/// tuples (c_0, c_1, ..., c_{s-1}) as integer tuples.  Two contexts built
/// for the same (p, s) are therefore interchangeable, and elements carry
/// no context pointer.
///
/// Immutable after construction; safe to share across threads.
class FieldCtx {
  public:
    FieldCtx(unsigned p, unsigned s, unsigned max_q);

    unsigned p() const { return p_; }
    unsigned s() const { return s_; }
    unsigned q() const { return q_; }

    /// Modulus coefficients, ascending degree, length s+1, monic.
    const std::vector<Fq>& modulus() const { return modulus_; }

    /// "q" for prime fields, "p^s" otherwise.
    std::string spec_string() const;

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;

    /// Multiplicative inverse; division by zero is reported, not absorbed.
    Fq inv(Fq a) const;

    /// a * inv(b).
    Fq div(Fq a, Fq b) const;

    Fq pow(Fq a, std::uint64_t e) const;

    /// Euler criterion a^((q-1)/2) in {0, 1} for odd q; every element of an
    /// even-order field is a square.  0 counts as a square.
    bool is_square(Fq a) const;

    /// n * 1, i.e. the image of an ordinary integer in the prime subfield.
    Fq of_int(long long n) const;

    /// All q elements in ascending encoding order.
    std::vector<Fq> enumerate() const;

    /// Coordinates (c_0, ..., c_{s-1}) of an element over F_p.
    std::vector<unsigned> coeffs(Fq a) const;
    Fq from_coeffs(const std::vector<unsigned>& c) const;

    /// Throws std::invalid_argument unless a is a valid encoding (< q).
    void check(Fq a) const;

  private:
    unsigned p_, s_, q_;
    std::vector<Fq> modulus_;
    std::vector<Fq> digits_;   // q*s base-p digit table
    std::vector<Fq> exp_;      // exp_[k] = g^k, doubled length to skip a mod
    std::vector<Fq> log_;      // discrete log base g, log_[0] unused
    std::vector<Fq> inv_;      // inverses, inv_[0] unused
    std::vector<Fq> neg_;

    Fq generator_ = 0;

    Fq encode_poly(const std::vector<unsigned>& c) const;
    Fq poly_mul(Fq a, Fq b) const;  // table-free product, used during setup
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Build (and cache nothing about) the field F_{p^s}.  Rejects non-prime p,
/// s < 1, and q over the bound.
FieldPtr make_field(unsigned p, unsigned s, unsigned max_q = kDefaultFieldBound);

/// Accepts "p^s" or a plain prime power like "7" or "9".
FieldPtr parse_field_spec(const std::string& spec,
                          unsigned max_q = kDefaultFieldBound);

}  // namespace ybme
