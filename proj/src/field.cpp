#include "ybme/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybme {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Coefficient vectors over F_p, ascending degree, no trailing-zero guarantee.
using PVec = std::vector<unsigned>;

int pdeg(const PVec& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

PVec pmul(const PVec& f, const PVec& g, unsigned p) {
    if (f.empty() || g.empty()) return {};
    PVec r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    }
    return r;
}

unsigned inv_mod_p(unsigned a, unsigned p) {
    // extended Euclid on integers
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long long qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (t < 0) t += p;
    return static_cast<unsigned>(t);
}

// f mod g in place, g monic-normalizable (lead invertible), returns remainder.
PVec pmod(PVec f, const PVec& g, unsigned p) {
    int dg = pdeg(g);
    unsigned lead_inv = inv_mod_p(g[dg], p);
    for (int df = pdeg(f); df >= dg; df = pdeg(f)) {
        unsigned c = (f[df] * lead_inv) % p;
        int shift = df - dg;
        for (int i = 0; i <= dg; ++i) {
            unsigned sub = (c * g[i]) % p;
            f[i + shift] = (f[i + shift] + p - sub) % p;
        }
    }
    f.resize(dg, 0);
    return f;
}

// Monic degree-d polynomials in lexicographic order on (c_0, ..., c_{d-1}).
// Index m enumerates that order with c_0 as the most significant digit.
PVec monic_at(unsigned p, unsigned d, std::uint64_t m) {
    PVec f(d + 1, 0);
    f[d] = 1;
    // least significant digit of m is the last tuple slot, so ascending m
    // walks (c_0, ..., c_{d-1}) in lexicographic order
    for (unsigned i = 0; i < d; ++i) {
        f[d - 1 - i] = static_cast<unsigned>(m % p);
        m /= p;
    }
    return f;
}

// Exhaustive: f (monic, degree d >= 1) has no monic factor of degree <= d/2.
bool is_irreducible(const PVec& f, unsigned p) {
    unsigned d = static_cast<unsigned>(pdeg(f));
    for (unsigned e = 1; 2 * e <= d; ++e) {
        std::uint64_t count = 1;
        for (unsigned k = 0; k < e; ++k) count *= p;
        for (std::uint64_t m = 0; m < count; ++m) {
            PVec g = monic_at(p, e, m);
            if (pdeg(pmod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

PVec find_modulus(unsigned p, unsigned s) {
    std::uint64_t count = 1;
    for (unsigned k = 0; k < s; ++k) count *= p;
    for (std::uint64_t m = 0; m < count; ++m) {
        PVec f = monic_at(p, s, m);
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

// Extended Euclid in F_p[x]: returns u with u*f = gcd(f, g) mod g-multiples,
// as the Bezout coefficient of f.
struct Egcd {
    PVec g;  // gcd
    PVec u;  // coefficient of f
};

PVec padd_scaled(const PVec& a, const PVec& b, unsigned c, unsigned p) {
    // a - c*b
    PVec r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = (r[i] + p - (c * b[i]) % p) % p;
    return r;
}

Egcd pegcd(const PVec& f, const PVec& g, unsigned p) {
    // invariant: r0 = u0 * f (mod g-combinations), r1 = u1 * f likewise
    PVec r0 = f, r1 = g;
    PVec u0{1}, u1{};
    while (pdeg(r1) >= 0) {
        int dg = pdeg(r1);
        unsigned lead_inv = inv_mod_p(r1[dg], p);
        PVec r = r0, u = u0;
        for (int dr = pdeg(r); dr >= dg; dr = pdeg(r)) {
            unsigned c = (r[dr] * lead_inv) % p;
            int shift = dr - dg;
            PVec sg(shift, 0), su(shift, 0);
            sg.insert(sg.end(), r1.begin(), r1.end());
            su.insert(su.end(), u1.begin(), u1.end());
            r = padd_scaled(r, sg, c, p);
            u = padd_scaled(u, su, c, p);
        }
        r0 = std::move(r1);
        u0 = std::move(u1);
        r1 = std::move(r);
        u1 = std::move(u);
    }
    return {r0, u0};
}

}  // namespace

FieldCtx::FieldCtx(unsigned p, unsigned s, unsigned max_q) : p_(p), s_(s) {
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic must be prime, got " +
                                    std::to_string(p));
    if (s < 1)
        throw std::invalid_argument("field extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned k = 0; k < s; ++k) {
        q *= p;
        if (q > max_q)
            throw std::invalid_argument(
                "field order " + std::to_string(p) + "^" + std::to_string(s) +
                " exceeds the configured bound " + std::to_string(max_q));
    }
    q_ = static_cast<unsigned>(q);

    PVec mod = find_modulus(p_, s_);
    modulus_.assign(mod.begin(), mod.end());

    digits_.resize(static_cast<std::size_t>(q_) * s_);
    for (unsigned e = 0; e < q_; ++e) {
        unsigned v = e;
        for (unsigned i = 0; i < s_; ++i) {
            digits_[static_cast<std::size_t>(e) * s_ + i] = static_cast<Fq>(v % p_);
            v /= p_;
        }
    }

    neg_.resize(q_);
    for (unsigned e = 0; e < q_; ++e) {
        unsigned acc = 0;
        for (int i = static_cast<int>(s_) - 1; i >= 0; --i) {
            unsigned d = digits_[static_cast<std::size_t>(e) * s_ + i];
            acc = acc * p_ + (d == 0 ? 0 : p_ - d);
        }
        neg_[e] = static_cast<Fq>(acc);
    }

    // discrete-log tables over a smallest primitive element
    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 1);
    if (q_ > 2) {
        for (unsigned cand = 2; cand < q_; ++cand) {
            unsigned order = 1;
            Fq y = static_cast<Fq>(cand);
            while (y != 1) {
                y = poly_mul(y, static_cast<Fq>(cand));
                ++order;
            }
            if (order == q_ - 1) {
                generator_ = static_cast<Fq>(cand);
                break;
            }
        }
    } else {
        generator_ = 1;
    }
    Fq y = 1;
    for (unsigned k = 0; k < q_ - 1; ++k) {
        exp_[k] = y;
        exp_[k + (q_ - 1)] = y;
        log_[y] = static_cast<Fq>(k);
        y = poly_mul(y, generator_);
    }

    // inverses by extended Euclid over F_p[x], each checked by multiplication
    inv_.assign(q_, 0);
    for (unsigned e = 1; e < q_; ++e) {
        PVec fe(s_);
        for (unsigned i = 0; i < s_; ++i)
            fe[i] = digits_[static_cast<std::size_t>(e) * s_ + i];
        Egcd r = pegcd(fe, mod, p_);
        if (pdeg(r.g) != 0)
            throw std::logic_error("modulus is not irreducible");  // unreachable
        unsigned c = inv_mod_p(r.g[0], p_);
        PVec u = pmod(r.u, mod, p_);
        for (auto& coef : u) coef = (coef * c) % p_;
        u.resize(s_, 0);
        Fq ie = encode_poly(u);
        if (poly_mul(static_cast<Fq>(e), ie) != 1)
            throw std::logic_error("inverse check failed");  // unreachable
        inv_[e] = ie;
    }
}

Fq FieldCtx::encode_poly(const std::vector<unsigned>& c) const {
    unsigned acc = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        acc = acc * p_ + c[i] % p_;
    return static_cast<Fq>(acc);
}

Fq FieldCtx::poly_mul(Fq a, Fq b) const {
    PVec fa(s_), fb(s_);
    for (unsigned i = 0; i < s_; ++i) {
        fa[i] = digits_[static_cast<std::size_t>(a) * s_ + i];
        fb[i] = digits_[static_cast<std::size_t>(b) * s_ + i];
    }
    PVec prod = pmul(fa, fb, p_);
    PVec mod(modulus_.begin(), modulus_.end());
    PVec rem = pmod(std::move(prod), mod, p_);
    rem.resize(s_, 0);
    return encode_poly(rem);
}

void FieldCtx::check(Fq a) const {
    if (a >= q_)
        throw std::invalid_argument("encoding " + std::to_string(a) +
                                    " is not an element of F_" + std::to_string(q_));
}

Fq FieldCtx::add(Fq a, Fq b) const {
    check(a);
    check(b);
    if (s_ == 1) {
        unsigned r = static_cast<unsigned>(a) + b;
        return static_cast<Fq>(r >= p_ ? r - p_ : r);
    }
    const Fq* da = &digits_[static_cast<std::size_t>(a) * s_];
    const Fq* db = &digits_[static_cast<std::size_t>(b) * s_];
    unsigned acc = 0;
    for (int i = static_cast<int>(s_) - 1; i >= 0; --i) {
        unsigned d = static_cast<unsigned>(da[i]) + db[i];
        if (d >= p_) d -= p_;
        acc = acc * p_ + d;
    }
    return static_cast<Fq>(acc);
}

Fq FieldCtx::neg(Fq a) const {
    check(a);
    return neg_[a];
}

Fq FieldCtx::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FieldCtx::mul(Fq a, Fq b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<unsigned>(log_[a]) + log_[b]];
}

Fq FieldCtx::inv(Fq a) const {
    check(a);
    if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
    return inv_[a];
}

Fq FieldCtx::div(Fq a, Fq b) const { return mul(a, inv(b)); }

Fq FieldCtx::pow(Fq a, std::uint64_t e) const {
    check(a);
    if (a == 0) return e == 0 ? 1 : 0;
    if (q_ == 2) return 1;
    std::uint64_t k = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[k];
}

bool FieldCtx::is_square(Fq a) const {
    check(a);
    if (q_ % 2 == 0) return true;  // squaring is a bijection in even order
    if (a == 0) return true;
    return pow(a, (q_ - 1) / 2) == 1;
}

Fq FieldCtx::of_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Fq>(r);
}

std::vector<Fq> FieldCtx::enumerate() const {
    std::vector<Fq> all(q_);
    for (unsigned e = 0; e < q_; ++e) all[e] = static_cast<Fq>(e);
    return all;
}

std::vector<unsigned> FieldCtx::coeffs(Fq a) const {
    check(a);
    std::vector<unsigned> c(s_);
    for (unsigned i = 0; i < s_; ++i)
        c[i] = digits_[static_cast<std::size_t>(a) * s_ + i];
    return c;
}

Fq FieldCtx::from_coeffs(const std::vector<unsigned>& c) const {
    if (c.size() != s_)
        throw std::invalid_argument("expected " + std::to_string(s_) +
                                    " coordinates, got " + std::to_string(c.size()));
    for (unsigned ci : c)
        if (ci >= p_)
            throw std::invalid_argument("coordinate " + std::to_string(ci) +
                                        " is not a residue mod " + std::to_string(p_));
    return encode_poly(c);
}

std::string FieldCtx::spec_string() const {
    if (s_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(s_);
}

FieldPtr make_field(unsigned p, unsigned s, unsigned max_q) {
    return std::make_shared<FieldCtx>(p, s, max_q);
}

FieldPtr parse_field_spec(const std::string& spec, unsigned max_q) {
    auto fail = [&](const std::string& why) -> FieldPtr {
        throw std::invalid_argument("bad field spec \"" + spec + "\": " + why);
    };
    auto caret = spec.find('^');
    auto to_num = [&](const std::string& tok) -> unsigned {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            fail("\"" + tok + "\" is not a number");
        unsigned long v = std::stoul(tok);
        if (v == 0 || v > 1u << 20) fail("\"" + tok + "\" is out of range");
        return static_cast<unsigned>(v);
    };
    if (caret != std::string::npos) {
        unsigned p = to_num(spec.substr(0, caret));
        unsigned s = to_num(spec.substr(caret + 1));
        return make_field(p, s, max_q);
    }
    unsigned q = to_num(spec);
    // plain form: factor as p^s; valid only for prime powers
    for (unsigned p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        unsigned s = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++s;
        }
        if (v != 1) fail(std::to_string(q) + " is not a prime power");
        return make_field(p, s, max_q);
    }
    return fail("empty");
}

}  // namespace ybme
