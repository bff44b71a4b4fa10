#include "ybme/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ybme {

namespace {

const std::vector<std::string> kMatrixVars = {"x11", "x12", "x21", "x22"};
const std::vector<std::string> kElimVars = {"t", "x11", "x12", "x21", "x22"};

}  // namespace

const std::vector<std::string>& PolyRing::names() const {
    return nvars == 5 ? kElimVars : kMatrixVars;
}

PolyRing matrix_entry_ring(FieldPtr field) { return {std::move(field), 4}; }
PolyRing elimination_ring(FieldPtr field) { return {std::move(field), 5}; }

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

bool Monomial::divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < r.e.size(); ++i) {
        unsigned s = static_cast<unsigned>(a.e[i]) + b.e[i];
        if (s > 255) throw std::overflow_error("monomial degree overflow");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < r.e.size(); ++i) {
        if (b.e[i] > a.e[i]) throw std::domain_error("monomial does not divide");
        r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < r.e.size(); ++i)
        r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

MPoly mp_zero() { return {}; }

MPoly mp_const(const PolyRing&, Fq c) {
    if (c == 0) return {};
    return {{Term{Monomial{}, c}}};
}

MPoly mp_var(const PolyRing& R, int var) {
    if (var < 0 || var >= R.nvars) throw std::invalid_argument("no such variable");
    Monomial m;
    m.e[static_cast<std::size_t>(var)] = 1;
    return {{Term{m, 1}}};
}

MPoly mp_normalize(const PolyRing& R, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return b.m < a.m; });
    MPoly out;
    const FieldCtx& F = *R.field;
    for (const Term& t : terms) {
        if (!out.terms.empty() && out.terms.back().m == t.m) {
            out.terms.back().c = F.add(out.terms.back().c, t.c);
        } else {
            out.terms.push_back(t);
        }
    }
    out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                   [](const Term& t) { return t.c == 0; }),
                    out.terms.end());
    return out;
}

MPoly mp_add(const PolyRing& R, const MPoly& f, const MPoly& g) {
    std::vector<Term> all = f.terms;
    all.insert(all.end(), g.terms.begin(), g.terms.end());
    return mp_normalize(R, std::move(all));
}

MPoly mp_neg(const PolyRing& R, const MPoly& f) {
    MPoly out = f;
    for (Term& t : out.terms) t.c = R.field->neg(t.c);
    return out;
}

MPoly mp_sub(const PolyRing& R, const MPoly& f, const MPoly& g) {
    return mp_add(R, f, mp_neg(R, g));
}

MPoly mp_scale(const PolyRing& R, Fq c, const MPoly& f) {
    if (c == 0) return {};
    MPoly out = f;
    for (Term& t : out.terms) t.c = R.field->mul(c, t.c);
    return out;
}

MPoly mp_mul_term(const PolyRing& R, const Term& t, const MPoly& f) {
    if (t.c == 0) return {};
    MPoly out;
    out.terms.reserve(f.terms.size());
    for (const Term& ft : f.terms)
        out.terms.push_back({mono_mul(t.m, ft.m), R.field->mul(t.c, ft.c)});
    return out;  // multiplying by one term preserves the strict order
}

MPoly mp_mul(const PolyRing& R, const MPoly& f, const MPoly& g) {
    std::vector<Term> all;
    all.reserve(f.terms.size() * g.terms.size());
    for (const Term& ft : f.terms)
        for (const Term& gt : g.terms)
            all.push_back({mono_mul(ft.m, gt.m), R.field->mul(ft.c, gt.c)});
    return mp_normalize(R, std::move(all));
}

MPoly mp_monic(const PolyRing& R, const MPoly& f) {
    if (f.is_zero()) return f;
    return mp_scale(R, R.field->inv(f.leading().c), f);
}

Fq mp_eval(const PolyRing& R, const MPoly& f, const std::array<Fq, 5>& point) {
    const FieldCtx& F = *R.field;
    Fq acc = 0;
    for (const Term& t : f.terms) {
        Fq v = t.c;
        for (int i = 0; i < R.nvars; ++i)
            if (t.m.e[static_cast<std::size_t>(i)])
                v = F.mul(v, F.pow(point[static_cast<std::size_t>(i)],
                                   t.m.e[static_cast<std::size_t>(i)]));
        acc = F.add(acc, v);
    }
    return acc;
}

namespace {

struct PolyParser {
    const PolyRing& R;
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("bad polynomial \"" + text + "\": " + why +
                                    " at offset " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    unsigned number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("expected a number");
        unsigned long v = std::stoul(text.substr(start, pos - start));
        if (v > 1u << 20) fail("number out of range");
        return static_cast<unsigned>(v);
    }

    // INT | VAR ['^' INT]
    MPoly factor() {
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            unsigned v = number();
            if (v >= R.field->q())
                fail("coefficient " + std::to_string(v) + " is not an element of F_" +
                     std::to_string(R.field->q()));
            return mp_const(R, static_cast<Fq>(v));
        }
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos]))))
            ++pos;
        std::string name = text.substr(start, pos - start);
        const auto& names = R.names();
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) fail("unknown variable \"" + name + "\"");
        MPoly v = mp_var(R, static_cast<int>(it - names.begin()));
        if (eat('^')) {
            unsigned e = number();
            MPoly acc = mp_const(R, 1);
            for (unsigned k = 0; k < e; ++k) acc = mp_mul(R, acc, v);
            return acc;
        }
        return v;
    }

    MPoly term() {
        MPoly acc = factor();
        while (eat('*')) acc = mp_mul(R, acc, factor());
        return acc;
    }

    MPoly poly() {
        skip_ws();
        bool negate = eat('-');
        MPoly acc = term();
        if (negate) acc = mp_neg(R, acc);
        for (;;) {
            if (eat('+')) {
                acc = mp_add(R, acc, term());
            } else if (eat('-')) {
                acc = mp_sub(R, acc, term());
            } else {
                break;
            }
        }
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return acc;
    }
};

}  // namespace

MPoly parse_mpoly(const PolyRing& R, const std::string& text) {
    PolyParser parser{R, text};
    return parser.poly();
}

std::string format_mpoly(const PolyRing& R, const MPoly& f) {
    if (f.is_zero()) return "0";
    const auto& names = R.names();
    std::string out;
    for (std::size_t ti = 0; ti < f.terms.size(); ++ti) {
        const Term& t = f.terms[ti];
        if (ti) out += " + ";
        std::string mono;
        for (int i = 0; i < R.nvars; ++i) {
            auto e = t.m.e[static_cast<std::size_t>(i)];
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += names[static_cast<std::size_t>(i)];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += std::to_string(t.c);
        } else if (t.c == 1) {
            out += mono;
        } else {
            out += std::to_string(t.c) + "*" + mono;
        }
    }
    return out;
}

}  // namespace ybme
