#include "ybme/mat2.hpp"

#include <cctype>
#include <stdexcept>

namespace ybme {

Mat2 mat_add(const FieldCtx& F, const Mat2& A, const Mat2& B) {
    return {F.add(A.x11, B.x11), F.add(A.x12, B.x12),
            F.add(A.x21, B.x21), F.add(A.x22, B.x22)};
}

Mat2 mat_sub(const FieldCtx& F, const Mat2& A, const Mat2& B) {
    return {F.sub(A.x11, B.x11), F.sub(A.x12, B.x12),
            F.sub(A.x21, B.x21), F.sub(A.x22, B.x22)};
}

Mat2 mat_neg(const FieldCtx& F, const Mat2& A) {
    return {F.neg(A.x11), F.neg(A.x12), F.neg(A.x21), F.neg(A.x22)};
}

Mat2 mat_mul(const FieldCtx& F, const Mat2& A, const Mat2& B) {
    return {F.add(F.mul(A.x11, B.x11), F.mul(A.x12, B.x21)),
            F.add(F.mul(A.x11, B.x12), F.mul(A.x12, B.x22)),
            F.add(F.mul(A.x21, B.x11), F.mul(A.x22, B.x21)),
            F.add(F.mul(A.x21, B.x12), F.mul(A.x22, B.x22))};
}

Mat2 scalar_mul(const FieldCtx& F, Fq c, const Mat2& A) {
    return {F.mul(c, A.x11), F.mul(c, A.x12), F.mul(c, A.x21), F.mul(c, A.x22)};
}

Fq det(const FieldCtx& F, const Mat2& A) {
    return F.sub(F.mul(A.x11, A.x22), F.mul(A.x12, A.x21));
}

Fq trace(const FieldCtx& F, const Mat2& A) { return F.add(A.x11, A.x22); }

Mat2 scalar(Fq c) { return {c, 0, 0, c}; }

bool is_scalar(const Mat2& A) {
    return A.x12 == 0 && A.x21 == 0 && A.x11 == A.x22;
}

std::uint64_t mat_count(const FieldCtx& F) {
    std::uint64_t q = F.q();
    return q * q * q * q;
}

std::uint64_t mat_index(const FieldCtx& F, const Mat2& A) {
    std::uint64_t q = F.q();
    return ((static_cast<std::uint64_t>(A.x11) * q + A.x12) * q + A.x21) * q + A.x22;
}

Mat2 mat_at(const FieldCtx& F, std::uint64_t idx) {
    std::uint64_t q = F.q();
    Mat2 A;
    A.x22 = static_cast<Fq>(idx % q);
    idx /= q;
    A.x21 = static_cast<Fq>(idx % q);
    idx /= q;
    A.x12 = static_cast<Fq>(idx % q);
    idx /= q;
    A.x11 = static_cast<Fq>(idx % q);
    return A;
}

int Poly1::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[i] != 0) return i;
    return -1;
}

Poly1 char_poly(const FieldCtx& F, const Mat2& A) {
    return {{det(F, A), F.neg(trace(F, A)), 1}};
}

Poly1 min_poly(const FieldCtx& F, const Mat2& A) {
    if (is_scalar(A)) return {{F.neg(A.x11), 1}};
    return char_poly(F, A);
}

Fq eval_poly(const FieldCtx& F, const Poly1& f, Fq x) {
    Fq acc = 0;
    for (int i = static_cast<int>(f.coeffs.size()) - 1; i >= 0; --i)
        acc = F.add(F.mul(acc, x), f.coeffs[i]);
    return acc;
}

Mat2 eval_poly_at(const FieldCtx& F, const Poly1& f, const Mat2& A) {
    Mat2 acc;
    for (int i = static_cast<int>(f.coeffs.size()) - 1; i >= 0; --i) {
        acc = mat_mul(F, acc, A);
        acc = mat_add(F, acc, scalar(f.coeffs[i]));
    }
    return acc;
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    [[noreturn]] void fail(const std::string& expected) {
        std::string got = pos < text.size() ? std::string(1, text[pos]) : "end of input";
        throw std::invalid_argument("bad matrix literal \"" + text + "\": expected " +
                                    expected + ", got \"" + got + "\" at offset " +
                                    std::to_string(pos));
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail(std::string("'") + c + "'");
        ++pos;
    }

    unsigned number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("an entry");
        return static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
    }
};

}  // namespace

Mat2 parse_mat2(const FieldCtx& F, const std::string& text) {
    Cursor c{text};
    auto entry = [&]() -> Fq {
        unsigned v = c.number();
        if (v >= F.q())
            throw std::invalid_argument("bad matrix literal \"" + text + "\": entry " +
                                        std::to_string(v) + " is not an element of F_" +
                                        std::to_string(F.q()));
        return static_cast<Fq>(v);
    };
    Mat2 A;
    c.expect('[');
    c.expect('[');
    A.x11 = entry();
    c.expect(',');
    A.x12 = entry();
    c.expect(']');
    c.expect(',');
    c.expect('[');
    A.x21 = entry();
    c.expect(',');
    A.x22 = entry();
    c.expect(']');
    c.expect(']');
    c.skip_ws();
    if (c.pos != text.size()) c.fail("end of input");
    return A;
}

std::string format_mat2(const Mat2& A) {
    return "[[" + std::to_string(A.x11) + "," + std::to_string(A.x12) + "],[" +
           std::to_string(A.x21) + "," + std::to_string(A.x22) + "]]";
}

}  // namespace ybme
