#ifndef REESKIT_TEXT_HPP
#define REESKIT_TEXT_HPP

#include <cctype>
#include <string>
#include <vector>

#include "reeskit/errors.hpp"
#include "reeskit/multipoly.hpp"

namespace reeskit {

/// Canonical text form: terms in descending graded-lex order, explicit `*`
/// between factors, `^` for powers >= 2. Parsing the output reproduces an
/// identical term map.
template <class K>
std::string to_text(const MultiPoly<K>& f) {
    if (f.is_zero()) return "0";
    auto ctx = f.context();
    const K one = K::one(ctx);
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        bool neg = c.is_display_negative();
        K mag = c.display_abs();
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::vector<std::string> factors;
        std::string vars;
        auto emit = [&](char block, int idx, int e) {
            if (e == 0) return;
            std::string v = std::string(1, block) + std::to_string(idx + 1);
            if (e >= 2) v += "^" + std::to_string(e);
            factors.push_back(v);
        };
        (void)vars;
        for (int k = 0; k < f.n(); ++k) emit('t', k, m.t_exp[static_cast<std::size_t>(k)]);
        for (int k = 0; k <= f.n(); ++k) emit('X', k, m.x_exp[static_cast<std::size_t>(k)]);
        if (!(mag == one) || factors.empty()) factors.insert(factors.begin(), mag.to_string());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += "*";
            out += factors[i];
        }
    }
    return out;
}

namespace detail {

struct TextCursor {
    const std::string& src;
    std::size_t pos = 0;
    int line;
    int col;

    TextCursor(const std::string& s, int base_line, int base_col) : src(s), line(base_line), col(base_col) {}

    bool eof() const { return pos >= src.size(); }
    char peek() const { return src[pos]; }

    void advance() {
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line, col); }
};

inline BigInt parse_number(TextCursor& c) {
    c.skip_ws();
    if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected a number");
    std::string digits;
    while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        digits += c.peek();
        c.advance();
    }
    return BigInt(digits);
}

inline int parse_exponent(TextCursor& c) {
    BigInt e = parse_number(c);
    if (e > 1000000) c.fail("exponent too large");
    return static_cast<int>(e);
}

}  // namespace detail

/// Parses the shared polynomial grammar: signed integer (or a/b rational)
/// coefficients, `*` products, `^` powers, variables t1..t9 and X1..X9.
/// Errors carry 1-based line/column positions; base_line/base_col place an
/// embedded fragment inside a larger document.
template <class K>
MultiPoly<K> parse_poly(const std::string& src, int n, typename K::Context ctx,
                        int base_line = 1, int base_col = 1) {
    detail::TextCursor c(src, base_line, base_col);
    MultiPoly<K> out(n, ctx);

    c.skip_ws();
    if (c.eof()) c.fail("empty polynomial");

    bool expect_term = true;
    bool negative = false;
    if (c.peek() == '+' || c.peek() == '-') {
        negative = c.peek() == '-';
        c.advance();
    }

    while (expect_term) {
        // one term: '*'-joined factors
        K coef = negative ? -K::one(ctx) : K::one(ctx);
        Monomial mono = Monomial::unit(n);
        bool expect_factor = true;
        while (expect_factor) {
            c.skip_ws();
            if (c.eof()) c.fail("expected a factor");
            char ch = c.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                BigInt num = detail::parse_number(c);
                BigInt den = 1;
                c.skip_ws();
                if (!c.eof() && c.peek() == '/') {
                    c.advance();
                    den = detail::parse_number(c);
                    if (den == 0) c.fail("zero denominator");
                }
                coef *= K::from_fraction(num, den, ctx);
            } else if (ch == 't' || ch == 'X') {
                c.advance();
                if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '0')
                    c.fail("variable index must be a digit 1-9");
                int idx = c.peek() - '0';
                c.advance();
                int e = 1;
                c.skip_ws();
                if (!c.eof() && c.peek() == '^') {
                    c.advance();
                    e = detail::parse_exponent(c);
                }
                if (ch == 't') {
                    if (idx > n) c.fail("t-variable index exceeds n");
                    mono.t_exp[static_cast<std::size_t>(idx - 1)] += e;
                } else {
                    if (idx > n + 1) c.fail("X-variable index exceeds n+1");
                    mono.x_exp[static_cast<std::size_t>(idx - 1)] += e;
                }
            } else {
                c.fail("unexpected character in polynomial");
            }
            c.skip_ws();
            if (!c.eof() && c.peek() == '*') {
                c.advance();
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        out.add_term(mono, coef);

        c.skip_ws();
        if (!c.eof() && (c.peek() == '+' || c.peek() == '-')) {
            negative = c.peek() == '-';
            c.advance();
            expect_term = true;
        } else {
            expect_term = false;
        }
    }
    c.skip_ws();
    if (!c.eof()) c.fail("trailing characters after polynomial");
    return out;
}

}  // namespace reeskit

#endif
