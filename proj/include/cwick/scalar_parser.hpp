#pragma once

#include <string>
#include <string_view>

#include "cwick/errors.hpp"
#include "cwick/scalar.hpp"

namespace cwick {

// Recursive-descent parser for the coefficient grammar:
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := '-'? atom
//   atom     := rational | 'q' ('^' integer)? | '(' expr ')'
//   rational := integer ('/' positive-integer)?
//
// Whitespace is insignificant. Valid inputs include "1", "-1", "1/2",
// "q^-1", "(q^2-1)*1/2". Columns in errors are 1-based.
class ScalarParser {
public:
    ScalarParser(std::string_view text, bool allow_q)
        : text_(text), allow_q_(allow_q) {}

    std::size_t pos() const noexcept { return pos_; }
    void advance_to(std::size_t pos) { pos_ = pos; }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    // True when the next character can begin an atom.
    bool at_atom_start() {
        char c = peek();
        return (c >= '0' && c <= '9') || c == 'q' || c == '(' || c == '-';
    }

    Scalar parse_expr() {
        Scalar acc = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += parse_term();
            } else if (c == '-') {
                ++pos_;
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Scalar parse_term() {
        Scalar acc = parse_factor();
        while (peek() == '*') {
            ++pos_;
            acc *= parse_factor();
        }
        return acc;
    }

    // Parses a complete expression and requires the whole input consumed.
    static Scalar parse_all(std::string_view text, bool allow_q) {
        ScalarParser p(text, allow_q);
        if (p.at_end()) throw parse_error("empty coefficient expression", 0, 1);
        Scalar s = p.parse_expr();
        if (!p.at_end())
            throw parse_error("unexpected trailing input in coefficient expression",
                              0, p.column());
        return s;
    }

    int column() const noexcept { return static_cast<int>(pos_) + 1; }

private:
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, 0, column()); }

    Scalar parse_factor() {
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        }
        Scalar a = parse_atom();
        return neg ? -a : a;
    }

    Scalar parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Scalar inner = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 'q') {
            if (!allow_q_) fail("parameter q is not declared for this input");
            ++pos_;
            long long e = 1;
            if (peek() == '^') {
                ++pos_;
                e = parse_integer();
            }
            return Scalar::q_power(e);
        }
        if (c >= '0' && c <= '9') return Scalar(parse_rational());
        fail("expected a number, q, or '('");
    }

    Rational parse_rational() {
        BigInt n = parse_unsigned_bigint();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            int denom_col = column();
            if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
                fail("expected a positive integer denominator");
            BigInt d = parse_unsigned_bigint();
            if (d.is_zero())
                throw parse_error("denominator must be positive", 0, denom_col);
            return {std::move(n), std::move(d)};
        }
        return {std::move(n), BigInt(1)};
    }

    BigInt parse_unsigned_bigint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == start) fail("expected digits");
        return BigInt::from_string(text_.substr(start, pos_ - start));
    }

    long long parse_integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == start) fail("expected an integer exponent");
        long long v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            v = v * 10 + (text_[i] - '0');
            if (v > 1'000'000) fail("exponent out of range");
        }
        return neg ? -v : v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    bool allow_q_;
};

inline Scalar parse_scalar(std::string_view text, bool allow_q = true) {
    return ScalarParser::parse_all(text, allow_q);
}

}  // namespace cwick
