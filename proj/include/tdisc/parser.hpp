#pragma once

#include <cctype>
#include <string>

#include "tdisc/polynomial.hpp"

namespace tdisc {

// Recursive-descent parser for polynomial expressions over Q.
// Grammar: integers, rationals p/q, variables, + - * ^ and parentheses.
// Implicit multiplication is forbidden ("2x" is a syntax error).
class PolyParser {
public:
    PolyParser(std::string text, Ring ring) : text_(std::move(text)), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return p;
    }

private:
    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc += term();
            } else if (peek() == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(') {
                throw parse_error("implicit multiplication is forbidden; use '*'", pos_);
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            long n = read_nat();
            if (n < 0) throw parse_error("exponent must be a nonnegative integer", at);
            return base.pow(n);
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        if (c == '\0') throw parse_error("unexpected end of input", pos_);
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    Polynomial number() {
        long num = read_nat();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            long den = read_nat();
            if (den == 0) throw parse_error("zero denominator", at);
            return Polynomial::constant(ring_, rat_of(num, den));
        }
        return Polynomial::constant(ring_, Rational(num));
    }

    Polynomial variable() {
        std::size_t start = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name += text_[pos_++];
        int idx = ring_->index_of(name);
        if (idx < 0) throw parse_error("unknown variable '" + name + "'", start);
        return Polynomial::variable(ring_, idx);
    }

    long read_nat() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected a number", pos_);
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.size() > 12) throw parse_error("integer literal too large", pos_);
        return std::stol(digits);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string text_;
    Ring ring_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    return PolyParser(text, ring).parse();
}

}  // namespace tdisc
