/*
   Copyright 2026 The cleanring authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cleanring/ratfunc.hpp"

namespace cleanring {

/*
 * Text grammar for rational-function expressions (printer emits the same):
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := ('+' | '-')* power
 *   power  := atom ('^' exponent)?
 *   atom   := integer | 't' | '(' expr ')'
 *   exponent := ['-'] integer | '(' ['-'] integer ')'
 *
 * Integer literals are folded into the active field digit by digit, so they
 * may exceed machine range over the rationals and reduce mod p over GF(p).
 */

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    size_t position() const { return pos_; }

   private:
    size_t pos_;
};

namespace detail {

constexpr int64_t kMaxExponent = 65536;

template <FieldElement F>
class ExprParser {
   public:
    ExprParser(std::string_view text, F like) : s_(text), like_(std::move(like)) {}

    RatFunc<F> run() {
        RatFunc<F> v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

   private:
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    RatFunc<F> expr() {
        RatFunc<F> v = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                v = v + term();
            } else if (c == '-') {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    RatFunc<F> term() {
        RatFunc<F> v = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = v * factor();
            } else if (c == '/') {
                ++pos_;
                RatFunc<F> d = factor();
                if (d.is_zero()) throw std::domain_error("expression divides by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    RatFunc<F> factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '+') {
            ++pos_;
            return factor();
        }
        return power();
    }

    RatFunc<F> power() {
        RatFunc<F> base = atom();
        if (peek() == '^') {
            ++pos_;
            int64_t e = exponent();
            if (e < 0 && base.is_zero()) throw std::domain_error("expression divides by zero");
            return ratfunc_pow(base, e);
        }
        return base;
    }

    int64_t exponent() {
        bool parens = false;
        if (peek() == '(') {
            parens = true;
            ++pos_;
        }
        bool neg = false;
        char c = peek();
        if (c == '-') {
            neg = true;
            ++pos_;
        } else if (c == '+') {
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer exponent", pos_);
        int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > kMaxExponent) throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        if (parens) expect(')');
        return neg ? -v : v;
    }

    RatFunc<F> atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc<F> v = expr();
            expect(')');
            return v;
        }
        if (c == 't') {
            ++pos_;
            return RatFunc<F>::from_poly(Poly<F>::monomial(like_.one_like(), 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            F v = like_.zero_like();
            F ten = like_.from_int(10);
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * ten + like_.from_int(s_[pos_] - '0');
                ++pos_;
            }
            return RatFunc<F>::from_poly(Poly<F>(v));
        }
        throw ParseError("expected number, 't', or '('", pos_);
    }

    std::string_view s_;
    F like_;
    size_t pos_ = 0;
};

inline bool is_plain_atom(const std::string& s) {
    if (s.empty()) return false;
    size_t i = 0;
    if (s[0] == 't') {
        if (s.size() == 1) return true;
        if (s[1] != '^') return false;
        i = 2;
        if (i == s.size()) return false;
    }
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

inline bool has_top_level_sum(const std::string& s) {
    return s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
}

}  // namespace detail

template <FieldElement F>
RatFunc<F> parse_ratfunc(std::string_view text, const F& like) {
    return detail::ExprParser<F>(text, like).run();
}

template <FieldElement F>
LocalElem<F> parse_local(std::string_view text, const F& like) {
    return LocalElem<F>(parse_ratfunc(text, like));
}

/*
 * Printing. Terms appear in descending degree; joiners are the spaced
 * " + " / " - " so sign handling stays purely textual. parse(print(f)) == f.
 */
template <FieldElement F>
std::string poly_to_string(const Poly<F>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int64_t k = static_cast<int64_t>(p.size()) - 1; k >= 0; --k) {
        const F& c = p[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(cs.begin());
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0) {
            out += cs;
        } else {
            if (cs != "1") {
                out += cs;
                out += "*";
            }
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

template <FieldElement F>
std::string ratfunc_to_string(const RatFunc<F>& f) {
    std::string ns = poly_to_string(f.num());
    if (f.is_poly()) return ns;
    if (detail::has_top_level_sum(ns)) ns = "(" + ns + ")";
    std::string ds = poly_to_string(f.den());
    if (!detail::is_plain_atom(ds)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

template <FieldElement F>
std::string local_to_string(const LocalElem<F>& f) {
    return ratfunc_to_string(f.value());
}

}  // namespace cleanring
