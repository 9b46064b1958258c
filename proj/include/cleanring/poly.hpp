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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cleanring/field.hpp"

namespace cleanring {

/*
 * Dense univariate polynomial over a field, coefficient of t^i at index i.
 * Canonical: no trailing zero coefficients, except that the zero polynomial
 * keeps a single stored zero so every value carries its field context.
 * The degree of the zero polynomial is the sentinel nullopt ("-infinity").
 */
template <FieldElement F>
class Poly {
   public:
    explicit Poly(F constant) : c_{std::move(constant)} {}

    static Poly from_coeffs(std::vector<F> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("Poly: empty coefficient list");
        Poly p(coeffs.front().zero_like());
        p.c_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    // x^k with a given leading coefficient
    static Poly monomial(F coeff, std::size_t k) {
        std::vector<F> v;
        v.reserve(k + 1);
        for (std::size_t i = 0; i < k; ++i) v.push_back(coeff.zero_like());
        v.push_back(std::move(coeff));
        return from_coeffs(std::move(v));
    }

    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    std::optional<std::int64_t> degree() const {
        if (is_zero()) return std::nullopt;
        return static_cast<std::int64_t>(c_.size()) - 1;
    }

    std::size_t size() const { return c_.size(); }
    const F& operator[](std::size_t i) const { return c_.at(i); }
    const std::vector<F>& coeffs() const { return c_; }

    const F& lead() const {
        if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
        return c_.back();
    }

    F field_zero() const { return c_[0].zero_like(); }
    F field_one() const { return c_[0].one_like(); }

    F eval(const F& x) const {
        F acc = x.zero_like();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly operator+(const Poly& o) const {
        std::vector<F> v;
        std::size_t n = std::max(c_.size(), o.c_.size());
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < c_.size() && i < o.c_.size())
                v.push_back(c_[i] + o.c_[i]);
            else if (i < c_.size())
                v.push_back(c_[i]);
            else
                v.push_back(o.c_[i]);
        }
        return from_coeffs(std::move(v));
    }

    Poly operator-() const {
        std::vector<F> v;
        v.reserve(c_.size());
        for (const F& x : c_) v.push_back(-x);
        return from_coeffs(std::move(v));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly(field_zero());
        std::vector<F> v(c_.size() + o.c_.size() - 1, field_zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
        return from_coeffs(std::move(v));
    }

    Poly operator*(const F& s) const {
        std::vector<F> v;
        v.reserve(c_.size());
        for (const F& x : c_) v.push_back(x * s);
        return from_coeffs(std::move(v));
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // multiply by t
    Poly shifted_up() const {
        if (is_zero()) return *this;
        std::vector<F> v;
        v.reserve(c_.size() + 1);
        v.push_back(field_zero());
        for (const F& x : c_) v.push_back(x);
        return from_coeffs(std::move(v));
    }

    // divide exactly by t; requires constant term zero
    Poly shifted_down() const {
        if (is_zero()) return *this;
        if (!c_[0].is_zero()) throw std::domain_error("Poly: not divisible by t");
        std::vector<F> v(c_.begin() + 1, c_.end());
        if (v.empty()) v.push_back(field_zero());
        return from_coeffs(std::move(v));
    }

   private:
    void normalize() {
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

/*
 * Long division: p = q * quotient + remainder with deg remainder < deg q.
 */
template <FieldElement F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& p, const Poly<F>& q) {
    if (q.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    if (p.is_zero() || p.size() < q.size()) return {Poly<F>(p.field_zero()), p};

    F lead_inv = q.lead().inv();
    std::vector<F> rem(p.coeffs());
    std::size_t qn = p.size() - q.size() + 1;
    std::vector<F> quot(qn, p.field_zero());
    for (std::size_t k = qn; k-- > 0;) {
        F c = rem[k + q.size() - 1] * lead_inv;
        if (c.is_zero()) continue;
        quot[k] = c;
        for (std::size_t j = 0; j < q.size(); ++j) rem[k + j] = rem[k + j] - c * q[j];
    }
    return {Poly<F>::from_coeffs(std::move(quot)), Poly<F>::from_coeffs(std::move(rem))};
}

// exact division; throws if the remainder is nonzero
template <FieldElement F>
Poly<F> poly_div_exact(const Poly<F>& p, const Poly<F>& q) {
    auto [quot, rem] = poly_divmod(p, q);
    if (!rem.is_zero()) throw std::domain_error("poly_div_exact: inexact division");
    return quot;
}

template <FieldElement F>
Poly<F> monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    return p * p.lead().inv();
}

// monic gcd; gcd(0, 0) is undefined
template <FieldElement F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd(0, 0)");
    while (!b.is_zero()) {
        Poly<F> r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <FieldElement F>
Poly<F> poly_lcm(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<F>(a.field_zero());
    return monic(poly_div_exact(a * b, poly_gcd(a, b)));
}

// formal derivative; may vanish on nonconstant input in characteristic p
template <FieldElement F>
Poly<F> derivative(const Poly<F>& p) {
    if (p.size() <= 1) return Poly<F>(p.field_zero());
    std::vector<F> v;
    v.reserve(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        v.push_back(p[i] * p[i].from_int(static_cast<std::int64_t>(i)));
    return Poly<F>::from_coeffs(std::move(v));
}

}  // namespace cleanring
