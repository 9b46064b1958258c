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

// Truncated Laurent series over an arbitrary coefficient ring, with exact
// bookkeeping of how far the coefficients are known.  A series stores a dense
// window of coefficients [first, tail); everything below the window is known
// to be zero, everything at or above `tail` is unknown.  Arithmetic shrinks
// the window to what the inputs justify, so a coefficient is never reported
// unless it is exactly determined by the inputs.
//
// The headline construction is two_unit_decompose: any series x (invertible
// or not, zero or not) is written as a sum x = u + u2 of two commuting units,
// with u = t^N + x for N below the valuation of x and u2 = -t^N.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cleanring/field.hpp"
#include "cleanring/ratfunc.hpp"

namespace cleanring {

template <RingElement R>
class TruncatedLaurent {
public:
    // Window [first, first + coeffs.size()); every listed coefficient is
    // exact.  Leading zeros are stripped (they stay known-zero implicitly).
    TruncatedLaurent(std::int64_t first, std::vector<R> coeffs)
        : first_(first), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("TruncatedLaurent: empty coefficient window");
        normalize();
    }

    // The zero series, known to be zero below `tail`.
    static TruncatedLaurent zero(const R& like, std::int64_t tail) {
        return TruncatedLaurent(tail - 1, {like.zero_like()});
    }

    // coeff * t^exponent, known exactly up to `tail`.
    static TruncatedLaurent monomial(const R& coeff, std::int64_t exponent, std::int64_t tail) {
        if (tail <= exponent)
            throw std::invalid_argument("TruncatedLaurent: monomial tail must exceed its exponent");
        std::vector<R> c(static_cast<std::size_t>(tail - exponent), coeff.zero_like());
        c.front() = coeff;
        return TruncatedLaurent(exponent, std::move(c));
    }

    static TruncatedLaurent one(const R& like, std::int64_t tail) {
        return monomial(like.one_like(), 0, tail);
    }

    // First exponent whose coefficient is unknown.
    std::int64_t tail() const { return first_ + static_cast<std::int64_t>(coeffs_.size()); }

    // Start of the stored window (after normalization).
    std::int64_t first_exponent() const { return first_; }

    // Exponent of the lowest nonzero coefficient; nullopt for the zero series.
    std::optional<std::int64_t> valuation() const {
        if (is_zero()) return std::nullopt;
        return first_;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    // A sample coefficient carrying the ring context.
    const R& context() const { return coeffs_.front(); }

    // Exact coefficient of t^k.  Below the window the coefficient is a known
    // zero; at or beyond tail() it is not determined by this truncation.
    R coeff(std::int64_t k) const {
        if (k >= tail())
            throw std::domain_error("TruncatedLaurent: coefficient beyond known precision");
        return coeff_or_zero(k);
    }

    friend TruncatedLaurent operator+(const TruncatedLaurent& a, const TruncatedLaurent& b) {
        std::int64_t first = std::min(a.first_, b.first_);
        std::int64_t tl = std::min(a.tail(), b.tail());
        std::vector<R> c;
        c.reserve(static_cast<std::size_t>(tl - first));
        for (std::int64_t k = first; k < tl; ++k)
            c.push_back(a.coeff_or_zero(k) + b.coeff_or_zero(k));
        return TruncatedLaurent(first, std::move(c));
    }

    TruncatedLaurent operator-() const {
        std::vector<R> c;
        c.reserve(coeffs_.size());
        for (const auto& x : coeffs_) c.push_back(-x);
        return TruncatedLaurent(first_, std::move(c));
    }

    friend TruncatedLaurent operator-(const TruncatedLaurent& a, const TruncatedLaurent& b) {
        return a + (-b);
    }

    friend TruncatedLaurent operator*(const TruncatedLaurent& a, const TruncatedLaurent& b) {
        std::int64_t first = a.first_ + b.first_;
        std::int64_t tl = std::min(a.tail() + b.first_, b.tail() + a.first_);
        std::vector<R> c(static_cast<std::size_t>(tl - first), a.context().zero_like());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                std::int64_t k = a.first_ + static_cast<std::int64_t>(i) + b.first_ +
                                 static_cast<std::int64_t>(j);
                if (k >= tl) break;
                std::size_t idx = static_cast<std::size_t>(k - first);
                c[idx] = c[idx] + a.coeffs_[i] * b.coeffs_[j];
            }
        return TruncatedLaurent(first, std::move(c));
    }

    // Structural equality: same window after normalization, same coefficients.
    friend bool operator==(const TruncatedLaurent& a, const TruncatedLaurent& b) {
        return a.first_ == b.first_ && a.coeffs_ == b.coeffs_;
    }

    // Coefficientwise agreement at every exponent below `bound`.  Both series
    // must actually know their coefficients that far.
    bool agrees_below(const TruncatedLaurent& other, std::int64_t bound) const {
        if (tail() < bound || other.tail() < bound)
            throw std::domain_error("TruncatedLaurent: series known to insufficient precision");
        for (std::int64_t k = std::min(first_, other.first_); k < bound; ++k)
            if (!(coeff_or_zero(k) == other.coeff_or_zero(k))) return false;
        return true;
    }

    // "c*t^v + ... + O(t^m)"; zero terms are omitted.
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += coeffs_[i].str() + "*t^" +
                   std::to_string(first_ + static_cast<std::int64_t>(i));
        }
        if (!out.empty()) out += " + ";
        out += "O(t^" + std::to_string(tail()) + ")";
        return out;
    }

private:
    R coeff_or_zero(std::int64_t k) const {
        if (k < first_) return coeffs_.front().zero_like();
        return coeffs_[static_cast<std::size_t>(k - first_)];
    }

    void normalize() {
        std::size_t drop = 0;
        while (drop + 1 < coeffs_.size() && coeffs_[drop].is_zero()) ++drop;
        if (drop > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(drop));
            first_ += static_cast<std::int64_t>(drop);
        }
    }

    std::int64_t first_;
    std::vector<R> coeffs_;
};

// Inverse of a series whose lowest nonzero coefficient is invertible in R.
// For u with valuation n and window up to K, the inverse is determined on
// [-n, K - 2n); the result is verified to be a two-sided inverse on the full
// window it shares with u.
template <RingElement R>
TruncatedLaurent<R> invert_unit(const TruncatedLaurent<R>& u) {
    if (u.is_zero())
        throw std::domain_error("invert_unit: series is zero to its known precision");
    const std::int64_t n = *u.valuation();
    const R lead = u.coeff(n);
    const std::optional<R> lead_inv = lead.try_inverse();
    if (!lead_inv)
        throw std::domain_error("invert_unit: leading coefficient is not invertible");

    // Write u = t^n (c_0 + c_1 t + ...) and solve (c_0 + c_1 t + ...) d = 1
    // term by term; the solution is unique, hence also the left inverse.
    const std::size_t len = static_cast<std::size_t>(u.tail() - n);
    std::vector<R> d(len, lead.zero_like());
    d[0] = *lead_inv;
    for (std::size_t m = 1; m < len; ++m) {
        R acc = lead.zero_like();
        for (std::size_t i = 1; i <= m; ++i)
            acc = acc + u.coeff(n + static_cast<std::int64_t>(i)) *
                            d[m - i];
        d[m] = -(*lead_inv * acc);
    }
    TruncatedLaurent<R> inv(-n, std::move(d));

    const TruncatedLaurent<R> id =
        TruncatedLaurent<R>::one(lead, static_cast<std::int64_t>(len));
    if (!(u * inv == id) || !(inv * u == id))
        throw std::logic_error("invert_unit: inverse failed two-sided verification");
    return inv;
}

template <RingElement R>
struct TwoUnitDecomposition {
    TruncatedLaurent<R> u;   // t^shift + x; a unit since its lowest coefficient is 1
    TruncatedLaurent<R> u2;  // -t^shift; central among Laurent series, trivially a unit
    std::int64_t shift;      // one below the valuation of x (0 if x is zero)
};

// Write x as a sum of two commuting units, x = u + u2.  Works for every
// series, invertible or not: the added monomial t^shift sits strictly below
// the support of x, so u keeps an invertible lowest coefficient of 1.
template <RingElement R>
TwoUnitDecomposition<R> two_unit_decompose(const TruncatedLaurent<R>& x) {
    const std::int64_t shift = x.is_zero() ? 0 : *x.valuation() - 1;
    if (x.tail() <= shift)
        throw std::domain_error("two_unit_decompose: window does not reach the shift exponent");
    const R one = x.context().one_like();
    const auto mono = TruncatedLaurent<R>::monomial(one, shift, x.tail());
    return TwoUnitDecomposition<R>{mono + x, -mono, shift};
}

// Laurent expansion of a rational function around t = 0, with `precision`
// exact coefficients starting at exponent -k, where t^k is the exact power
// of t dividing the denominator.
template <FieldElement F>
TruncatedLaurent<F> laurent_expand(const RatFunc<F>& f, std::int64_t precision) {
    if (precision < 1)
        throw std::invalid_argument("laurent_expand: precision must be positive");
    const F fz = f.field_zero();
    if (f.is_zero()) return TruncatedLaurent<F>::zero(fz, precision);

    Poly<F> den = f.den();
    std::int64_t k = 0;
    while (den[0].is_zero()) {
        den = den.shifted_down();
        ++k;
    }
    const Poly<F>& num = f.num();
    const F d0_inv = den[0].inv();

    // Power-series division: q_m = (num_m - sum_{i>=1} den_i q_{m-i}) / den_0.
    std::vector<F> q(static_cast<std::size_t>(precision), fz);
    for (std::size_t m = 0; m < q.size(); ++m) {
        F acc = (m < num.size()) ? num[m] : fz;
        for (std::size_t i = 1; i <= m && i < den.size(); ++i)
            acc = acc - den[i] * q[m - i];
        q[m] = acc * d0_inv;
    }
    return TruncatedLaurent<F>(-k, std::move(q));
}

// Random series with `count` known coefficients starting at a valuation drawn
// from [min_val, max_val], coefficients drawn from `coeff_gen(rng)`; the
// lowest coefficient is redrawn until nonzero so the valuation is exact.
template <RingElement R, typename G>
TruncatedLaurent<R> random_series(Rng& rng, std::int64_t min_val, std::int64_t max_val,
                                  std::int64_t count, G&& coeff_gen) {
    if (count < 1) throw std::invalid_argument("random_series: count must be positive");
    const std::int64_t val = rng.in_range(min_val, max_val);
    std::vector<R> c;
    c.reserve(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) c.push_back(coeff_gen(rng));
    while (c.front().is_zero()) c.front() = coeff_gen(rng);
    return TruncatedLaurent<R>(val, std::move(c));
}

}  // namespace cleanring
