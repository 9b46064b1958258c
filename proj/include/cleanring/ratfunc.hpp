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

#include <optional>
#include <stdexcept>
#include <utility>

#include "cleanring/poly.hpp"

namespace cleanring {

/*
 * Rational function in canonical form: gcd(num, den) = 1, den monic and
 * nonzero, zero represented as 0/1. Equality is structural.
 */
template <FieldElement F>
class RatFunc {
   public:
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    static RatFunc from_poly(Poly<F> p) {
        Poly<F> one(p.field_one());
        return RatFunc(std::move(p), std::move(one));
    }

    static RatFunc zero(const F& like) { return from_poly(Poly<F>(like.zero_like())); }
    static RatFunc one(const F& like) { return from_poly(Poly<F>(like.one_like())); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    F field_zero() const { return den_.field_zero(); }
    F field_one() const { return den_.field_one(); }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator-() const { return RatFunc(-num_, den_); }

    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(den_, num_);
    }
    RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }

    RatFunc operator*(const F& s) const { return RatFunc(num_ * s, den_); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // the reduced denominator does not vanish at 0, i.e. membership in k[t]_(t)
    bool is_local() const { return !den_.eval(field_zero()).is_zero(); }

    // numerator degree strictly below denominator degree, or zero
    bool is_proper() const { return is_zero() || num_.size() < den_.size(); }

    F eval(const F& x) const {
        F d = den_.eval(x);
        if (d.is_zero()) throw std::domain_error("RatFunc: pole at evaluation point");
        return num_.eval(x) / d;
    }

    // value of f at infinity; nullopt encodes the pole (deg num > deg den)
    std::optional<F> value_at_infinity() const {
        if (is_zero() || num_.size() < den_.size()) return field_zero();
        if (num_.size() == den_.size()) return num_.lead() / den_.lead();
        return std::nullopt;
    }

   private:
    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            num_ = Poly<F>(num_.field_zero());
            den_ = Poly<F>(num_.field_one());
            return;
        }
        Poly<F> g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_div_exact(num_, g);
            den_ = poly_div_exact(den_, g);
        }
        if (!den_.lead().is_one()) {
            F s = den_.lead().inv();
            num_ = num_ * s;
            den_ = den_ * s;
        }
    }

    Poly<F> num_;
    Poly<F> den_;
};

/*
 * Element of V = k[t]_(t): a rational function whose reduced denominator is
 * not divisible by t. Closed under addition and scalar multiplication.
 */
template <FieldElement F>
class LocalElem {
   public:
    explicit LocalElem(RatFunc<F> value) : v_(std::move(value)) {
        if (!v_.is_local()) throw std::domain_error("LocalElem: denominator vanishes at 0");
    }

    static LocalElem from_poly(Poly<F> p) { return LocalElem(RatFunc<F>::from_poly(std::move(p))); }
    static LocalElem zero(const F& like) { return LocalElem(RatFunc<F>::zero(like)); }
    static LocalElem one(const F& like) { return LocalElem(RatFunc<F>::one(like)); }

    const RatFunc<F>& value() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }
    bool is_proper() const { return v_.is_proper(); }

    F field_zero() const { return v_.field_zero(); }
    F field_one() const { return v_.field_one(); }

    LocalElem operator+(const LocalElem& o) const { return LocalElem(v_ + o.v_); }
    LocalElem operator-(const LocalElem& o) const { return LocalElem(v_ - o.v_); }
    LocalElem operator-() const { return LocalElem(-v_); }
    LocalElem operator*(const F& s) const { return LocalElem(v_ * s); }

    bool operator==(const LocalElem& o) const { return v_ == o.v_; }
    bool operator!=(const LocalElem& o) const { return !(*this == o); }

   private:
    RatFunc<F> v_;
};

/*
 * The V0 (+) V1 decomposition of a local element: polynomial part plus a
 * proper fraction. v0 + v1 reconstructs the input exactly.
 */
template <FieldElement F>
struct SplitPair {
    Poly<F> v0;
    LocalElem<F> v1;
};

template <FieldElement F>
SplitPair<F> split(const LocalElem<F>& f) {
    auto [quot, rem] = poly_divmod(f.value().num(), f.value().den());
    // gcd(rem, den) = gcd(num, den) = 1, and den(0) != 0 carries over
    return SplitPair<F>{std::move(quot), LocalElem<F>(RatFunc<F>(std::move(rem), f.value().den()))};
}

template <FieldElement F>
F eval_at_zero(const LocalElem<F>& f) {
    F z = f.field_zero();
    return f.value().num().eval(z) / f.value().den().eval(z);
}

template <FieldElement F>
RatFunc<F> ratfunc_pow(const RatFunc<F>& base, int64_t e) {
    if (e < 0) return ratfunc_pow(base.inv(), -e);
    RatFunc<F> acc = RatFunc<F>::one(base.field_one());
    RatFunc<F> sq = base;
    for (uint64_t k = static_cast<uint64_t>(e); k != 0; k >>= 1) {
        if (k & 1) acc = acc * sq;
        if (k > 1) sq = sq * sq;
    }
    return acc;
}

}  // namespace cleanring
