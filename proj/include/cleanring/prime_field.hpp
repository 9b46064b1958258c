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
#include <string>

namespace cleanring {

// deterministic Miller-Rabin, valid for all 64-bit inputs
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1) acc = mulmod(acc, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return acc;
    };
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/*
 * Element of the prime field GF(p). Residue reduced into [0, p); the
 * modulus travels with the element. Mixing moduli throws.
 */
class Fp {
   public:
    Fp(std::int64_t value, std::int64_t p) : p_(p) {
        // cheap for small p (trial-division fast path of is_prime)
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
            throw std::invalid_argument("Fp: modulus must be prime");
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    std::int64_t residue() const { return v_; }
    std::int64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1 % p_; }

    Fp zero_like() const { return Fp(0, p_); }
    Fp one_like() const { return Fp(1, p_); }
    Fp from_int(std::int64_t n) const { return Fp(n, p_); }

    Fp operator+(const Fp& o) const {
        check(o);
        std::int64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        std::int64_t s = v_ - o.v_;
        if (s < 0) s += p_;
        return raw(s, p_);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return raw(static_cast<std::int64_t>((static_cast<__int128>(v_) * o.v_) % p_), p_);
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // extended Euclid on (v, p); p prime so every nonzero residue is a unit
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        std::int64_t r = x0 % p_;
        if (r < 0) r += p_;
        return raw(r, p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }

    std::optional<Fp> try_inverse() const {
        if (v_ == 0) return std::nullopt;
        return inv();
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

   private:
    static Fp raw(std::int64_t v, std::int64_t p) {
        Fp e(0, p);
        e.v_ = v;
        return e;
    }
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli");
    }

    std::int64_t v_;
    std::int64_t p_;
};

}  // namespace cleanring
