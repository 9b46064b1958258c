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

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

namespace cleanring {

/*
 * Scalar concepts shared by the whole library.
 *
 * A RingElement is a value of an associative unital ring. Elements carry
 * their own ring context (e.g. the modulus of GF(p), the dimension of a
 * matrix ring), so zero_like()/one_like()/from_int() produce constants of
 * the same ring as the receiver. try_inverse() returns the two-sided
 * inverse when the element is a unit.
 *
 * A FieldElement is a RingElement where every nonzero element is a unit;
 * inv() throws std::domain_error on zero.
 */
template <class R>
concept RingElement =
    std::copyable<R> && std::equality_comparable<R> &&
    requires(const R a, const R b, std::int64_t n) {
        { a + b } -> std::same_as<R>;
        { a - b } -> std::same_as<R>;
        { a * b } -> std::same_as<R>;
        { -a } -> std::same_as<R>;
        { a.is_zero() } -> std::convertible_to<bool>;
        { a.is_one() } -> std::convertible_to<bool>;
        { a.zero_like() } -> std::same_as<R>;
        { a.one_like() } -> std::same_as<R>;
        { a.from_int(n) } -> std::same_as<R>;
        { a.try_inverse() } -> std::same_as<std::optional<R>>;
        { a.str() } -> std::convertible_to<std::string>;
    };

template <class F>
concept FieldElement = RingElement<F> && requires(const F a, const F b) {
    { a.inv() } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
};

/* Deterministic pseudo-random source for probe/series generation.
 * No wall clock, no OS entropy; same seed, same stream. */
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-ish draw in [0, m); bias is irrelevant for test data
    std::uint64_t below(std::uint64_t m) { return m ? next() % m : 0; }

    std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

   private:
    std::uint64_t state_;
};

}  // namespace cleanring
