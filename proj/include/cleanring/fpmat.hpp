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
#include <vector>

#include "cleanring/prime_field.hpp"

namespace cleanring {

/*
 * Square matrix over GF(p), entries row-major and reduced into [0, p).
 * Satisfies RingElement (from_int(k) is k times the identity), so matrix
 * rings can serve as noncommutative coefficient rings downstream.
 */
class Mat {
   public:
    Mat(std::size_t n, std::int64_t p) : n_(n), p_(p), e_(n * n, 0) {
        if (n == 0) throw std::invalid_argument("Mat: dimension must be positive");
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
            throw std::invalid_argument("Mat: modulus must be prime");
    }

    static Mat identity(std::size_t n, std::int64_t p) {
        Mat m(n, p);
        for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1 % p;
        return m;
    }

    static Mat from_entries(std::size_t n, std::int64_t p,
                            const std::vector<std::int64_t>& entries) {
        if (entries.size() != n * n) throw std::invalid_argument("Mat: wrong entry count");
        Mat m(n, p);
        for (std::size_t k = 0; k < entries.size(); ++k) m.e_[k] = m.reduce(entries[k]);
        return m;
    }

    std::size_t dim() const { return n_; }
    std::int64_t modulus() const { return p_; }

    std::int64_t at(std::size_t i, std::size_t j) const { return e_.at(i * n_ + j); }
    void set(std::size_t i, std::size_t j, std::int64_t v) { e_.at(i * n_ + j) = reduce(v); }

    bool is_zero() const {
        for (std::int64_t v : e_)
            if (v != 0) return false;
        return true;
    }
    bool is_one() const { return *this == identity(n_, p_); }

    Mat zero_like() const { return Mat(n_, p_); }
    Mat one_like() const { return identity(n_, p_); }
    Mat from_int(std::int64_t k) const {
        Mat m(n_, p_);
        std::int64_t v = reduce(k);
        for (std::size_t i = 0; i < n_; ++i) m.e_[i * n_ + i] = v;
        return m;
    }

    Mat operator+(const Mat& o) const {
        check(o);
        Mat m(n_, p_);
        for (std::size_t k = 0; k < e_.size(); ++k) {
            std::int64_t s = e_[k] + o.e_[k];
            m.e_[k] = s >= p_ ? s - p_ : s;
        }
        return m;
    }

    Mat operator-(const Mat& o) const {
        check(o);
        Mat m(n_, p_);
        for (std::size_t k = 0; k < e_.size(); ++k) {
            std::int64_t s = e_[k] - o.e_[k];
            m.e_[k] = s < 0 ? s + p_ : s;
        }
        return m;
    }

    Mat operator-() const {
        Mat m(n_, p_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] == 0 ? 0 : p_ - e_[k];
        return m;
    }

    Mat operator*(const Mat& o) const {
        check(o);
        Mat m(n_, p_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                unsigned __int128 acc = 0;
                for (std::size_t k = 0; k < n_; ++k)
                    acc += static_cast<unsigned __int128>(e_[i * n_ + k]) * o.e_[k * n_ + j];
                m.e_[i * n_ + j] = static_cast<std::int64_t>(acc % p_);
            }
        return m;
    }

    Mat scaled(std::int64_t c) const {
        Mat m(n_, p_);
        std::int64_t r = reduce(c);
        for (std::size_t k = 0; k < e_.size(); ++k)
            m.e_[k] = static_cast<std::int64_t>(
                static_cast<unsigned __int128>(e_[k]) * r % p_);
        return m;
    }

    Mat pow(std::uint64_t k) const {
        Mat acc = identity(n_, p_);
        Mat sq = *this;
        while (k) {
            if (k & 1) acc = acc * sq;
            sq = sq * sq;
            k >>= 1;
        }
        return acc;
    }

    bool operator==(const Mat& o) const { return n_ == o.n_ && p_ == o.p_ && e_ == o.e_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    std::int64_t det() const {
        std::vector<std::int64_t> a = e_;
        std::int64_t d = 1 % p_;
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t piv = col;
            while (piv < n_ && a[piv * n_ + col] == 0) ++piv;
            if (piv == n_) return 0;
            if (piv != col) {
                for (std::size_t j = 0; j < n_; ++j) std::swap(a[piv * n_ + j], a[col * n_ + j]);
                d = p_ - d;  // row swap flips the sign
            }
            std::int64_t pv = a[col * n_ + col];
            d = mulmod(d, pv);
            std::int64_t pv_inv = inv_mod(pv);
            for (std::size_t r = col + 1; r < n_; ++r) {
                std::int64_t f = mulmod(a[r * n_ + col], pv_inv);
                if (f == 0) continue;
                for (std::size_t j = col; j < n_; ++j)
                    a[r * n_ + j] = submod(a[r * n_ + j], mulmod(f, a[col * n_ + j]));
            }
        }
        return d % p_;
    }

    std::optional<Mat> try_inverse() const {
        // Gauss-Jordan on [this | I]
        std::vector<std::int64_t> a = e_;
        Mat inv = identity(n_, p_);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t piv = col;
            while (piv < n_ && a[piv * n_ + col] == 0) ++piv;
            if (piv == n_) return std::nullopt;
            if (piv != col)
                for (std::size_t j = 0; j < n_; ++j) {
                    std::swap(a[piv * n_ + j], a[col * n_ + j]);
                    std::swap(inv.e_[piv * n_ + j], inv.e_[col * n_ + j]);
                }
            std::int64_t pv_inv = inv_mod(a[col * n_ + col]);
            for (std::size_t j = 0; j < n_; ++j) {
                a[col * n_ + j] = mulmod(a[col * n_ + j], pv_inv);
                inv.e_[col * n_ + j] = mulmod(inv.e_[col * n_ + j], pv_inv);
            }
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == col) continue;
                std::int64_t f = a[r * n_ + col];
                if (f == 0) continue;
                for (std::size_t j = 0; j < n_; ++j) {
                    a[r * n_ + j] = submod(a[r * n_ + j], mulmod(f, a[col * n_ + j]));
                    inv.e_[r * n_ + j] = submod(inv.e_[r * n_ + j], mulmod(f, inv.e_[col * n_ + j]));
                }
            }
        }
        return inv;
    }

    Mat inv() const {
        std::optional<Mat> m = try_inverse();
        if (!m) throw std::domain_error("Mat: singular matrix");
        return *m;
    }

    // basis of the null space, as column vectors
    std::vector<std::vector<std::int64_t>> kernel_basis() const {
        auto [rref, pivots] = reduced_row_echelon();
        std::vector<bool> is_pivot(n_, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::vector<std::int64_t>> basis;
        for (std::size_t free_col = 0; free_col < n_; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<std::int64_t> v(n_, 0);
            v[free_col] = 1 % p_;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = negmod(rref[r * n_ + free_col]);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // basis of the column space: the original columns in pivot positions
    std::vector<std::vector<std::int64_t>> image_basis() const {
        auto [rref, pivots] = reduced_row_echelon();
        (void)rref;
        std::vector<std::vector<std::int64_t>> basis;
        for (std::size_t c : pivots) {
            std::vector<std::int64_t> v(n_);
            for (std::size_t i = 0; i < n_; ++i) v[i] = e_[i * n_ + c];
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // matrix with the given column vectors (must be n of them)
    static Mat from_columns(std::size_t n, std::int64_t p,
                            const std::vector<std::vector<std::int64_t>>& cols) {
        if (cols.size() != n) throw std::invalid_argument("Mat: need exactly n columns");
        Mat m(n, p);
        for (std::size_t j = 0; j < n; ++j) {
            if (cols[j].size() != n) throw std::invalid_argument("Mat: column has wrong length");
            for (std::size_t i = 0; i < n; ++i) m.e_[i * n + j] = m.reduce(cols[j][i]);
        }
        return m;
    }

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const {
        if (v.size() != n_) throw std::invalid_argument("Mat: vector has wrong length");
        std::vector<std::int64_t> w(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            unsigned __int128 acc = 0;
            for (std::size_t j = 0; j < n_; ++j)
                acc += static_cast<unsigned __int128>(e_[i * n_ + j]) * reduce(v[j]);
            w[i] = static_cast<std::int64_t>(acc % p_);
        }
        return w;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < n_; ++i) {
            if (i) s += ",";
            s += "[";
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) s += ",";
                s += std::to_string(e_[i * n_ + j]);
            }
            s += "]";
        }
        s += "]";
        return s;
    }

   private:
    std::int64_t reduce(std::int64_t v) const {
        std::int64_t r = v % p_;
        return r < 0 ? r + p_ : r;
    }
    std::int64_t mulmod(std::int64_t a, std::int64_t b) const {
        return static_cast<std::int64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::int64_t submod(std::int64_t a, std::int64_t b) const {
        std::int64_t s = a - b;
        return s < 0 ? s + p_ : s;
    }
    std::int64_t negmod(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::int64_t inv_mod(std::int64_t v) const { return Fp(v, p_).inv().residue(); }

    void check(const Mat& o) const {
        if (n_ != o.n_ || p_ != o.p_)
            throw std::invalid_argument("Mat: mixed dimensions or moduli");
    }

    // returns (row-reduced echelon form, pivot column indices)
    std::pair<std::vector<std::int64_t>, std::vector<std::size_t>> reduced_row_echelon() const {
        std::vector<std::int64_t> a = e_;
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < n_ && row < n_; ++col) {
            std::size_t piv = row;
            while (piv < n_ && a[piv * n_ + col] == 0) ++piv;
            if (piv == n_) continue;
            if (piv != row)
                for (std::size_t j = 0; j < n_; ++j) std::swap(a[piv * n_ + j], a[row * n_ + j]);
            std::int64_t pv_inv = inv_mod(a[row * n_ + col]);
            for (std::size_t j = 0; j < n_; ++j) a[row * n_ + j] = mulmod(a[row * n_ + j], pv_inv);
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == row) continue;
                std::int64_t f = a[r * n_ + col];
                if (f == 0) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    a[r * n_ + j] = submod(a[r * n_ + j], mulmod(f, a[row * n_ + j]));
            }
            pivots.push_back(col);
            ++row;
        }
        return {std::move(a), std::move(pivots)};
    }

    std::size_t n_;
    std::int64_t p_;
    std::vector<std::int64_t> e_;
};

}  // namespace cleanring
