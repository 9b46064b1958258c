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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cleanring/fpmat.hpp"
#include "cleanring/poly.hpp"

namespace cleanring {

/*
 * Brute-force laboratory on the finite matrix rings M_n(GF(p)):
 * exhaustive clean / strongly clean / uniquely strongly clean
 * classification, Dedekind-finiteness, a constructive Fitting
 * decomposition, minimal polynomials, and metaidempotent detection.
 */

inline constexpr std::uint64_t kDefaultBudget = 1ULL << 20;

class BudgetError : public std::domain_error {
   public:
    explicit BudgetError(const std::string& msg) : std::domain_error(msg) {}
};

/* Deterministic enumeration of M_n(GF(p)): index written in base p gives the
 * row-major entries, least significant digit first. */
class RingEnumerator {
   public:
    RingEnumerator(std::size_t n, std::int64_t p, std::uint64_t budget = kDefaultBudget)
        : n_(n), p_(p) {
        if (n == 0) throw std::invalid_argument("RingEnumerator: dimension must be positive");
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
            throw std::invalid_argument("RingEnumerator: modulus must be prime");
        std::uint64_t size = 1;
        for (std::size_t k = 0; k < n * n; ++k) {
            if (size > budget / static_cast<std::uint64_t>(p))
                throw BudgetError("ring size " + std::to_string(p) + "^" +
                                  std::to_string(n * n) + " exceeds budget " +
                                  std::to_string(budget));
            size *= static_cast<std::uint64_t>(p);
        }
        if (size > budget)
            throw BudgetError("ring size " + std::to_string(size) + " exceeds budget " +
                              std::to_string(budget));
        size_ = size;
    }

    std::size_t dim() const { return n_; }
    std::int64_t modulus() const { return p_; }
    std::uint64_t size() const { return size_; }

    Mat at(std::uint64_t index) const {
        if (index >= size_) throw std::invalid_argument("RingEnumerator: index out of range");
        Mat m(n_, p_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                m.set(i, j, static_cast<std::int64_t>(index % static_cast<std::uint64_t>(p_)));
                index /= static_cast<std::uint64_t>(p_);
            }
        return m;
    }

    std::uint64_t index_of(const Mat& m) const {
        if (m.dim() != n_ || m.modulus() != p_)
            throw std::invalid_argument("RingEnumerator: matrix from a different ring");
        std::uint64_t index = 0;
        for (std::size_t i = n_; i-- > 0;)
            for (std::size_t j = n_; j-- > 0;)
                index = index * static_cast<std::uint64_t>(p_) +
                        static_cast<std::uint64_t>(m.at(i, j));
        return index;
    }

   private:
    std::size_t n_;
    std::int64_t p_;
    std::uint64_t size_;
};

inline bool is_idempotent(const Mat& a) { return a * a == a; }
inline bool is_unit(const Mat& a) { return a.det() != 0; }

inline std::vector<Mat> idempotents(const RingEnumerator& ring) {
    std::vector<Mat> out;
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
        Mat m = ring.at(i);
        if (is_idempotent(m)) out.push_back(std::move(m));
    }
    return out;
}

/* One decomposition a = e + u: e idempotent, u a unit; `commuting` records
 * whether e*u = u*e (i.e. whether the witness is strongly clean). */
struct CleanWitness {
    Mat idempotent;
    Mat unit;
    bool commuting;
};

/* All decompositions of a into idempotent + unit, in enumeration order of
 * the idempotent. Pass a precomputed idempotent list to amortize scans. */
inline std::vector<CleanWitness> clean_decompositions(const Mat& a,
                                                      const std::vector<Mat>& idems) {
    std::vector<CleanWitness> out;
    for (const Mat& e : idems) {
        Mat u = a - e;
        if (!is_unit(u)) continue;
        out.push_back(CleanWitness{e, u, e * u == u * e});
    }
    return out;
}

inline std::vector<CleanWitness> clean_decompositions(const Mat& a,
                                                      std::uint64_t budget = kDefaultBudget) {
    RingEnumerator ring(a.dim(), a.modulus(), budget);
    return clean_decompositions(a, idempotents(ring));
}

inline std::vector<CleanWitness> strongly_clean_decompositions(
    const Mat& a, const std::vector<Mat>& idems) {
    std::vector<CleanWitness> out;
    for (CleanWitness& w : clean_decompositions(a, idems))
        if (w.commuting) out.push_back(std::move(w));
    return out;
}

inline std::vector<CleanWitness> strongly_clean_decompositions(
    const Mat& a, std::uint64_t budget = kDefaultBudget) {
    RingEnumerator ring(a.dim(), a.modulus(), budget);
    return strongly_clean_decompositions(a, idempotents(ring));
}

/* Exhaustive confirmation that a*b = 1 forces b*a = 1; finite rings satisfy
 * this by a pigeonhole argument, and the lab checks it rather than assume. */
inline bool check_dedekind_finite(std::size_t n, std::int64_t p,
                                  std::uint64_t budget = kDefaultBudget) {
    RingEnumerator ring(n, p, budget);
    Mat one = Mat::identity(n, p);
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
        Mat a = ring.at(i);
        for (std::uint64_t j = 0; j < ring.size(); ++j) {
            Mat b = ring.at(j);
            if (a * b == one && b * a != one) return false;
        }
    }
    return true;
}

struct ElementRecord {
    std::uint64_t index;
    std::string element;
    std::uint64_t clean_count;
    std::uint64_t strong_count;
    bool is_clean;
    bool is_strongly_clean;
    bool is_uniquely_strongly_clean;
};

struct ClassificationReport {
    std::size_t n;
    std::int64_t p;
    std::uint64_t ring_size;
    std::uint64_t idempotent_count;
    std::uint64_t unit_count;
    bool all_clean;
    bool all_strongly_clean;
    bool dedekind_finite;
    std::vector<ElementRecord> elements;
};

inline ClassificationReport classify_ring(std::size_t n, std::int64_t p,
                                          std::uint64_t budget = kDefaultBudget) {
    RingEnumerator ring(n, p, budget);
    std::vector<Mat> idems = idempotents(ring);

    ClassificationReport rep;
    rep.n = n;
    rep.p = p;
    rep.ring_size = ring.size();
    rep.idempotent_count = idems.size();
    rep.unit_count = 0;
    rep.all_clean = true;
    rep.all_strongly_clean = true;
    rep.elements.reserve(ring.size());

    for (std::uint64_t i = 0; i < ring.size(); ++i) {
        Mat a = ring.at(i);
        if (is_unit(a)) ++rep.unit_count;
        ElementRecord r;
        r.index = i;
        r.element = a.str();
        r.clean_count = 0;
        r.strong_count = 0;
        for (const Mat& e : idems) {
            if (!is_unit(a - e)) continue;
            ++r.clean_count;
            Mat u = a - e;
            if (e * u == u * e) ++r.strong_count;
        }
        r.is_clean = r.clean_count > 0;
        r.is_strongly_clean = r.strong_count > 0;
        r.is_uniquely_strongly_clean = r.strong_count == 1;
        rep.all_clean = rep.all_clean && r.is_clean;
        rep.all_strongly_clean = rep.all_strongly_clean && r.is_strongly_clean;
        rep.elements.push_back(std::move(r));
    }

    rep.dedekind_finite = check_dedekind_finite(n, p, budget);
    return rep;
}

inline std::string classification_csv(const ClassificationReport& rep) {
    std::string out =
        "element,clean_count,strong_count,is_clean,is_strongly_clean,is_uniquely_strongly_clean\n";
    for (const ElementRecord& r : rep.elements) {
        out += "\"" + r.element + "\",";
        out += std::to_string(r.clean_count) + "," + std::to_string(r.strong_count) + ",";
        out += std::string(r.is_clean ? "true" : "false") + ",";
        out += std::string(r.is_strongly_clean ? "true" : "false") + ",";
        out += std::string(r.is_uniquely_strongly_clean ? "true" : "false") + "\n";
    }
    return out;
}

/*
 * Constructive strongly clean decomposition: with b = a^n, the space splits
 * as ker(b) (+) im(b), both a-invariant; a is nilpotent on the kernel and
 * invertible on the image. e = projection onto ker(b) along im(b) commutes
 * with a, and a - e is invertible (nilpotent minus identity on one block,
 * invertible on the other).
 */
inline CleanWitness fitting_decompose(const Mat& a) {
    const std::size_t n = a.dim();
    const std::int64_t p = a.modulus();
    Mat b = a.pow(static_cast<std::uint64_t>(n));  // kernels stabilize by exponent n

    std::vector<std::vector<std::int64_t>> cols = b.kernel_basis();
    const std::size_t kdim = cols.size();
    for (std::vector<std::int64_t>& c : b.image_basis()) cols.push_back(std::move(c));
    if (cols.size() != n)
        throw std::logic_error("fitting_decompose: kernel and image do not span");

    Mat basis = Mat::from_columns(n, p, cols);
    Mat basis_inv = basis.inv();  // invertible because the two parts are independent
    Mat diag(n, p);
    for (std::size_t i = 0; i < kdim; ++i) diag.set(i, i, 1);
    Mat e = basis * diag * basis_inv;
    Mat u = a - e;
    return CleanWitness{e, u, e * u == u * e};
}

/* Minimal polynomial via Krylov chains: for each standard basis vector,
 * the first linear dependence among v, a v, a^2 v, ... yields the local
 * annihilator; the minimal polynomial is the lcm over the basis. */
inline Poly<Fp> min_poly(const Mat& a) {
    const std::size_t n = a.dim();
    const std::int64_t p = a.modulus();
    const Fp one(1, p);

    // solve [cols] * x = target over GF(p); columns are length-n vectors
    auto solve = [&](const std::vector<std::vector<std::int64_t>>& cols,
                     const std::vector<std::int64_t>& target)
        -> std::optional<std::vector<std::int64_t>> {
        const std::size_t m = cols.size();
        std::vector<std::vector<std::int64_t>> aug(n, std::vector<std::int64_t>(m + 1, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j) aug[i][j] = cols[j][i];
            aug[i][m] = target[i];
        }
        auto mul = [&](std::int64_t x, std::int64_t y) {
            return static_cast<std::int64_t>(static_cast<unsigned __int128>(x) * y % p);
        };
        auto sub = [&](std::int64_t x, std::int64_t y) {
            std::int64_t s = x - y;
            return s < 0 ? s + p : s;
        };
        std::vector<std::size_t> pivot_row_of_col(m, n);
        std::size_t row = 0;
        for (std::size_t col = 0; col < m && row < n; ++col) {
            std::size_t piv = row;
            while (piv < n && aug[piv][col] == 0) ++piv;
            if (piv == n) continue;
            std::swap(aug[piv], aug[row]);
            std::int64_t inv = Fp(aug[row][col], p).inv().residue();
            for (std::size_t j = col; j <= m; ++j) aug[row][j] = mul(aug[row][j], inv);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == row || aug[r][col] == 0) continue;
                std::int64_t f = aug[r][col];
                for (std::size_t j = col; j <= m; ++j)
                    aug[r][j] = sub(aug[r][j], mul(f, aug[row][j]));
            }
            pivot_row_of_col[col] = row;
            ++row;
        }
        // inconsistent if any zero row has nonzero rhs
        for (std::size_t r = row; r < n; ++r)
            if (aug[r][m] != 0) return std::nullopt;
        std::vector<std::int64_t> x(m, 0);
        for (std::size_t col = 0; col < m; ++col)
            if (pivot_row_of_col[col] < n) x[col] = aug[pivot_row_of_col[col]][m];
        return x;
    };

    Poly<Fp> m = Poly<Fp>(one);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> v(n, 0);
        v[i] = 1;
        std::vector<std::vector<std::int64_t>> krylov{v};
        std::vector<std::int64_t> w = v;
        for (;;) {
            w = a.apply(w);
            if (auto x = solve(krylov, w)) {
                // a^k v = sum x_j a^j v  =>  local annihilator t^k - sum x_j t^j
                std::vector<Fp> coeffs;
                coeffs.reserve(krylov.size() + 1);
                for (std::int64_t c : *x) coeffs.push_back(-Fp(c, p));
                coeffs.push_back(one);
                m = poly_lcm(m, Poly<Fp>::from_coeffs(std::move(coeffs)));
                break;
            }
            krylov.push_back(w);
        }
    }
    return monic(m);
}

/*
 * Metaidempotent test: the minimal polynomial must be squarefree (gcd with
 * its formal derivative is 1; a vanishing derivative in characteristic p
 * means a p-th power, hence not squarefree) with every root in GF(p).
 */
inline bool is_metaidempotent(const Mat& a) {
    Poly<Fp> m = min_poly(a);
    Poly<Fp> d = derivative(m);
    if (d.is_zero()) return false;
    if (!poly_gcd(m, d).is_one()) return false;
    const std::int64_t p = a.modulus();
    std::int64_t roots = 0;
    for (std::int64_t v = 0; v < p; ++v)
        if (m.eval(Fp(v, p)).is_zero()) ++roots;
    return m.degree() == roots;
}

/*
 * Spectral projectors of a metaidempotent element: for minimal polynomial
 * prod (t - r_i) with distinct roots, e_i = prod_{j != i} (a - r_j)/(r_i - r_j).
 * They are mutually orthogonal idempotents summing to 1, and
 * a = sum r_i e_i.
 */
inline std::vector<std::pair<Fp, Mat>> spectral_idempotents(const Mat& a) {
    if (!is_metaidempotent(a))
        throw std::domain_error("spectral_idempotents: element is not metaidempotent");
    const std::int64_t p = a.modulus();
    Poly<Fp> m = min_poly(a);
    std::vector<Fp> roots;
    for (std::int64_t v = 0; v < p; ++v)
        if (m.eval(Fp(v, p)).is_zero()) roots.emplace_back(v, p);

    std::vector<std::pair<Fp, Mat>> out;
    for (const Fp& ri : roots) {
        Mat e = Mat::identity(a.dim(), p);
        for (const Fp& rj : roots) {
            if (rj == ri) continue;
            Mat factor = a - a.from_int(rj.residue());
            Fp scale = (ri - rj).inv();
            e = e * factor.scaled(scale.residue());
        }
        out.emplace_back(ri, e);
    }
    return out;
}

}  // namespace cleanring
