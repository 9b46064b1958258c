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
#include <string_view>
#include <vector>

#include "cleanring/parse.hpp"
#include "cleanring/ratfunc.hpp"

namespace cleanring {

/*
 * The five generator endomorphisms of V = k[t]_(t), plus the identity:
 *
 *   y   : f |-> t*f                       (multiplication by t)
 *   x   : f |-> (f - f(0)) / t            (drop the constant term, shift down)
 *   e   : f |-> polynomial part of f      (projection onto V0 along V1)
 *   iy1 : (y - 1)^{-1},  f |-> f/(t - 1)
 *   ixe : (x - e)^{-1},  assembled from the two block inverses on V0 and V1
 *
 * x*y = 1 but y*x kills constants, so x is left-invertible without being
 * invertible; both x and y are nonetheless idempotent-plus-unit with the two
 * parts commuting. The checks in verify_main_proposition witness all of this
 * pointwise on a probe set.
 */

enum class Gen { Y, X, E, InvYMinus1, InvXMinusE, Identity };

inline const char* gen_name(Gen g) {
    switch (g) {
        case Gen::Y: return "y";
        case Gen::X: return "x";
        case Gen::E: return "e";
        case Gen::InvYMinus1: return "iy1";
        case Gen::InvXMinusE: return "ixe";
        case Gen::Identity: return "1";
    }
    return "?";
}

inline Gen gen_from_name(std::string_view s) {
    if (s == "y") return Gen::Y;
    if (s == "x") return Gen::X;
    if (s == "e") return Gen::E;
    if (s == "iy1") return Gen::InvYMinus1;
    if (s == "ixe") return Gen::InvXMinusE;
    if (s == "1") return Gen::Identity;
    throw std::invalid_argument("unknown generator name: '" + std::string(s) +
                                "' (expected y, x, e, iy1, ixe)");
}

// whitespace-separated generator names; leftmost factor is applied last
inline std::vector<Gen> parse_word(std::string_view s) {
    std::vector<Gen> word;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) word.push_back(gen_from_name(s.substr(i, j - i)));
        i = j;
    }
    return word;
}

template <FieldElement F>
LocalElem<F> apply_y(const LocalElem<F>& f) {
    return LocalElem<F>(RatFunc<F>(f.value().num().shifted_up(), f.value().den()));
}

template <FieldElement F>
LocalElem<F> apply_x(const LocalElem<F>& f) {
    F f0 = eval_at_zero(f);
    // numerator of f - f(0) over the same denominator; it vanishes at 0
    Poly<F> num = f.value().num() - f.value().den() * f0;
    return LocalElem<F>(RatFunc<F>(num.shifted_down(), f.value().den()));
}

template <FieldElement F>
LocalElem<F> apply_e(const LocalElem<F>& f) {
    return LocalElem<F>::from_poly(split(f).v0);
}

template <FieldElement F>
LocalElem<F> apply_inv_y_minus_1(const LocalElem<F>& f) {
    F one = f.field_one();
    Poly<F> t_minus_1 = Poly<F>::from_coeffs({-one, one});
    return LocalElem<F>(f.value() / RatFunc<F>::from_poly(t_minus_1));
}

/*
 * Inverse of x on the proper part V1: for proper f, t*f has a finite value c
 * at infinity, t*f - c lies back in V1, and x carries it to f.
 */
template <FieldElement F>
LocalElem<F> inv_x_on_proper(const LocalElem<F>& f) {
    if (!f.is_proper())
        throw std::domain_error("inv_x_on_proper: input has a nonzero polynomial part");
    RatFunc<F> tf(f.value().num().shifted_up(), f.value().den());
    std::optional<F> c = tf.value_at_infinity();  // finite: deg(t*num) <= deg(den)
    return LocalElem<F>(tf - RatFunc<F>::from_poly(Poly<F>(*c)));
}

/*
 * Inverse of x - 1 on V0: x is nilpotent on polynomials of bounded degree,
 * so (x - 1)^{-1} = -(1 + x + x^2 + ...), a finite sum on each input.
 */
template <FieldElement F>
Poly<F> inv_x_minus_1_on_poly(const Poly<F>& p) {
    Poly<F> acc = p;
    Poly<F> q = p;
    while (q.size() > 1) {
        // x on V0 drops the constant coefficient and shifts down
        q = Poly<F>::from_coeffs(std::vector<F>(q.coeffs().begin() + 1, q.coeffs().end()));
        acc = acc + q;
    }
    return -acc;
}

template <FieldElement F>
LocalElem<F> apply_inv_x_minus_e(const LocalElem<F>& f) {
    SplitPair<F> s = split(f);
    return LocalElem<F>::from_poly(inv_x_minus_1_on_poly(s.v0)) + inv_x_on_proper(s.v1);
}

template <FieldElement F>
LocalElem<F> apply_gen(Gen g, const LocalElem<F>& f) {
    switch (g) {
        case Gen::Y: return apply_y(f);
        case Gen::X: return apply_x(f);
        case Gen::E: return apply_e(f);
        case Gen::InvYMinus1: return apply_inv_y_minus_1(f);
        case Gen::InvXMinusE: return apply_inv_x_minus_e(f);
        case Gen::Identity: return f;
    }
    throw std::logic_error("apply_gen: unreachable");
}

template <FieldElement F>
LocalElem<F> apply_word(const std::vector<Gen>& word, LocalElem<F> f) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = apply_gen(*it, f);
    return f;
}

/*
 * Formal k-linear combination of words over the generators. The empty word
 * is the identity operator; an empty term list is the zero operator.
 * Composition multiplies term-by-term (scalars are central).
 */
template <FieldElement F>
class OperatorExpr {
   public:
    struct Term {
        F scalar;
        std::vector<Gen> word;
    };

    static OperatorExpr zero() { return OperatorExpr({}); }
    static OperatorExpr identity(const F& like) {
        return OperatorExpr({Term{like.one_like(), {}}});
    }
    static OperatorExpr generator(Gen g, const F& like) {
        return OperatorExpr({Term{like.one_like(), {g}}});
    }
    static OperatorExpr word(std::vector<Gen> w, const F& like) {
        return OperatorExpr({Term{like.one_like(), std::move(w)}});
    }

    const std::vector<Term>& terms() const { return terms_; }

    OperatorExpr operator+(const OperatorExpr& o) const {
        std::vector<Term> t = terms_;
        t.insert(t.end(), o.terms_.begin(), o.terms_.end());
        return OperatorExpr(std::move(t));
    }

    OperatorExpr operator-() const {
        std::vector<Term> t = terms_;
        for (Term& term : t) term.scalar = -term.scalar;
        return OperatorExpr(std::move(t));
    }

    OperatorExpr operator-(const OperatorExpr& o) const { return *this + (-o); }

    OperatorExpr operator*(const OperatorExpr& o) const {
        std::vector<Term> t;
        t.reserve(terms_.size() * o.terms_.size());
        for (const Term& a : terms_)
            for (const Term& b : o.terms_) {
                std::vector<Gen> w = a.word;
                w.insert(w.end(), b.word.begin(), b.word.end());
                t.push_back(Term{a.scalar * b.scalar, std::move(w)});
            }
        return OperatorExpr(std::move(t));
    }

    OperatorExpr operator*(const F& s) const {
        std::vector<Term> t = terms_;
        for (Term& term : t) term.scalar = term.scalar * s;
        return OperatorExpr(std::move(t));
    }

    LocalElem<F> apply(const LocalElem<F>& f) const {
        LocalElem<F> acc = LocalElem<F>::zero(f.field_zero());
        for (const Term& t : terms_) acc = acc + apply_word(t.word, f) * t.scalar;
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const Term& t : terms_) {
            if (!out.empty()) out += " + ";
            out += t.scalar.str();
            for (Gen g : t.word) {
                out += "*";
                out += gen_name(g);
            }
            if (t.word.empty()) out += "*1";
        }
        return out;
    }

   private:
    explicit OperatorExpr(std::vector<Term> terms) : terms_(std::move(terms)) {}
    std::vector<Term> terms_;
};

template <FieldElement F>
LocalElem<F> apply_operator(const OperatorExpr<F>& op, const LocalElem<F>& f) {
    return op.apply(f);
}

/*
 * Probe sets: finite witness lists for pointwise operator checks. Agreement
 * on probes is evidence, never a proof of operator equality.
 */
template <FieldElement F>
struct ProbeSet {
    std::vector<LocalElem<F>> probes;
    std::uint64_t seed = 0;

    // the eight canonical probes, plus seeded random local elements with
    // numerator/denominator degrees <= 4
    static ProbeSet canonical(const F& like, std::uint64_t seed, std::size_t random_count = 20) {
        ProbeSet ps;
        ps.seed = seed;
        static const char* const kCanonical[] = {
            "1", "t", "t^2", "t^3", "(1-t)^-1", "t/(1-t)", "(1+t^2)/(1+t)", "1/(1+t)",
        };
        for (const char* text : kCanonical) ps.probes.push_back(parse_local(text, like));
        Rng rng(seed);
        for (std::size_t i = 0; i < random_count; ++i)
            ps.probes.push_back(random_local(like, rng));
        return ps;
    }

    static LocalElem<F> random_local(const F& like, Rng& rng) {
        auto coeff = [&]() { return like.from_int(rng.in_range(-9, 9)); };
        auto rand_poly = [&](bool unit_at_zero) {
            std::size_t deg = static_cast<std::size_t>(rng.in_range(0, 4));
            std::vector<F> c;
            c.reserve(deg + 1);
            for (std::size_t i = 0; i <= deg; ++i) c.push_back(coeff());
            if (unit_at_zero)
                while (c[0].is_zero()) c[0] = coeff();
            return Poly<F>::from_coeffs(std::move(c));
        };
        Poly<F> num = rand_poly(false);
        Poly<F> den = rand_poly(true);
        return LocalElem<F>(RatFunc<F>(std::move(num), std::move(den)));
    }
};

template <FieldElement F>
struct IdentityFailure {
    std::size_t probe_index;
    LocalElem<F> probe;
    LocalElem<F> lhs_value;
    LocalElem<F> rhs_value;
};

template <FieldElement F>
struct IdentityReport {
    bool pass = true;
    std::size_t probes_checked = 0;
    std::vector<IdentityFailure<F>> failures;  // sorted by probe index
};

template <FieldElement F>
IdentityReport<F> check_identity(const OperatorExpr<F>& lhs, const OperatorExpr<F>& rhs,
                                 const ProbeSet<F>& probes) {
    if (probes.probes.empty()) throw std::invalid_argument("check_identity: empty probe set");
    IdentityReport<F> rep;
    rep.probes_checked = probes.probes.size();
    for (std::size_t i = 0; i < probes.probes.size(); ++i) {
        const LocalElem<F>& f = probes.probes[i];
        LocalElem<F> lv = lhs.apply(f);
        LocalElem<F> rv = rhs.apply(f);
        if (lv != rv) {
            rep.pass = false;
            rep.failures.push_back(IdentityFailure<F>{i, f, std::move(lv), std::move(rv)});
        }
    }
    return rep;
}

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skipped: return "SKIPPED";
    }
    return "?";
}

template <FieldElement F>
struct MainCheck {
    std::string name;
    CheckStatus status;
    std::string detail;
    std::vector<IdentityFailure<F>> failures;
};

template <FieldElement F>
struct MainReport {
    std::vector<MainCheck<F>> checks;
    std::size_t probe_count = 0;
    bool all_pass = true;     // no FAIL entries (SKIPPED tolerated)
    bool any_skipped = false;
};

/*
 * The full witness suite:
 *   - x*y = id on every probe, while (y*x)(1) = 0 != 1;
 *   - e is idempotent and commutes with x;
 *   - (y-1) and (x-e) have two-sided pointwise inverses;
 *   - y = 1 + (y-1) and x = e + (x-e), each a commuting idempotent+unit pair.
 * The y*x witness check needs the constant probe 1 and is SKIPPED if absent.
 */
template <FieldElement F>
MainReport<F> verify_main_proposition(const ProbeSet<F>& probes) {
    if (probes.probes.empty())
        throw std::invalid_argument("verify_main_proposition: empty probe set");
    const F like = probes.probes.front().field_one();

    using Expr = OperatorExpr<F>;
    const Expr id = Expr::identity(like);
    const Expr y = Expr::generator(Gen::Y, like);
    const Expr x = Expr::generator(Gen::X, like);
    const Expr e = Expr::generator(Gen::E, like);
    const Expr iy1 = Expr::generator(Gen::InvYMinus1, like);
    const Expr ixe = Expr::generator(Gen::InvXMinusE, like);
    const Expr y_minus_1 = y - id;
    const Expr x_minus_e = x - e;

    MainReport<F> rep;
    rep.probe_count = probes.probes.size();

    auto add_identity = [&](const char* name, const Expr& lhs, const Expr& rhs) {
        IdentityReport<F> r = check_identity(lhs, rhs, probes);
        MainCheck<F> c;
        c.name = name;
        c.status = r.pass ? CheckStatus::Pass : CheckStatus::Fail;
        c.detail = "agrees on " + std::to_string(r.probes_checked - r.failures.size()) + "/" +
                   std::to_string(r.probes_checked) + " probes";
        c.failures = std::move(r.failures);
        if (!r.pass) rep.all_pass = false;
        rep.checks.push_back(std::move(c));
    };

    add_identity("xy_eq_id", x * y, id);

    {
        // disproof witness: (y*x)(1) must be 0, not 1
        MainCheck<F> c;
        c.name = "yx_on_1_is_0_not_1";
        const LocalElem<F> one = LocalElem<F>::one(like);
        const LocalElem<F> zero = LocalElem<F>::zero(like);
        bool have_one = false;
        for (const LocalElem<F>& f : probes.probes)
            if (f == one) {
                have_one = true;
                break;
            }
        if (!have_one) {
            c.status = CheckStatus::Skipped;
            c.detail = "constant probe 1 absent; witness unavailable";
            rep.any_skipped = true;
        } else {
            LocalElem<F> v = (y * x).apply(one);
            if (v == zero && v != one) {
                c.status = CheckStatus::Pass;
                c.detail = "(y*x)(1) = 0, differs from 1";
            } else {
                c.status = CheckStatus::Fail;
                c.detail = "(y*x)(1) = " + local_to_string(v);
                rep.all_pass = false;
            }
        }
        rep.checks.push_back(std::move(c));
    }

    add_identity("e_idempotent", e * e, e);
    add_identity("ex_commute", e * x, x * e);
    add_identity("x_minus_e_right_inverse", x_minus_e * ixe, id);
    add_identity("x_minus_e_left_inverse", ixe * x_minus_e, id);
    add_identity("y_minus_1_right_inverse", y_minus_1 * iy1, id);
    add_identity("y_minus_1_left_inverse", iy1 * y_minus_1, id);
    add_identity("y_eq_1_plus_unit", y, id + y_minus_1);
    add_identity("y_parts_commute", id * y_minus_1, y_minus_1 * id);
    add_identity("x_eq_e_plus_unit", x, e + x_minus_e);
    add_identity("x_parts_commute", e * x_minus_e, x_minus_e * e);

    return rep;
}

}  // namespace cleanring
