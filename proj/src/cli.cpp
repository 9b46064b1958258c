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

#include "cleanring/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>

#include "cleanring/finite_lab.hpp"
#include "cleanring/laurent.hpp"
#include "cleanring/operators.hpp"
#include "cleanring/prime_field.hpp"
#include "cleanring/rational.hpp"

namespace cleanring {
namespace {

using nlohmann::json;

struct FieldSpec {
    bool rationals;
    std::int64_t p;  // meaningful only when !rationals
    std::string name;
};

FieldSpec parse_field_spec(const std::string& text) {
    if (text == "Q" || text == "q") return {true, 0, "Q"};
    std::string lower;
    for (char ch : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower.size() > 2 && lower.rfind("gf", 0) == 0 &&
        std::all_of(lower.begin() + 2, lower.end(),
                    [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; })) {
        std::int64_t p = 0;
        try {
            p = std::stoll(lower.substr(2));
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("field modulus out of range: " + text);
        }
        Fp probe(0, p);  // rejects non-prime moduli
        return {false, p, "gf" + std::to_string(p)};
    }
    throw std::invalid_argument("unknown field: " + text + " (expected Q or gf<p>)");
}

void validate_config(const RunConfig& cfg) {
    if (cfg.probe_count < 1) throw std::invalid_argument("probe count must be positive");
    if (cfg.budget < 1) throw std::invalid_argument("budget must be positive");
    if (cfg.precision < 1) throw std::invalid_argument("precision must be positive");
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// ---------------------------------------------------------------- verify ---

template <FieldElement F>
int verify_impl(const F& like, const std::string& field_name, const RunConfig& cfg,
                std::ostream& out) {
    const ProbeSet<F> probes =
        ProbeSet<F>::canonical(like, cfg.seed, static_cast<std::size_t>(cfg.probe_count));
    const MainReport<F> rep = verify_main_proposition(probes);

    std::size_t failed = 0, skipped = 0;
    for (const auto& c : rep.checks) {
        if (c.status == CheckStatus::Fail) ++failed;
        if (c.status == CheckStatus::Skipped) ++skipped;
    }
    const bool ok = rep.all_pass && !(cfg.strict && rep.any_skipped);

    if (cfg.json) {
        json j;
        j["field"] = field_name;
        j["seed"] = cfg.seed;
        j["probe_count"] = rep.probe_count;
        j["strict"] = cfg.strict;
        j["all_pass"] = rep.all_pass;
        j["any_skipped"] = rep.any_skipped;
        j["ok"] = ok;
        j["checks"] = json::array();
        for (const auto& c : rep.checks) {
            json jc;
            jc["name"] = c.name;
            jc["status"] = check_status_name(c.status);
            jc["detail"] = c.detail;
            if (!c.failures.empty()) {
                jc["failures"] = json::array();
                for (const auto& f : c.failures)
                    jc["failures"].push_back({{"probe_index", f.probe_index},
                                              {"probe", local_to_string(f.probe)},
                                              {"lhs", local_to_string(f.lhs_value)},
                                              {"rhs", local_to_string(f.rhs_value)}});
            }
            j["checks"].push_back(std::move(jc));
        }
        out << j.dump(2) << "\n";
    } else {
        out << "field: " << field_name << "\n";
        out << "probes: " << rep.probe_count << " (seed " << cfg.seed << ")\n";
        for (const auto& c : rep.checks) {
            out << "  " << std::left << std::setw(26) << c.name << std::setw(9)
                << check_status_name(c.status) << c.detail << "\n";
            if (!c.failures.empty()) {
                const auto& f = c.failures.front();
                out << "      first failure at probe " << f.probe_index << ": "
                    << local_to_string(f.probe) << "  lhs = " << local_to_string(f.lhs_value)
                    << "  rhs = " << local_to_string(f.rhs_value) << "\n";
            }
        }
        out << "result: " << pass_fail(ok) << " (" << rep.checks.size() << " checks, " << failed
            << " failed, " << skipped << " skipped)\n";
    }
    return ok ? 0 : 1;
}

// ----------------------------------------------------------- split/apply ---

template <FieldElement F>
int split_impl(const F& like, const std::string& expr, const RunConfig& cfg, std::ostream& out) {
    const LocalElem<F> f = parse_local(expr, like);
    const SplitPair<F> parts = split(f);
    const std::string v0 = poly_to_string(parts.v0);
    const std::string v1 = local_to_string(parts.v1);
    if (cfg.json) {
        json j;
        j["input"] = local_to_string(f);
        j["v0"] = v0;
        j["v1"] = v1;
        out << j.dump(2) << "\n";
    } else {
        out << "v0 = " << v0 << "\n";
        out << "v1 = " << v1 << "\n";
    }
    return 0;
}

template <FieldElement F>
int apply_impl(const F& like, const std::string& word_text, const std::string& expr,
               const RunConfig& cfg, std::ostream& out) {
    const std::vector<Gen> word = parse_word(word_text);
    const LocalElem<F> f = parse_local(expr, like);
    const LocalElem<F> result = apply_word(word, f);
    if (cfg.json) {
        json j;
        j["word"] = word_text;
        j["input"] = local_to_string(f);
        j["result"] = local_to_string(result);
        out << j.dump(2) << "\n";
    } else {
        out << local_to_string(result) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- finite ---

int finite_impl(const FiniteOptions& opt, const RunConfig& cfg, std::ostream& out) {
    const ClassificationReport rep = classify_ring(opt.n, opt.p, cfg.budget);
    const std::uint64_t unique_count =
        static_cast<std::uint64_t>(std::count_if(rep.elements.begin(), rep.elements.end(),
                                                 [](const ElementRecord& r) {
                                                     return r.is_uniquely_strongly_clean;
                                                 }));

    if (!opt.csv_path.empty()) {
        std::ofstream file(opt.csv_path);
        if (!file) throw std::invalid_argument("cannot write csv file: " + opt.csv_path);
        file << classification_csv(rep);
    }

    if (cfg.json) {
        json j;
        j["n"] = rep.n;
        j["p"] = rep.p;
        j["ring_size"] = rep.ring_size;
        j["idempotent_count"] = rep.idempotent_count;
        j["unit_count"] = rep.unit_count;
        j["all_clean"] = rep.all_clean;
        j["all_strongly_clean"] = rep.all_strongly_clean;
        j["dedekind_finite"] = rep.dedekind_finite;
        j["uniquely_strongly_clean_count"] = unique_count;
        j["elements"] = json::array();
        for (const auto& r : rep.elements)
            j["elements"].push_back({{"index", r.index},
                                     {"element", r.element},
                                     {"clean_count", r.clean_count},
                                     {"strong_count", r.strong_count},
                                     {"is_clean", r.is_clean},
                                     {"is_strongly_clean", r.is_strongly_clean},
                                     {"is_uniquely_strongly_clean", r.is_uniquely_strongly_clean}});
        out << j.dump(2) << "\n";
    } else {
        out << "ring: M_" << rep.n << "(GF(" << rep.p << ")), " << rep.ring_size << " elements\n";
        out << "idempotents: " << rep.idempotent_count << "\n";
        out << "units: " << rep.unit_count << "\n";
        out << "all_clean: " << (rep.all_clean ? "true" : "false") << "\n";
        out << "all_strongly_clean: " << (rep.all_strongly_clean ? "true" : "false") << "\n";
        out << "dedekind_finite: " << (rep.dedekind_finite ? "true" : "false") << "\n";
        out << "uniquely_strongly_clean: " << unique_count << "/" << rep.ring_size
            << " elements\n";
        if (!opt.csv_path.empty())
            out << "csv: " << opt.csv_path << " (" << rep.elements.size() << " rows)\n";
    }
    return 0;
}

// --------------------------------------------------------------- laurent ---

template <RingElement R, typename CoeffJson>
json series_to_json(const TruncatedLaurent<R>& s, CoeffJson&& coeff_json) {
    json j;
    j["first"] = s.first_exponent();
    j["tail"] = s.tail();
    j["str"] = s.str();
    j["coefficients"] = json::array();
    for (std::int64_t k = s.first_exponent(); k < s.tail(); ++k)
        j["coefficients"].push_back(coeff_json(s.coeff(k)));
    return j;
}

template <RingElement R, typename CoeffJson>
int laurent_impl(const TruncatedLaurent<R>& x, const std::string& base_name, const RunConfig& cfg,
                 std::ostream& out, CoeffJson&& coeff_json) {
    const TwoUnitDecomposition<R> d = two_unit_decompose(x);
    const bool sum_ok = (d.u + d.u2 == x);
    const bool commute_ok = (d.u * d.u2 == d.u2 * d.u);
    bool u_unit = true, u2_unit = true;
    try {
        invert_unit(d.u);  // self-verifying two-sided inverse
    } catch (const std::exception&) {
        u_unit = false;
    }
    try {
        invert_unit(d.u2);
    } catch (const std::exception&) {
        u2_unit = false;
    }
    const bool ok = sum_ok && commute_ok && u_unit && u2_unit;

    if (cfg.json) {
        json j;
        j["base"] = base_name;
        j["x"] = series_to_json(x, coeff_json);
        j["shift"] = d.shift;
        j["u"] = series_to_json(d.u, coeff_json);
        j["u2"] = series_to_json(d.u2, coeff_json);
        j["sum_matches"] = sum_ok;
        j["units_commute"] = commute_ok;
        j["u_is_unit"] = u_unit;
        j["u2_is_unit"] = u2_unit;
        j["ok"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "base: " << base_name << "\n";
        out << "x  = " << x.str() << "\n";
        out << "N  = " << d.shift << "\n";
        out << "u  = " << d.u.str() << "\n";
        out << "u2 = " << d.u2.str() << "\n";
        out << "sum matches x: " << pass_fail(sum_ok) << "\n";
        out << "units commute: " << pass_fail(commute_ok) << "\n";
        out << "u invertible:  " << pass_fail(u_unit) << "\n";
        out << "u2 invertible: " << pass_fail(u2_unit) << "\n";
        out << "result: " << pass_fail(ok) << "\n";
    }
    return ok ? 0 : 1;
}

json rational_json(const Rational& c) { return json(c.str()); }

json fp_json(const Fp& c) { return json(c.residue()); }

json mat_json(const Mat& c) {
    json rows = json::array();
    for (std::size_t i = 0; i < c.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < c.dim(); ++j) row.push_back(c.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

int laurent_random(const LaurentOptions& opt, const RunConfig& cfg, std::ostream& out) {
    Rng rng(cfg.seed);
    const std::string& base = opt.base;
    if (base == "q" || base == "Q") {
        auto x = random_series<Rational>(rng, -3, 3, cfg.precision, [](Rng& r) {
            return Rational(r.in_range(-9, 9), r.in_range(1, 4));
        });
        return laurent_impl(x, "q", cfg, out, rational_json);
    }
    if (base == "m2gf2") {
        auto x = random_series<Mat>(rng, -3, 3, cfg.precision, [](Rng& r) {
            Mat m(2, 2);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) m.set(i, j, r.in_range(0, 1));
            return m;
        });
        return laurent_impl(x, "m2gf2", cfg, out, mat_json);
    }
    // fall back to the field grammar: gf<p>
    const FieldSpec fs = [&] {
        try {
            return parse_field_spec(base);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("unknown base: " + base + " (expected q, gf<p>, m2gf2)");
        }
    }();
    if (fs.rationals) throw std::invalid_argument("unknown base: " + base);
    const std::int64_t p = fs.p;
    auto x = random_series<Fp>(rng, -3, 3, cfg.precision,
                               [p](Rng& r) { return Fp(r.in_range(0, p - 1), p); });
    return laurent_impl(x, fs.name, cfg, out, fp_json);
}

}  // namespace

// ------------------------------------------------------------ public API ---

int cmd_verify_main(const RunConfig& cfg, std::ostream& out) {
    validate_config(cfg);
    const FieldSpec fs = parse_field_spec(cfg.field);
    if (fs.rationals) return verify_impl(Rational(), fs.name, cfg, out);
    return verify_impl(Fp(0, fs.p), fs.name, cfg, out);
}

int cmd_split(const std::string& expr, const RunConfig& cfg, std::ostream& out) {
    validate_config(cfg);
    const FieldSpec fs = parse_field_spec(cfg.field);
    if (fs.rationals) return split_impl(Rational(), expr, cfg, out);
    return split_impl(Fp(0, fs.p), expr, cfg, out);
}

int cmd_apply(const std::string& word, const std::string& expr, const RunConfig& cfg,
              std::ostream& out) {
    validate_config(cfg);
    const FieldSpec fs = parse_field_spec(cfg.field);
    if (fs.rationals) return apply_impl(Rational(), word, expr, cfg, out);
    return apply_impl(Fp(0, fs.p), word, expr, cfg, out);
}

int cmd_finite(const FiniteOptions& opt, const RunConfig& cfg, std::ostream& out) {
    validate_config(cfg);
    return finite_impl(opt, cfg, out);
}

int cmd_laurent(const LaurentOptions& opt, const RunConfig& cfg, std::ostream& out) {
    validate_config(cfg);
    if (opt.series.has_value() == opt.random)
        throw std::invalid_argument("specify exactly one of --series and --random");
    if (opt.random) return laurent_random(opt, cfg, out);

    const FieldSpec fs = parse_field_spec(cfg.field);
    if (fs.rationals) {
        const RatFunc<Rational> f = parse_ratfunc(*opt.series, Rational());
        return laurent_impl(laurent_expand(f, cfg.precision), fs.name, cfg, out, rational_json);
    }
    const RatFunc<Fp> f = parse_ratfunc(*opt.series, Fp(0, fs.p));
    return laurent_impl(laurent_expand(f, cfg.precision), fs.name, cfg, out, fp_json);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    FiniteOptions fopt;
    LaurentOptions lopt;
    std::string split_expr, apply_word_text, apply_expr, series_text;

    CLI::App app{"exact arithmetic toolkit for strongly clean one-sided inverses", "cleanring"};
    app.require_subcommand(1);

    app.add_option("--field", cfg.field, "coefficient field: Q or gf<p> with p prime")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for random probes and series")
        ->capture_default_str();
    app.add_flag("--json", cfg.json, "machine-readable JSON output");
    app.add_flag("--strict", cfg.strict, "treat skipped checks as failures");
    app.add_option("--budget", cfg.budget, "finite-ring enumeration cap")->capture_default_str();
    app.add_option("--precision", cfg.precision, "Laurent series coefficients to compute")
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    verify->fallthrough();
    CLI::App* vmain = verify->add_subcommand(
        "main", "x*y = 1 with y*x != 1, both strongly clean, on exact probes");
    vmain->fallthrough();
    vmain->add_option("--probes", cfg.probe_count, "random probes beyond the canonical set")
        ->capture_default_str();

    CLI::App* sp = app.add_subcommand("split", "project an element onto V0 and V1");
    sp->fallthrough();
    sp->add_option("expr", split_expr, "element of the local ring, e.g. \"t/(1-t)\"")
        ->required();

    CLI::App* ap = app.add_subcommand("apply", "apply a generator word to an element");
    ap->fallthrough();
    ap->add_option("word", apply_word_text, "generators y x e iy1 ixe, leftmost applied last")
        ->required();
    ap->add_option("expr", apply_expr, "element of the local ring")->required();

    CLI::App* fin = app.add_subcommand("finite", "classify a finite matrix ring M_n(GF(p))");
    fin->fallthrough();
    fin->add_option("--n", fopt.n, "matrix dimension")->required();
    fin->add_option("--p", fopt.p, "prime modulus")->required();
    fin->add_option("--csv", fopt.csv_path, "write the per-element table to this file");

    CLI::App* lau = app.add_subcommand("laurent", "two-commuting-units decomposition");
    lau->fallthrough();
    CLI::Option* series_opt =
        lau->add_option("--series", series_text, "rational function to expand around t = 0");
    CLI::Option* random_flag = lau->add_flag("--random", lopt.random, "use a seeded random series");
    series_opt->excludes(random_flag);
    random_flag->excludes(series_opt);
    lau->add_option("--base", lopt.base, "coefficient ring for --random: q, gf<p>, m2gf2")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (series_opt->count() > 0) lopt.series = series_text;

    try {
        if (vmain->parsed()) return cmd_verify_main(cfg, out);
        if (sp->parsed()) return cmd_split(split_expr, cfg, out);
        if (ap->parsed()) return cmd_apply(apply_word_text, apply_expr, cfg, out);
        if (fin->parsed()) return cmd_finite(fopt, cfg, out);
        if (lau->parsed()) return cmd_laurent(lopt, cfg, out);
        err << "error: no subcommand given\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cleanring
