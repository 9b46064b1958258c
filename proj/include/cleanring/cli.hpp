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

// Command-line front end.  The cmd_* functions implement one subcommand each,
// write their report to the given stream, and signal problems by throwing:
// ParseError / std::invalid_argument for usage mistakes, std::domain_error
// for mathematically invalid requests.  run_cli parses argv, dispatches, and
// maps outcomes onto the exit-code contract:
//   0  every check passed / output produced
//   1  a mathematical check failed, or the request left the math's domain
//   2  usage error (bad flags, bad syntax, invalid field)

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace cleanring {

struct RunConfig {
    std::string field = "Q";          // "Q" or "gf<p>" with p prime
    std::uint64_t seed = 0;           // probe / series randomization seed
    std::int64_t probe_count = 20;    // random probes appended to the canonical set
    std::uint64_t budget = 1ULL << 20;  // finite-ring enumeration cap
    std::int64_t precision = 16;      // Laurent coefficients to compute
    bool json = false;                // machine-readable output
    bool strict = false;              // treat skipped checks as failures
};

struct FiniteOptions {
    std::size_t n = 0;      // matrix dimension
    std::int64_t p = 0;     // prime modulus
    std::string csv_path;   // optional per-element CSV export
};

struct LaurentOptions {
    std::optional<std::string> series;  // expression to expand, or
    bool random = false;                // a seeded random series
    std::string base = "q";             // coefficient ring for --random: q, gf<p>, m2gf2
};

int cmd_verify_main(const RunConfig& cfg, std::ostream& out);
int cmd_split(const std::string& expr, const RunConfig& cfg, std::ostream& out);
int cmd_apply(const std::string& word, const std::string& expr, const RunConfig& cfg,
              std::ostream& out);
int cmd_finite(const FiniteOptions& opt, const RunConfig& cfg, std::ostream& out);
int cmd_laurent(const LaurentOptions& opt, const RunConfig& cfg, std::ostream& out);

// Full argv-to-exit-code pipeline used by the `cleanring` binary.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cleanring
