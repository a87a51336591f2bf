/*
   Copyright 2026 The pcurv Authors

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

// Input specifications, the run driver behind the command line, result
// documents with a JSON form, and the sqrt(p) scaling benchmark.

#ifndef PCURV_DOCUMENT_HPP
#define PCURV_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcurv/diffop.hpp"
#include "pcurv/reconstruct.hpp"

namespace pcurv {

struct InputSpec {
    std::uint64_t p = 0;
    std::size_t ext = 1;
    InputKind kind = InputKind::Operator;
    std::string op;                                 // operator text
    std::string f_A;                                // system denominator
    std::vector<std::vector<std::string>> A_tilde;  // system numerator

    bool operator==(const InputSpec&) const = default;
};

// {"p": .., "ext": .., "f_A": "..", "A_tilde": [[".."]]}; ext defaults to 1.
// Throws SyntaxError on malformed JSON or missing fields.
InputSpec input_from_system_json(const std::string& text);

Problem build_problem(const InputSpec& spec, const Field& k);

enum class Algorithm { Deterministic, MonteCarlo, Naive };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);  // throws InvalidArgument

struct RunFlags {
    Algorithm algo = Algorithm::Deterministic;
    double epsilon = 0.1;  // Monte Carlo only
    std::uint64_t seed = 0;
    bool check = false;
    bool profile = false;
    unsigned threads = 1;
};

struct ResultDocument {
    InputSpec input;
    std::size_t order = 0;
    std::size_t degree = 0;
    Algorithm algo = Algorithm::Deterministic;
    // Absent for the naive algorithm when p <= r.
    std::optional<ReconParams> params;
    std::vector<std::string> factors;  // in X and T, X = x^p
    double seconds = 0;
    std::optional<bool> match;
    std::optional<std::vector<std::string>> reference_factors;
    std::optional<std::vector<std::size_t>> profile;
    std::optional<MonteCarloReport> montecarlo;
};

// Throws the library errors of the chosen algorithm. A failed check is
// reported through match, not thrown.
ResultDocument run(const InputSpec& spec, const RunFlags& flags);

std::string to_json(const ResultDocument& doc);
// Factor strings are parsed and rendered again, so to_json after
// document_from_json reproduces the input of document_from_json.
ResultDocument document_from_json(const std::string& text);

struct BenchRow {
    std::uint64_t p = 0;
    double median_seconds = 0;
    std::size_t runs = 0;
};

// Median wall time of invariant_factors_at at the smallest positive integer
// that is not a pole, one row per prime. Throws NotPrime or CharTooSmall.
std::vector<BenchRow> bench_scaling(const InputSpec& spec, const std::vector<std::uint64_t>& primes,
                                    std::size_t repeats = 5);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace pcurv

#endif
