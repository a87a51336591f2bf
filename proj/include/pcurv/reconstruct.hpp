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

// Evaluation-interpolation drivers recovering the invariant factors of
// f^p A_p in F_q[X][T] from local evaluations: parameter selection, the
// deterministic single-point algorithm and the Monte Carlo algorithm.

#ifndef PCURV_RECONSTRUCT_HPP
#define PCURV_RECONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pcurv/bivar.hpp"
#include "pcurv/diffop.hpp"
#include "pcurv/field.hpp"

namespace pcurv {

enum class InputKind { System, Operator };

struct ProblemShape {
    InputKind kind = InputKind::System;
    std::size_t d = 0;
    std::size_t r = 1;
    // Degree of a_r; only used for operators. Zero reproduces the bounds for
    // operators with constant leading coefficient.
    std::size_t leading_degree = 0;
};

ProblemShape shape_of(const Problem& pb);

enum class ReconMode { Deterministic, MonteCarlo };

struct ReconParams {
    std::size_t D = 0;  // X-degree bound on the invariant factors
    std::size_t F = 0;  // bound on the degree sum of bad points
    ReconMode mode = ReconMode::Deterministic;
    double epsilon = 0;
    std::size_t s = 0;      // degree of the sample field over F_q
    std::size_t K = 0;      // number of sampled points
    std::size_t k_sel = 0;  // points used per interpolation
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

// Failure bound of the Monte Carlo algorithm for a given s, or +inf when
// q^s <= 4F. For D <= 2 the exponent K - 2(k - 1) is used in place of
// (D - 2)/s, which would make the bound at least 1/2.
long double montecarlo_failure_bound(std::size_t D, std::size_t F, long double q, std::size_t s);

// Smallest s with a finite bound <= eps; throws EpsilonOutOfRange when no
// s up to 4096 qualifies.
std::size_t minimal_sample_degree(std::size_t D, std::size_t F, long double q, double eps);

// Throws CharTooSmall when p <= r and EpsilonOutOfRange unless 0 < eps < 1.
ReconParams select_params(const ProblemShape& shape, std::uint64_t p, long double q,
                          std::optional<double> epsilon = std::nullopt);

InvFactorsBivar reconstruct_deterministic(const Problem& pb, const ReconParams& params);

struct MonteCarloReport {
    std::size_t samples = 0;        // black-box calls
    std::size_t pole_resamples = 0;
    std::vector<std::size_t> selected;
    std::vector<std::size_t> min_degrees;  // deg_T of I_1 ... I_j, cumulative
};

// Throws SelectionFailed when no admissible set of points exists and
// NoSolutionWithinBound when interpolation exceeds D.
InvFactorsBivar reconstruct_montecarlo(const Problem& pb, const ReconParams& params,
                                       MonteCarloReport* report = nullptr);

struct LemmaCheck {
    bool divides = true;  // every specialized product divides the local one
    bool equal = true;    // and they coincide, i.e. the point is good
};

// Compares the global factors specialized at X = a^p with the local factors
// at a, level by level through the products I_1 ... I_j.
LemmaCheck check_divisibility_lemma(const Problem& pb, const InvFactorsBivar& global, const Field& l, const Elem& a);
bool verify_divisibility_lemma(const Problem& pb, const Field& l, const Elem& a);

}  // namespace pcurv

#endif
