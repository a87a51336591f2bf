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

// Rank profiles m -> rank(M^m) of nilpotent parts and the combinatorial
// test for a block decomposition whose large block is a symmetric power.

#ifndef PCURV_NILPROFILE_HPP
#define PCURV_NILPROFILE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pcurv/bivar.hpp"
#include "pcurv/field.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

// ranks[m] = rank(N^m) for the nilpotent part N, from m = 0 down to the
// first zero (or the first repeat).
struct RankProfile {
    std::vector<std::size_t> ranks;
    bool operator==(const RankProfile&) const = default;
};

// Nonincreasing with nonincreasing differences, i.e. the rank sequence of
// some nilpotent matrix.
bool is_valid_profile(const std::vector<std::size_t>& ranks);

// From the T-adic valuations of the invariant factors.
RankProfile profile_from_valuations(const std::vector<std::size_t>& valuations);
RankProfile profile_from_invariant_factors(const Field& k, const std::vector<Poly>& factors);
RankProfile profile_from_invariant_factors(const InvFactorsBivar& factors);

// C(n - 1 + base_rank, n): rank of the n-th symmetric power of a matrix of
// rank base_rank, for nilpotent matrices.
std::size_t sym_power_rank(std::size_t n, std::size_t base_rank);

// A matrix of size total_size with an invariant block of size
// total_size - top_block_size that is an n-th symmetric power, n in
// [n_min, n_max]. n_max = 0 means the largest n for which a nontrivial base
// can fit, i.e. the size of the symmetric-power block.
struct FactorizationHypothesis {
    std::size_t total_size = 0;
    std::size_t top_block_size = 0;
    std::size_t n_min = 2;
    std::size_t n_max = 0;
};

struct CandidateTrace {
    std::size_t n = 0;
    // allowed[m]: base ranks b with C(n-1+b, n) compatible with ranks[m].
    std::vector<std::vector<std::size_t>> allowed;
    // Choices from allowed whose symmetric-power ranks are not the rank
    // sequence of any matrix.
    std::vector<std::vector<std::size_t>> excluded;
    std::vector<std::string> excluded_reasons;
    // Base profiles meeting every numeric constraint, each with the reason
    // it was rejected (empty reason for the witness).
    std::vector<std::vector<std::size_t>> forced;
    std::vector<std::string> reasons;
};

struct FeasibilityResult {
    bool feasible = false;
    std::size_t n = 0;                       // witness
    std::vector<std::size_t> base_profile;   // witness
    std::vector<CandidateTrace> trace;       // one entry per n examined
    std::vector<std::string> render() const;
};

// Exhaustive over n and all base profiles. Throws InvalidArgument when the
// profile is not valid or does not start at total_size.
FeasibilityResult feasibility_check(const RankProfile& profile, const FactorizationHypothesis& hyp);

}  // namespace pcurv

#endif
