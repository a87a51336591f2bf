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

#include "pcurv/nilprofile.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "pcurv/error.hpp"

namespace pcurv {

namespace {

std::string join(const std::vector<std::size_t>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string tuple(const std::vector<std::size_t>& v) { return "(" + join(v, ",") + ")"; }

std::vector<std::size_t> differences(const std::vector<std::size_t>& v) {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) d.push_back(v[i] - v[i + 1]);
    return d;
}

// Empty when valid; otherwise why not.
std::string profile_defect(const std::vector<std::size_t>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i + 1] > v[i]) return "ranks increase at m=" + std::to_string(i + 1);
    const auto d = differences(v);
    for (std::size_t i = 1; i < d.size(); ++i)
        if (d[i] > d[i - 1]) return "differences " + tuple(d) + " increase at m=" + std::to_string(i);
    return {};
}

std::size_t valuation(const Field& k, const Poly& f) {
    std::size_t v = 0;
    while (v < f.size() && k.is_zero(f[v])) ++v;
    return v;
}

}  // namespace

bool is_valid_profile(const std::vector<std::size_t>& ranks) { return profile_defect(ranks).empty(); }

RankProfile profile_from_valuations(const std::vector<std::size_t>& valuations) {
    std::size_t dim = 0, longest = 0;
    for (auto v : valuations) {
        dim += v;
        longest = std::max(longest, v);
    }
    RankProfile out;
    for (std::size_t m = 0; m <= longest; ++m) {
        std::size_t killed = 0;
        for (auto v : valuations) killed += std::min(m, v);
        out.ranks.push_back(dim - killed);
    }
    return out;
}

RankProfile profile_from_invariant_factors(const Field& k, const std::vector<Poly>& factors) {
    std::vector<std::size_t> v;
    for (const auto& f : factors) v.push_back(valuation(k, f));
    return profile_from_valuations(v);
}

RankProfile profile_from_invariant_factors(const InvFactorsBivar& factors) {
    std::vector<std::size_t> v;
    for (const auto& f : factors.factors) {
        std::size_t t = 0;
        while (t < f.size() && f[t].empty()) ++t;
        v.push_back(t);
    }
    return profile_from_valuations(v);
}

std::size_t sym_power_rank(std::size_t n, std::size_t base_rank) {
    if (n == 0) raise(ErrorCode::InvalidArgument, "symmetric power of order 0");
    // C(n-1+b, n) = C(n-1+b, b-1), saturating.
    if (base_rank == 0) return 0;
    const std::size_t top = n - 1 + base_rank, k = std::min(n, base_rank - 1);
    unsigned __int128 c = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        c = c * (top - k + i) / i;
        if (c > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
    }
    return static_cast<std::size_t>(c);
}

FeasibilityResult feasibility_check(const RankProfile& profile, const FactorizationHypothesis& hyp) {
    const auto& R = profile.ranks;
    if (R.empty() || R[0] != hyp.total_size)
        raise(ErrorCode::InvalidArgument, "profile must start at the total size " + std::to_string(hyp.total_size));
    if (!is_valid_profile(R)) raise(ErrorCode::InvalidArgument, "invalid rank profile: " + profile_defect(R));
    if (hyp.top_block_size > hyp.total_size) raise(ErrorCode::InvalidArgument, "top block larger than the matrix");
    const std::size_t sym_size = hyp.total_size - hyp.top_block_size;
    // sym_power_rank(n, 1) = n, so larger n cannot fit a nonzero base.
    const std::size_t n_max = hyp.n_max ? hyp.n_max : std::max(hyp.n_min, sym_size);

    FeasibilityResult res;
    for (std::size_t n = hyp.n_min; n <= n_max; ++n) {
        CandidateTrace tr;
        tr.n = n;
        for (std::size_t m = 0; m < R.size(); ++m) {
            std::vector<std::size_t> ok;
            for (std::size_t b = 0; b <= hyp.total_size; ++b) {
                const std::size_t x = sym_power_rank(n, b);
                if (x > R[m]) break;
                const bool fits = m == 0 ? x == sym_size : R[m] - x <= hyp.top_block_size;
                if (fits) ok.push_back(b);
            }
            tr.allowed.push_back(std::move(ok));
        }

        std::vector<std::size_t> cur;
        std::function<void(std::size_t)> walk = [&](std::size_t m) {
            if (m == R.size()) {
                std::vector<std::size_t> sym;
                for (auto b : cur) sym.push_back(sym_power_rank(n, b));
                if (const std::string d = profile_defect(sym); !d.empty()) {
                    tr.excluded.push_back(cur);
                    tr.excluded_reasons.push_back("symmetric-power ranks " + tuple(sym) + ": " + d);
                    return;
                }
                const std::string why = profile_defect(cur);
                tr.forced.push_back(cur);
                tr.reasons.push_back(why);
                if (why.empty() && !res.feasible) {
                    res.feasible = true;
                    res.n = n;
                    res.base_profile = cur;
                }
                return;
            }
            for (auto b : tr.allowed[m]) {
                cur.push_back(b);
                walk(m + 1);
                cur.pop_back();
            }
        };
        walk(0);
        res.trace.push_back(std::move(tr));
    }
    return res;
}

std::vector<std::string> FeasibilityResult::render() const {
    std::vector<std::string> out;
    for (const auto& tr : trace) {
        const std::string head = "n=" + std::to_string(tr.n) + ": ";
        std::string line = head;
        bool dead = false;
        for (std::size_t m = 0; m < tr.allowed.size() && !dead; ++m) {
            if (m) line += "; ";
            line += "m=" + std::to_string(m) + " b in {" + join(tr.allowed[m], ",") + "}";
            dead = tr.allowed[m].empty();
        }
        out.push_back(line);
        for (std::size_t i = 0; i < tr.excluded.size(); ++i)
            out.push_back(head + "base profile " + tuple(tr.excluded[i]) + " excluded: " + tr.excluded_reasons[i]);
        for (std::size_t i = 0; i < tr.forced.size(); ++i)
            out.push_back(head + "forced base profile " + tuple(tr.forced[i]) +
                          (tr.reasons[i].empty() ? " is valid" : " rejected: " + tr.reasons[i]));
    }
    out.push_back(feasible ? "feasible: n=" + std::to_string(n) + " base profile " + tuple(base_profile)
                           : "infeasible");
    return out;
}

}  // namespace pcurv
