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

#include "pcurv/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "pcurv/ff.hpp"
#include "pcurv/interp.hpp"
#include "pcurv/local_eval.hpp"

namespace pcurv {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

struct SampleCounts {
    std::size_t K, k;
};

SampleCounts sample_counts(std::size_t D, std::size_t s) {
    const std::size_t k = ceil_div(D + 1, s);
    // D = 0 gives K = 0; at least 2k - 1 samples keep the bound meaningful.
    const std::size_t K = std::max(ceil_div(3 * D, s), 2 * k - 1);
    return {K, k};
}

Elem eval_denominator(const Problem& pb, const Field& l, const Elem& a) {
    const Field& k = base_field(pb);
    return FPoly(l).eval(embed_poly(l, k, FPoly(k).monic(denominator(pb))), a);
}

// Lifts the local factors at a (over l) into F_q[X][T] with X-degree <= D.
InvFactorsBivar lift_all(const Field& k, const std::vector<Poly>& local, const PowerBasis& basis, std::size_t D) {
    InvFactorsBivar out{k, {}};
    for (const auto& f : local) {
        BivarPoly g;
        for (const auto& c : f) g.push_back(basis.lift(c, D));
        out.factors.push_back(std::move(g));
    }
    return out;
}

std::vector<std::size_t> cumulative_degrees(const std::vector<Poly>& factors) {
    std::vector<std::size_t> cum;
    std::size_t acc = 0;
    for (const auto& f : factors) {
        acc += f.size() - 1;
        cum.push_back(acc);
    }
    return cum;
}

}  // namespace

ProblemShape shape_of(const Problem& pb) {
    ProblemShape s;
    s.d = degree(pb);
    s.r = order(pb);
    if (auto* L = std::get_if<DiffOperator>(&pb)) {
        s.kind = InputKind::Operator;
        s.leading_degree = L->leading().size() - 1;
    }
    return s;
}

long double montecarlo_failure_bound(std::size_t D, std::size_t F, long double q, std::size_t s) {
    // Logarithms keep q^s representable for large s.
    const long double sl = static_cast<long double>(s), Fl = static_cast<long double>(F);
    const long double log_qs = sl * std::log(q);
    if (F > 0 && !(log_qs > std::log(4 * Fl))) return std::numeric_limits<long double>::infinity();
    const auto [K, k] = sample_counts(D, s);
    const long double exponent = D > 2 ? static_cast<long double>(D - 2) / sl
                                       : static_cast<long double>(K) - 2.0L * static_cast<long double>(k - 1);
    const long double Dl = static_cast<long double>(D);
    const long double inv_qs = std::exp(-log_qs);
    const long double first = 2 * (Dl + sl + 1) * (Dl + sl + 1) / sl * inv_qs / (1 - 2 * Fl * inv_qs);
    long double second = 0.5L;
    if (F == 0)
        second = exponent > 0 ? 0 : 0.5L;
    else if (exponent > 0)
        second = 0.5L * std::exp(exponent * (std::log(4 * Fl) - log_qs));
    return first + second;
}

std::size_t minimal_sample_degree(std::size_t D, std::size_t F, long double q, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) raise(ErrorCode::EpsilonOutOfRange, "epsilon must lie in (0, 1)");
    for (std::size_t s = 1; s <= 4096; ++s)
        if (montecarlo_failure_bound(D, F, q, s) <= static_cast<long double>(eps)) return s;
    // For D > 2 the second term tends to q^(2-D)/2 as s grows.
    raise(ErrorCode::EpsilonOutOfRange, "no sample degree reaches the failure bound " + std::to_string(eps));
}

ReconParams select_params(const ProblemShape& shape, std::uint64_t p, long double q, std::optional<double> epsilon) {
    if (p <= shape.r)
        raise(ErrorCode::CharTooSmall,
              "p = " + std::to_string(p) + " must exceed the order r = " + std::to_string(shape.r));
    ReconParams out;
    const std::size_t d = shape.d, r = shape.r;
    if (shape.kind == InputKind::System) {
        out.D = d * r;
        out.F = 6 * d * r * (r - 1);
    } else {
        out.D = d + (r - 1) * shape.leading_degree;
        out.F = 3 * out.D * (2 * r - 1);
    }
    out.F = std::max(out.F, out.D);
    if (!epsilon) return out;

    if (!(*epsilon > 0.0 && *epsilon < 1.0)) raise(ErrorCode::EpsilonOutOfRange, "epsilon must lie in (0, 1)");
    out.mode = ReconMode::MonteCarlo;
    out.epsilon = *epsilon;
    out.s = minimal_sample_degree(out.D, out.F, q, *epsilon);
    const auto [K, k] = sample_counts(out.D, out.s);
    out.K = K;
    out.k_sel = k;
    return out;
}

InvFactorsBivar reconstruct_deterministic(const Problem& pb, const ReconParams& params) {
    const Field& k = base_field(pb);
    const Field l = extension_of_degree(k, params.F + 1);
    const Elem a = l.gen();
    // deg f <= d <= F < [l : k], so a is never a pole.
    if (l.is_zero(eval_denominator(pb, l, a))) raise(ErrorCode::PoleAtPoint, "generator of the big extension is a pole");
    const std::vector<Poly> local = scaled_invariant_factors_at(pb, l, a);
    const PowerBasis basis(l, l.pow(a, k.characteristic()));
    return lift_all(k, local, basis, params.D);
}

InvFactorsBivar reconstruct_montecarlo(const Problem& pb, const ReconParams& params, MonteCarloReport* report) {
    if (params.mode != ReconMode::MonteCarlo || params.s == 0)
        raise(ErrorCode::InvalidArgument, "Monte Carlo reconstruction needs Monte Carlo parameters");
    const Field& k = base_field(pb);
    const u64 p = k.characteristic();
    if (p <= order(pb)) raise(ErrorCode::CharTooSmall, "characteristic must exceed the order");
    const Field L = extension_of_degree(k, params.s);
    std::mt19937_64 rng(params.seed);

    MonteCarloReport rep;
    std::vector<Elem> points;
    const std::size_t max_attempts = params.K + 4 * params.K;
    std::size_t attempts = 0;
    while (points.size() < params.K) {
        if (++attempts > max_attempts) raise(ErrorCode::SelectionFailed, "too many sampled points are poles");
        Elem a = random_generator(L, k, rng);
        if (L.is_zero(eval_denominator(pb, L, a))) {
            ++rep.pole_resamples;
            continue;
        }
        points.push_back(std::move(a));
    }

    std::vector<std::vector<Poly>> local(points.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(params.threads, static_cast<unsigned>(points.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) local[i] = scaled_invariant_factors_at(pb, L, points[i]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < points.size(); i += workers)
                        local[i] = scaled_invariant_factors_at(pb, L, points[i]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    rep.samples = points.size();

    // Good points give the smallest degrees at every level at once.
    std::vector<std::vector<std::size_t>> degs;
    for (const auto& f : local) degs.push_back(cumulative_degrees(f));
    std::vector<std::size_t> best = degs.front();
    for (const auto& v : degs)
        for (std::size_t j = 0; j < v.size(); ++j) best[j] = std::min(best[j], v[j]);
    rep.min_degrees = best;

    std::vector<Poly> chosen_minpolys;
    for (std::size_t i = 0; i < points.size() && rep.selected.size() < params.k_sel; ++i) {
        if (degs[i] != best) continue;
        Poly mp = minimal_polynomial(L, points[i], k);
        if (std::find(chosen_minpolys.begin(), chosen_minpolys.end(), mp) != chosen_minpolys.end()) continue;
        chosen_minpolys.push_back(std::move(mp));
        rep.selected.push_back(i);
    }
    if (report) *report = rep;
    if (rep.selected.size() < params.k_sel)
        raise(ErrorCode::SelectionFailed, "only " + std::to_string(rep.selected.size()) + " admissible points, need " +
                                              std::to_string(params.k_sel));

    // Value at x = a corresponds to X = a^p; interpolate modulo the minimal
    // polynomials of the a^p.
    std::vector<PowerBasis> bases;
    std::vector<Poly> moduli;
    for (std::size_t i : rep.selected) {
        const Elem g = L.pow(points[i], p);
        bases.emplace_back(L, g);
        moduli.push_back(minimal_polynomial(L, g, k));
    }
    const std::size_t n = local.front().size();
    InvFactorsBivar out{k, {}};
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t len = local[rep.selected.front()][j].size();
        BivarPoly g;
        for (std::size_t t = 0; t < len; ++t) {
            std::vector<std::pair<Poly, Poly>> residues;
            for (std::size_t idx = 0; idx < rep.selected.size(); ++idx) {
                const Elem& v = local[rep.selected[idx]][j][t];
                residues.emplace_back(moduli[idx], bases[idx].lift(v, params.s - 1));
            }
            g.push_back(interpolate_crt(k, residues, params.D));
        }
        out.factors.push_back(std::move(g));
    }
    return out;
}

LemmaCheck check_divisibility_lemma(const Problem& pb, const InvFactorsBivar& global, const Field& l, const Elem& a) {
    const Field& k = base_field(pb);
    FPoly R(l, "T");
    const std::vector<Poly> local = scaled_invariant_factors_at(pb, l, a);
    const Elem ap = l.pow(a, k.characteristic());
    LemmaCheck out;
    Poly gprod = R.one(), lprod = R.one();
    for (std::size_t j = 0; j < local.size(); ++j) {
        gprod = R.mul(gprod, specialize_x(l, k, global.factors[j], ap));
        lprod = R.mul(lprod, local[j]);
        if (!R.divides(gprod, lprod)) out.divides = false;
        if (!R.equal(gprod, lprod)) out.equal = false;
    }
    return out;
}

bool verify_divisibility_lemma(const Problem& pb, const Field& l, const Elem& a) {
    return check_divisibility_lemma(pb, naive_invariant_factors(pb), l, a).divides;
}

}  // namespace pcurv
