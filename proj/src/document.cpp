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

#include "pcurv/document.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "pcurv/error.hpp"
#include "pcurv/local_eval.hpp"
#include "pcurv/nilprofile.hpp"
#include "pcurv/text.hpp"

namespace pcurv {

using nlohmann::json;

namespace {

long double field_size(std::uint64_t p, std::size_t ext) {
    return std::pow(static_cast<long double>(p), static_cast<long double>(ext));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json input_json(const InputSpec& s) {
    json j{{"p", s.p}, {"ext", s.ext}};
    if (s.kind == InputKind::Operator) {
        j["kind"] = "operator";
        j["operator"] = s.op;
    } else {
        j["kind"] = "system";
        j["f_A"] = s.f_A;
        j["A_tilde"] = s.A_tilde;
    }
    return j;
}

InputSpec input_from(const json& j) {
    InputSpec s;
    s.p = j.value("p", std::uint64_t{0});
    s.ext = j.value("ext", std::size_t{1});
    const std::string kind = j.value("kind", std::string(j.contains("A_tilde") ? "system" : "operator"));
    if (kind == "operator") {
        s.kind = InputKind::Operator;
        s.op = j.at("operator").get<std::string>();
    } else if (kind == "system") {
        s.kind = InputKind::System;
        s.f_A = j.at("f_A").get<std::string>();
        s.A_tilde = j.at("A_tilde").get<std::vector<std::vector<std::string>>>();
    } else {
        raise(ErrorCode::SyntaxError, "unknown input kind '" + kind + "'");
    }
    return s;
}

json params_json(const ReconParams& P) {
    json j{{"D", P.D}, {"F", P.F}, {"mode", P.mode == ReconMode::MonteCarlo ? "montecarlo" : "deterministic"}};
    if (P.mode == ReconMode::MonteCarlo) {
        j["epsilon"] = P.epsilon;
        j["s"] = P.s;
        j["K"] = P.K;
        j["k_sel"] = P.k_sel;
        j["seed"] = P.seed;
    }
    return j;
}

ReconParams params_from(const json& j) {
    ReconParams P;
    P.D = j.at("D").get<std::size_t>();
    P.F = j.at("F").get<std::size_t>();
    if (j.value("mode", std::string("deterministic")) == "montecarlo") {
        P.mode = ReconMode::MonteCarlo;
        P.epsilon = j.at("epsilon").get<double>();
        P.s = j.at("s").get<std::size_t>();
        P.K = j.at("K").get<std::size_t>();
        P.k_sel = j.at("k_sel").get<std::size_t>();
        P.seed = j.at("seed").get<std::uint64_t>();
    }
    return P;
}

std::vector<std::string> normalize_factors(const Field& k, const std::vector<std::string>& in) {
    std::vector<std::string> out;
    for (const auto& s : in) out.push_back(render_bivar(k, parse_bivar(s, k)));
    return out;
}

}  // namespace

InputSpec input_from_system_json(const std::string& text) {
    try {
        json j = json::parse(text);
        j["kind"] = "system";
        return input_from(j);
    } catch (const json::exception& e) {
        raise(ErrorCode::SyntaxError, std::string("system JSON: ") + e.what());
    }
}

Problem build_problem(const InputSpec& spec, const Field& k) {
    if (spec.kind == InputKind::Operator) return parse_operator(spec.op, k);
    const std::size_t r = spec.A_tilde.size();
    if (r == 0) raise(ErrorCode::SyntaxError, "A_tilde is empty");
    MatrixOver<FPoly> A(r, r, Poly{});
    for (std::size_t i = 0; i < r; ++i) {
        if (spec.A_tilde[i].size() != r) raise(ErrorCode::SyntaxError, "A_tilde must be square");
        for (std::size_t j = 0; j < r; ++j) A(i, j) = parse_poly(spec.A_tilde[i][j], k);
    }
    Poly f = parse_poly(spec.f_A, k);
    if (f.empty()) raise(ErrorCode::ZeroLeadingCoefficient, "f_A is zero");
    return make_system(k, std::move(f), std::move(A));
}

const char* algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::Deterministic: return "det";
    case Algorithm::MonteCarlo: return "mc";
    case Algorithm::Naive: return "naive";
    }
    return "det";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "det") return Algorithm::Deterministic;
    if (name == "mc") return Algorithm::MonteCarlo;
    if (name == "naive") return Algorithm::Naive;
    raise(ErrorCode::InvalidArgument, "unknown algorithm '" + name + "'");
}

ResultDocument run(const InputSpec& spec, const RunFlags& flags) {
    const Field k = base_field_for(spec.p, spec.ext);
    const Problem pb = build_problem(spec, k);
    const long double q = field_size(spec.p, spec.ext);
    const ProblemShape shape = shape_of(pb);

    ResultDocument doc;
    doc.input = spec;
    doc.order = order(pb);
    doc.degree = degree(pb);
    doc.algo = flags.algo;
    if (flags.algo != Algorithm::Naive || spec.p > doc.order) {
        std::optional<double> eps;
        if (flags.algo == Algorithm::MonteCarlo) eps = flags.epsilon;
        ReconParams P = select_params(shape, spec.p, q, eps);
        P.seed = flags.seed;
        P.threads = flags.threads;
        doc.params = P;
    }

    const auto t0 = std::chrono::steady_clock::now();
    std::optional<InvFactorsBivar> out;
    switch (flags.algo) {
    case Algorithm::Deterministic:
        out = reconstruct_deterministic(pb, *doc.params);
        break;
    case Algorithm::MonteCarlo: {
        MonteCarloReport rep;
        out = reconstruct_montecarlo(pb, *doc.params, &rep);
        doc.montecarlo = rep;
        break;
    }
    case Algorithm::Naive:
        out = naive_invariant_factors(pb);
        break;
    }
    doc.seconds = seconds_since(t0);
    doc.factors = out->render();

    if (flags.check) {
        const InvFactorsBivar ref = flags.algo == Algorithm::Naive
                                        ? reconstruct_deterministic(pb, select_params(shape, spec.p, q))
                                        : naive_invariant_factors(pb);
        doc.match = ref == *out;
        doc.reference_factors = ref.render();
    }
    if (flags.profile) doc.profile = profile_from_invariant_factors(*out).ranks;
    return doc;
}

std::string to_json(const ResultDocument& doc) {
    json j;
    j["input"] = input_json(doc.input);
    j["order"] = doc.order;
    j["degree"] = doc.degree;
    j["algorithm"] = algorithm_name(doc.algo);
    if (doc.params) j["parameters"] = params_json(*doc.params);
    j["invariant_factors"] = doc.factors;
    j["variables"] = {{"X", "x^" + std::to_string(doc.input.p)}, {"T", "T"}};
    j["timings"] = {{"seconds", doc.seconds}};
    if (doc.match) j["check"] = {{"match", *doc.match}, {"reference", *doc.reference_factors}};
    if (doc.profile) j["profile"] = *doc.profile;
    if (doc.montecarlo) {
        const auto& m = *doc.montecarlo;
        j["montecarlo"] = {{"samples", m.samples},
                           {"pole_resamples", m.pole_resamples},
                           {"selected", m.selected},
                           {"min_degrees", m.min_degrees}};
    }
    return j.dump(2);
}

ResultDocument document_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        ResultDocument doc;
        doc.input = input_from(j.at("input"));
        const Field k = base_field_for(doc.input.p, doc.input.ext);
        doc.order = j.at("order").get<std::size_t>();
        doc.degree = j.at("degree").get<std::size_t>();
        doc.algo = algorithm_from_name(j.at("algorithm").get<std::string>());
        if (j.contains("parameters")) doc.params = params_from(j["parameters"]);
        doc.factors = normalize_factors(k, j.at("invariant_factors").get<std::vector<std::string>>());
        doc.seconds = j.at("timings").at("seconds").get<double>();
        if (j.contains("check")) {
            doc.match = j["check"].at("match").get<bool>();
            doc.reference_factors = normalize_factors(k, j["check"].at("reference").get<std::vector<std::string>>());
        }
        if (j.contains("profile")) doc.profile = j["profile"].get<std::vector<std::size_t>>();
        if (j.contains("montecarlo")) {
            const auto& m = j["montecarlo"];
            MonteCarloReport r;
            r.samples = m.at("samples").get<std::size_t>();
            r.pole_resamples = m.at("pole_resamples").get<std::size_t>();
            r.selected = m.at("selected").get<std::vector<std::size_t>>();
            r.min_degrees = m.at("min_degrees").get<std::vector<std::size_t>>();
            doc.montecarlo = r;
        }
        return doc;
    } catch (const json::exception& e) {
        raise(ErrorCode::SyntaxError, std::string("result JSON: ") + e.what());
    }
}

std::vector<BenchRow> bench_scaling(const InputSpec& spec, const std::vector<std::uint64_t>& primes,
                                    std::size_t repeats) {
    std::vector<BenchRow> rows;
    for (std::uint64_t p : primes) {
        const Field k = base_field_for(p, spec.ext);
        const Problem pb = build_problem(spec, k);
        if (p <= order(pb)) raise(ErrorCode::CharTooSmall, "p = " + std::to_string(p) + " must exceed the order");
        const Poly f = denominator(pb);
        FPoly R(k);
        std::optional<Elem> a;
        for (std::int64_t c = 1; c < static_cast<std::int64_t>(std::min<std::uint64_t>(p, 1000)) && !a; ++c)
            if (!k.is_zero(R.eval(f, k.from_int(c)))) a = k.from_int(c);
        if (!a) raise(ErrorCode::PoleAtPoint, "no integer evaluation point below 1000 avoids the poles");

        std::vector<double> times;
        for (std::size_t i = 0; i < std::max<std::size_t>(1, repeats); ++i) {
            const auto t0 = std::chrono::steady_clock::now();
            invariant_factors_at(pb, k, *a);
            times.push_back(seconds_since(t0));
        }
        std::sort(times.begin(), times.end());
        rows.push_back({p, times[times.size() / 2], times.size()});
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os.precision(9);
    os << "p,median_seconds,runs\n";
    for (const auto& r : rows) os << r.p << ',' << r.median_seconds << ',' << r.runs << '\n';
    return os.str();
}

}  // namespace pcurv
