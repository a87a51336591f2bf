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

#include "pcurv/pcurv.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "pcurv/document.hpp"
#include "pcurv/nilprofile.hpp"
#include "pcurv/text.hpp"

struct pcurv_problem {
    pcurv::InputSpec spec;
    std::size_t order = 0;
    std::size_t degree = 0;
};

struct pcurv_result {
    pcurv::ResultDocument doc;
};

namespace {

thread_local std::string last_error;

pcurv_status status_of(pcurv::ErrorCode c) {
    using pcurv::ErrorCode;
    switch (c) {
    case ErrorCode::SyntaxError:
    case ErrorCode::ZeroOperator:
    case ErrorCode::ZeroLeadingCoefficient:
        return PCURV_PARSE_ERROR;
    case ErrorCode::NotPrime:
    case ErrorCode::CharTooSmall:
    case ErrorCode::PoleAtPoint:
    case ErrorCode::LeadingCoeffVanishes:
    case ErrorCode::EpsilonOutOfRange:
        return PCURV_PRECONDITION;
    case ErrorCode::SelectionFailed:
    case ErrorCode::NoSolutionWithinBound:
        return PCURV_SELECTION_FAILED;
    case ErrorCode::InvalidArgument:
        return PCURV_INVALID_ARGUMENT;
    default:
        return PCURV_ERROR;
    }
}

template <class F>
pcurv_status guarded(F&& f) {
    try {
        last_error.clear();
        return f();
    } catch (const pcurv::Error& e) {
        last_error = std::string(pcurv::error_code_name(e.code())) + ": " + e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return PCURV_ERROR;
    }
}

pcurv_status invalid(const char* what) {
    last_error = std::string("InvalidArgument: ") + what;
    return PCURV_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pcurv_status finish_problem(pcurv::InputSpec spec, pcurv_problem** out) {
    const pcurv::Field k = pcurv::base_field_for(spec.p, spec.ext);
    const pcurv::Problem pb = pcurv::build_problem(spec, k);
    *out = new pcurv_problem{std::move(spec), pcurv::order(pb), pcurv::degree(pb)};
    return PCURV_OK;
}

}  // namespace

extern "C" {

const char* pcurv_version(void) { return "1.0.0"; }

const char* pcurv_last_error(void) { return last_error.c_str(); }

void pcurv_string_free(char* s) { std::free(s); }

void pcurv_options_init(pcurv_options* opts) {
    if (!opts) return;
    opts->algo = PCURV_ALGO_DET;
    opts->epsilon = 0.1;
    opts->seed = 0;
    opts->check = 0;
    opts->profile = 0;
    opts->threads = 1;
}

pcurv_status pcurv_problem_from_operator(uint64_t p, unsigned ext, const char* text, pcurv_problem** out) {
    if (!text || !out) return invalid("null argument");
    return guarded([&] {
        pcurv::InputSpec spec;
        spec.p = p;
        spec.ext = ext;
        spec.kind = pcurv::InputKind::Operator;
        spec.op = text;
        return finish_problem(std::move(spec), out);
    });
}

pcurv_status pcurv_problem_from_system_json(uint64_t p, unsigned ext, const char* json, pcurv_problem** out) {
    if (!json || !out) return invalid("null argument");
    return guarded([&] {
        pcurv::InputSpec spec = pcurv::input_from_system_json(json);
        if (p != 0) {
            if (spec.p != 0 && spec.p != p) return invalid("p differs from the system document");
            spec.p = p;
        }
        if (spec.p == 0) return invalid("no characteristic given");
        if (ext != 0) spec.ext = ext;
        return finish_problem(std::move(spec), out);
    });
}

void pcurv_problem_free(pcurv_problem* pb) { delete pb; }

size_t pcurv_problem_order(const pcurv_problem* pb) { return pb ? pb->order : 0; }

size_t pcurv_problem_degree(const pcurv_problem* pb) { return pb ? pb->degree : 0; }

pcurv_status pcurv_run(const pcurv_problem* pb, const pcurv_options* opts, pcurv_result** out) {
    if (!pb || !out) return invalid("null argument");
    return guarded([&] {
        pcurv_options o;
        pcurv_options_init(&o);
        if (opts) o = *opts;
        pcurv::RunFlags flags;
        switch (o.algo) {
        case PCURV_ALGO_DET: flags.algo = pcurv::Algorithm::Deterministic; break;
        case PCURV_ALGO_MC: flags.algo = pcurv::Algorithm::MonteCarlo; break;
        case PCURV_ALGO_NAIVE: flags.algo = pcurv::Algorithm::Naive; break;
        default: return invalid("unknown algorithm");
        }
        flags.epsilon = o.epsilon;
        flags.seed = o.seed;
        flags.check = o.check != 0;
        flags.profile = o.profile != 0;
        flags.threads = o.threads == 0 ? 1 : o.threads;
        *out = new pcurv_result{pcurv::run(pb->spec, flags)};
        if ((*out)->doc.match && !*(*out)->doc.match) {
            last_error = "CheckMismatch: fast and naive invariant factors differ";
            return PCURV_CHECK_MISMATCH;
        }
        return PCURV_OK;
    });
}

void pcurv_result_free(pcurv_result* res) { delete res; }

size_t pcurv_result_count(const pcurv_result* res) { return res ? res->doc.factors.size() : 0; }

const char* pcurv_result_factor(const pcurv_result* res, size_t i) {
    if (!res || i >= res->doc.factors.size()) return nullptr;
    return res->doc.factors[i].c_str();
}

int pcurv_result_check_match(const pcurv_result* res) {
    if (!res || !res->doc.match) return -1;
    return *res->doc.match ? 1 : 0;
}

size_t pcurv_result_profile(const pcurv_result* res, size_t* buf, size_t cap) {
    if (!res || !res->doc.profile) return 0;
    const auto& r = *res->doc.profile;
    for (std::size_t i = 0; i < r.size() && i < cap && buf; ++i) buf[i] = r[i];
    return r.size();
}

double pcurv_result_seconds(const pcurv_result* res) { return res ? res->doc.seconds : 0.0; }

char* pcurv_result_json(const pcurv_result* res) {
    if (!res) return nullptr;
    try {
        return copy_string(pcurv::to_json(res->doc));
    } catch (const std::exception& e) {
        last_error = e.what();
        return nullptr;
    }
}

pcurv_status pcurv_result_json_roundtrip(const char* json, char** out) {
    if (!json || !out) return invalid("null argument");
    return guarded([&] {
        *out = copy_string(pcurv::to_json(pcurv::document_from_json(json)));
        return PCURV_OK;
    });
}

pcurv_status pcurv_bench_scaling(const pcurv_problem* pb, const uint64_t* primes, size_t count, unsigned repeats,
                                 char** csv_out) {
    if (!pb || !csv_out || (count > 0 && !primes)) return invalid("null argument");
    return guarded([&] {
        std::vector<std::uint64_t> ps(primes, primes + count);
        *csv_out = copy_string(pcurv::bench_csv(pcurv::bench_scaling(pb->spec, ps, repeats)));
        return PCURV_OK;
    });
}

pcurv_status pcurv_feasibility_check(const size_t* ranks, size_t len, size_t total, size_t top, size_t n_max,
                                     int* feasible, char** trace_out) {
    if (!ranks || !feasible || len == 0) return invalid("null argument");
    return guarded([&] {
        pcurv::RankProfile prof{std::vector<std::size_t>(ranks, ranks + len)};
        pcurv::FactorizationHypothesis hyp{total, top, 2, n_max};
        const auto res = pcurv::feasibility_check(prof, hyp);
        *feasible = res.feasible ? 1 : 0;
        if (trace_out) {
            std::string t;
            for (const auto& line : res.render()) t += line + "\n";
            *trace_out = copy_string(t);
        }
        return PCURV_OK;
    });
}

}  // extern "C"
