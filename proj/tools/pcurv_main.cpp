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

// Command line front end. Exit codes: 0 success, 1 other failure, 2 parse
// error, 3 precondition violated, 4 Monte Carlo selection failed, 5 check
// mismatch.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcurv/pcurv.h"

namespace {

int exit_code(pcurv_status s) {
    switch (s) {
    case PCURV_OK: return 0;
    case PCURV_PARSE_ERROR: return 2;
    case PCURV_PRECONDITION: return 3;
    case PCURV_SELECTION_FAILED: return 4;
    case PCURV_CHECK_MISMATCH: return 5;
    default: return 1;
    }
}

int fail(pcurv_status s) {
    std::cerr << "pcurv: " << pcurv_last_error() << "\n";
    return exit_code(s);
}

struct Owned {
    char* s = nullptr;
    ~Owned() { pcurv_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant factors of the p-curvature of differential operators and systems over F_q(x)"};
    std::uint64_t p = 0;
    unsigned ext = 0;
    std::string op, system_file, algo = "det";
    double epsilon = 0.1;
    std::uint64_t seed = 0;
    bool check = false, profile = false, json = false;
    std::vector<std::uint64_t> bench;
    unsigned repeats = 5, threads = 1;
    std::vector<std::size_t> ranks;
    std::size_t total = 0, top = 2, n_max = 0;

    app.add_option("--p", p, "Characteristic (prime)");
    app.add_option("--ext", ext, "Degree of F_q over F_p (default 1, or the system file's value)");
    auto* op_opt = app.add_option("--op", op, "Operator, e.g. \"x*Dx^2 + Dx + 1\"; w is the generator of F_q");
    auto* sys_opt = app.add_option("--system", system_file, "System JSON file {p, ext, f_A, A_tilde}");
    op_opt->excludes(sys_opt);
    app.add_option("--algo", algo, "det, mc or naive")->check(CLI::IsMember({"det", "mc", "naive"}));
    app.add_option("--epsilon", epsilon, "Monte Carlo failure probability");
    app.add_option("--seed", seed, "Monte Carlo seed");
    app.add_flag("--check", check, "Also run the other path (naive or deterministic) and compare");
    app.add_flag("--profile", profile, "Emit the rank profile of the nilpotent part");
    app.add_flag("--json", json, "Print the result document as JSON");
    app.add_option("--bench", bench, "Primes for the scaling benchmark (CSV output)")->delimiter(',');
    app.add_option("--repeats", repeats, "Runs per prime in the benchmark");
    app.add_option("--threads", threads, "Worker threads for Monte Carlo evaluations");
    auto* ranks_opt = app.add_option("--ranks", ranks, "Rank profile for the feasibility check")->delimiter(',');
    app.add_option("--total", total, "Matrix size for the feasibility check (default: first rank)");
    app.add_option("--top", top, "Size of the top block for the feasibility check");
    app.add_option("--n-max", n_max, "Largest symmetric power to try (0: automatic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (ranks_opt->count() > 0) {
        int feasible = 0;
        Owned trace;
        const pcurv_status s = pcurv_feasibility_check(ranks.data(), ranks.size(), total ? total : ranks.front(),
                                                       top, n_max, &feasible, &trace.s);
        if (s != PCURV_OK) return fail(s);
        std::cout << trace.s;
        return 0;
    }

    // The benchmark re-reads the input over each of its primes.
    if (p == 0 && !bench.empty()) p = bench.front();

    pcurv_problem* pb = nullptr;
    pcurv_status s;
    if (!system_file.empty()) {
        std::ifstream in(system_file);
        if (!in) {
            std::cerr << "pcurv: cannot read " << system_file << "\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        s = pcurv_problem_from_system_json(p, ext, buf.str().c_str(), &pb);
    } else if (!op.empty()) {
        if (p == 0) {
            std::cerr << "pcurv: --p (or --bench) is required with --op\n";
            return 2;
        }
        s = pcurv_problem_from_operator(p, ext == 0 ? 1 : ext, op.c_str(), &pb);
    } else {
        std::cerr << "pcurv: one of --op, --system or --ranks is required\n" << app.help();
        return 2;
    }
    if (s != PCURV_OK) return fail(s);
    struct ProblemGuard {
        pcurv_problem* p;
        ~ProblemGuard() { pcurv_problem_free(p); }
    } guard{pb};

    if (!bench.empty()) {
        Owned csv;
        s = pcurv_bench_scaling(pb, bench.data(), bench.size(), repeats, &csv.s);
        if (s != PCURV_OK) return fail(s);
        std::cout << csv.s;
        return 0;
    }

    pcurv_options opts;
    pcurv_options_init(&opts);
    opts.algo = algo == "mc" ? PCURV_ALGO_MC : (algo == "naive" ? PCURV_ALGO_NAIVE : PCURV_ALGO_DET);
    opts.epsilon = epsilon;
    opts.seed = seed;
    opts.check = check;
    opts.profile = profile;
    opts.threads = threads;
    pcurv_result* res = nullptr;
    s = pcurv_run(pb, &opts, &res);
    if (s != PCURV_OK && s != PCURV_CHECK_MISMATCH) return fail(s);

    if (json) {
        Owned doc{pcurv_result_json(res)};
        std::cout << doc.s << "\n";
    } else {
        for (std::size_t i = 0; i < pcurv_result_count(res); ++i)
            std::cout << "I_" << i + 1 << " = " << pcurv_result_factor(res, i) << "\n";
        if (const int m = pcurv_result_check_match(res); m >= 0) std::cout << "match=" << (m ? "true" : "false") << "\n";
        if (const std::size_t n = pcurv_result_profile(res, nullptr, 0); n > 0) {
            std::vector<std::size_t> r(n);
            pcurv_result_profile(res, r.data(), n);
            std::cout << "profile=(";
            for (std::size_t i = 0; i < n; ++i) std::cout << (i ? "," : "") << r[i];
            std::cout << ")\n";
        }
    }
    pcurv_result_free(res);
    return exit_code(s);
}
