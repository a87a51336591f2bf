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

// Exercises the shared library through its C header only.

#include <cstring>
#include <string>

#include "doctest.h"
#include "pcurv/pcurv.h"

TEST_CASE("operator run through the C interface") {
    pcurv_problem* pb = nullptr;
    REQUIRE(pcurv_problem_from_operator(3, 1, "Dx - x", &pb) == PCURV_OK);
    CHECK(pcurv_problem_order(pb) == 1);
    CHECK(pcurv_problem_degree(pb) == 1);
    pcurv_options o;
    pcurv_options_init(&o);
    o.check = 1;
    pcurv_result* res = nullptr;
    REQUIRE(pcurv_run(pb, &o, &res) == PCURV_OK);
    REQUIRE(pcurv_result_count(res) == 1);
    CHECK(std::string(pcurv_result_factor(res, 0)) == "T + X");
    CHECK(pcurv_result_factor(res, 1) == nullptr);
    CHECK(pcurv_result_check_match(res) == 1);
    char* json = pcurv_result_json(res);
    REQUIRE(json);
    char* again = nullptr;
    REQUIRE(pcurv_result_json_roundtrip(json, &again) == PCURV_OK);
    CHECK(std::strcmp(json, again) == 0);
    pcurv_string_free(json);
    pcurv_string_free(again);
    pcurv_result_free(res);
    pcurv_problem_free(pb);
}

TEST_CASE("status codes") {
    pcurv_problem* pb = nullptr;
    CHECK(pcurv_problem_from_operator(5, 1, "Dx +", &pb) == PCURV_PARSE_ERROR);
    CHECK(std::string(pcurv_last_error()).find("SyntaxError") == 0);
    CHECK(pcurv_problem_from_operator(9, 1, "Dx", &pb) == PCURV_PRECONDITION);
    CHECK(pcurv_problem_from_operator(5, 1, nullptr, &pb) == PCURV_INVALID_ARGUMENT);

    REQUIRE(pcurv_problem_from_operator(3, 1, "Dx^3 + x", &pb) == PCURV_OK);
    pcurv_result* res = nullptr;
    CHECK(pcurv_run(pb, nullptr, &res) == PCURV_PRECONDITION);
    pcurv_options o;
    pcurv_options_init(&o);
    o.algo = PCURV_ALGO_NAIVE;
    REQUIRE(pcurv_run(pb, &o, &res) == PCURV_OK);
    pcurv_result_free(res);
    pcurv_problem_free(pb);

    REQUIRE(pcurv_problem_from_operator(5, 1, "Dx", &pb) == PCURV_OK);
    o.algo = PCURV_ALGO_MC;
    o.epsilon = 1.5;
    CHECK(pcurv_run(pb, &o, &res) == PCURV_PRECONDITION);
    pcurv_problem_free(pb);
}

TEST_CASE("system documents") {
    const char* doc = R"({"p": 5, "f_A": "x", "A_tilde": [["1"]]})";
    pcurv_problem* pb = nullptr;
    REQUIRE(pcurv_problem_from_system_json(0, 0, doc, &pb) == PCURV_OK);
    pcurv_result* res = nullptr;
    REQUIRE(pcurv_run(pb, nullptr, &res) == PCURV_OK);
    CHECK(std::string(pcurv_result_factor(res, 0)) == "T");
    pcurv_result_free(res);
    pcurv_problem_free(pb);
    CHECK(pcurv_problem_from_system_json(7, 0, doc, &pb) == PCURV_INVALID_ARGUMENT);
    CHECK(pcurv_problem_from_system_json(0, 0, "[", &pb) == PCURV_PARSE_ERROR);
}

TEST_CASE("benchmark and feasibility") {
    pcurv_problem* pb = nullptr;
    REQUIRE(pcurv_problem_from_operator(101, 1, "Dx^2 + x*Dx + 1", &pb) == PCURV_OK);
    const uint64_t primes[] = {101, 103};
    char* csv = nullptr;
    REQUIRE(pcurv_bench_scaling(pb, primes, 2, 1, &csv) == PCURV_OK);
    CHECK(std::string(csv).find("103,") != std::string::npos);
    pcurv_string_free(csv);
    const uint64_t bad[] = {4};
    CHECK(pcurv_bench_scaling(pb, bad, 1, 1, &csv) == PCURV_PRECONDITION);
    pcurv_problem_free(pb);

    const size_t ranks[] = {23, 17, 11, 6, 3, 0};
    int feasible = -1;
    char* trace = nullptr;
    REQUIRE(pcurv_feasibility_check(ranks, 6, 23, 2, 0, &feasible, &trace) == PCURV_OK);
    CHECK(feasible == 0);
    CHECK(std::string(trace).find("(6,5,4,3,2,0)") != std::string::npos);
    pcurv_string_free(trace);
}
