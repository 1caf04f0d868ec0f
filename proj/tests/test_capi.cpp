/*
 * Copyright 2026 The cdiffusion authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Exercises the extern-C surface the way an external client would: opaque
// handles, error codes, caller-owned strings.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "cdiffusion.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    cdg_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("graph handles and accessors") {
    cdg_graph* g = nullptr;
    REQUIRE(cdg_graph_path(5, &g) == CDG_OK);
    CHECK(cdg_graph_vertex_count(g) == 5);
    CHECK(cdg_graph_edge_count(g) == 4);
    CHECK(cdg_graph_has_edge(g, 0, 1) == 1);
    CHECK(cdg_graph_has_edge(g, 0, 2) == 0);
    CHECK(cdg_graph_has_edge(g, 0, 9) < 0);
    CHECK(cdg_graph_degree(g, 1) == 2);
    int32_t dist = 0;
    CHECK(cdg_graph_distance(g, 0, 4, &dist) == CDG_OK);
    CHECK(dist == 4);
    cdg_graph_free(g);

    CHECK(cdg_graph_path(0, &g) != CDG_OK);
    CHECK(std::strlen(cdg_last_error()) > 0);
    CHECK(cdg_graph_cycle(2, &g) != CDG_OK);
}

TEST_CASE("spec parsing and vertex labels through the C surface") {
    cdg_graph* g = nullptr;
    REQUIRE(cdg_graph_from_spec("grid:5x5", &g) == CDG_OK);
    CHECK(cdg_graph_vertex_count(g) == 25);
    int32_t id = -1;
    CHECK(cdg_parse_vertex("grid:5x5", g, "2.3", &id) == CDG_OK);
    CHECK(id == 7);
    char* text = nullptr;
    CHECK(cdg_format_vertex("grid:5x5", 7, &text) == CDG_OK);
    CHECK(take(text) == "2.3");
    cdg_graph_free(g);

    CHECK(cdg_graph_from_spec("blob:9", &g) == CDG_ERR_PARSE);
}

TEST_CASE("propagation outcome") {
    cdg_graph* g = nullptr;
    REQUIRE(cdg_graph_from_spec("path:5", &g) == CDG_OK);
    int32_t profile[3] = {1, 2, 3};
    cdg_outcome* out = nullptr;
    REQUIRE(cdg_propagate(g, profile, 3, 1, &out) == CDG_OK);
    CHECK(cdg_outcome_payoff(out, 0) == 2);
    CHECK(cdg_outcome_payoff(out, 1) == 1);
    CHECK(cdg_outcome_payoff(out, 2) == 2);
    CHECK(cdg_outcome_steps(out) == 1);
    CHECK(cdg_outcome_state(out, 0) == 0);
    CHECK(cdg_outcome_state(out, 4) == 2);
    char* trace = nullptr;
    CHECK(cdg_outcome_trace_json(out, &trace) == CDG_OK);
    CHECK(take(trace).find("\"rounds\"") != std::string::npos);
    cdg_outcome_free(out);

    char* dot = nullptr;
    CHECK(cdg_graph_to_dot(g, nullptr, &dot) == CDG_OK);
    CHECK(take(dot).find("1 -- 2;") != std::string::npos);

    int32_t bad[1] = {7};
    CHECK(cdg_propagate(g, bad, 1, 0, &out) == CDG_ERR_INVALID);
    cdg_graph_free(g);
}

TEST_CASE("verify and best response") {
    cdg_graph* g = nullptr;
    REQUIRE(cdg_graph_path(15, &g) == CDG_OK);
    int32_t profile[6] = {2, 3, 8, 9, 12, 13};
    cdg_verify_report report{};
    int64_t payoffs[6] = {};
    REQUIRE(cdg_verify(g, profile, 6, &report, payoffs) == CDG_OK);
    CHECK(report.is_nash == 1);
    CHECK(payoffs[0] == 3);

    int32_t bad[3] = {0, 1, 2};
    REQUIRE(cdg_verify(g, bad, 3, &report, nullptr) == CDG_OK);
    CHECK(report.is_nash == 0);
    CHECK(report.witness_new_payoff > report.witness_old_payoff);

    int32_t vertex = -1;
    int64_t payoff = -1;
    REQUIRE(cdg_best_response(g, bad, 3, 2, &vertex, &payoff) == CDG_OK);
    CHECK(payoff > 0);
    cdg_graph_free(g);
}

TEST_CASE("search through the C surface") {
    cdg_graph* g = nullptr;
    REQUIRE(cdg_graph_from_spec("grid:5x5", &g) == CDG_OK);
    cdg_search_options opts{};
    int exists = -1;
    int32_t example[3] = {};
    uint64_t examined = 0;
    REQUIRE(cdg_find_nash(g, 3, &opts, &exists, example, &examined) == CDG_OK);
    CHECK(exists == 0);
    CHECK(examined == 2925);
    cdg_graph_free(g);

    REQUIRE(cdg_graph_fig7(&g) == CDG_OK);
    uint64_t count = 1, total = 0;
    REQUIRE(cdg_count_nash(g, 2, &opts, &count, &total) == CDG_OK);
    CHECK(count == 0);
    CHECK(total == 36);
    cdg_graph_free(g);

    REQUIRE(cdg_graph_path(40, &g) == CDG_OK);
    opts.budget = 10;
    CHECK(cdg_find_nash(g, 3, &opts, &exists, nullptr, nullptr) == CDG_ERR_BUDGET);
    uint64_t ms = 0;
    CHECK(cdg_multiset_count(6, 3, &ms) == CDG_OK);
    CHECK(ms == 56);
    cdg_graph_free(g);
}

TEST_CASE("constructions through the C surface") {
    int32_t positions[6] = {};
    REQUIRE(cdg_path_profile(15, 6, positions) == CDG_OK);
    CHECK(positions[0] == 3);
    CHECK(positions[5] == 14);
    CHECK(cdg_path_profile(10, 3, positions) == CDG_ERR_NO_PROFILE);

    REQUIRE(cdg_cycle_profile(9, 3, positions) == CDG_OK);
    CHECK(positions[0] == 1);
    CHECK(positions[1] == 9);
    CHECK(positions[2] == 4);

    uint32_t quad[4] = {};
    REQUIRE(cdg_hypercube_profile(3, 0, 1, quad) == CDG_OK);
    CHECK(quad[1] == 7);
    CHECK(cdg_hypercube_profile(3, 0, 3, quad) == CDG_ERR_PARSE);

    uint64_t value = 0;
    REQUIRE(cdg_hypercube_equilibrium_payoff(5, &value) == CDG_OK);
    CHECK(value == 5);
    REQUIRE(cdg_v_region_count(3, 0, 1, &value) == CDG_OK);
    CHECK(value <= 1);
    REQUIRE(cdg_v_region_bound(4, &value) == CDG_OK);
    CHECK(value == 4);

    int32_t xs[3] = {2, 2, 2}, ys[3] = {1, 2, 3};
    cdg_grid_move move{};
    REQUIRE(cdg_grid_improving_move(5, 5, xs, ys, &move) == CDG_OK);
    CHECK(move.player == 1);
    CHECK(move.to_x == 2);
    CHECK(move.to_y == 4);
    CHECK(std::string(move.tag) == "Close-Case-1");
}

TEST_CASE("canonical forms and enumeration through the C surface") {
    cdg_graph *a = nullptr, *b = nullptr;
    REQUIRE(cdg_graph_from_spec("grid:2x2", &a) == CDG_OK);
    REQUIRE(cdg_graph_cycle(4, &b) == CDG_OK);
    int iso = 0;
    REQUIRE(cdg_graph_isomorphic(a, b, &iso) == CDG_OK);
    CHECK(iso == 1);
    uint64_t fa = 0, fb = 0;
    REQUIRE(cdg_graph_canonical_form(a, &fa) == CDG_OK);
    REQUIRE(cdg_graph_canonical_form(b, &fb) == CDG_OK);
    CHECK(fa == fb);
    cdg_graph_free(a);
    cdg_graph_free(b);

    char* lines = nullptr;
    uint64_t count = 0;
    REQUIRE(cdg_enumerate_graphs(4, 0, &lines, &count) == CDG_OK);
    CHECK(count == 11);
    std::string text = take(lines);
    CHECK(std::count(text.begin(), text.end(), '\n') == 11);
    // first line parses back to a graph on four vertices
    cdg_graph* parsed = nullptr;
    REQUIRE(cdg_graph_from_graph6(text.substr(0, text.find('\n')).c_str(), &parsed) == CDG_OK);
    CHECK(cdg_graph_vertex_count(parsed) == 4);
    cdg_graph_free(parsed);
    CHECK(cdg_enumerate_graphs(8, 0, &lines, &count) == CDG_ERR_CAP);

    cdg_graph* big = nullptr;
    REQUIRE(cdg_graph_path(12, &big) == CDG_OK);
    uint64_t form = 0;
    CHECK(cdg_graph_canonical_form(big, &form) == CDG_ERR_CAP);
    cdg_graph_free(big);
}

TEST_CASE("graph6 export and import through the C surface") {
    cdg_graph* g = nullptr;
    REQUIRE(cdg_graph_cycle(3, &g) == CDG_OK);
    char* text = nullptr;
    REQUIRE(cdg_graph_to_graph6(g, &text) == CDG_OK);
    CHECK(take(text) == "Bw");
    cdg_graph_free(g);
    CHECK(cdg_graph_from_graph6("~??", &g) == CDG_ERR_PARSE);
}

TEST_CASE("suite runner through the C surface") {
    cdg_suite_options opts;
    cdg_suite_options_init(&opts);
    opts.k_max = 2;
    opts.n_max = 5;
    char* jsonl = nullptr;
    char* summary = nullptr;
    int all_ok = 0;
    REQUIRE(cdg_run_suite("paths", &opts, &jsonl, &summary, &all_ok) == CDG_OK);
    CHECK(all_ok == 1);
    CHECK(take(jsonl).find("\"suite\":\"paths\"") != std::string::npos);
    CHECK(take(summary).find("all expectations hold") != std::string::npos);
    CHECK(cdg_run_suite("bogus", &opts, nullptr, nullptr, &all_ok) == CDG_ERR_PARSE);
    CHECK(cdg_version() == std::string("0.1.0"));
}
