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

#ifndef CDG_EXPERIMENTS_HPP
#define CDG_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "equilibrium.hpp"

namespace cdg {

/// One result cell of a reproduction suite.
struct SurveyRecord {
    std::string graph;                 // selector or graph6 bytes
    int k = 0;
    std::string verdict;               // exists | none | nash | not-nash | skipped | info
    std::vector<std::string> example;  // formatted labels, empty when none
    std::uint64_t examined = 0;
    bool ok = true;                    // the row matches its asserted expectation
    double wall_ms = 0;
};

struct SuiteOptions {
    int k_max = 8;
    int n_max = 14;
    int d_max = 6;
    int tree_k_lo = 3;
    int tree_k_hi = 6;
    int survey_n_max = 7;
    int players = 2;                        // small-graph survey
    std::string grid_sizes = "5x5,5x6,6x6";
    std::string graph6_path;                // optional survey corpus
    int rows = 5, cols = 5;                 // four-player grid experiment
    int threads = 0;
    std::uint64_t budget = kDefaultSearchBudget;
    bool force = false;
};

struct SuiteReport {
    std::string name;
    std::vector<SurveyRecord> rows;
    bool all_ok = true;
};

// Known suites: paths, cycles, grids, hypercubes, small-graphs, trees,
// grid4-conjecture. Throws std::invalid_argument for anything else.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

// One JSON object per row. Timings are opt-in so that default reports are
// byte-identical across runs.
std::string to_jsonl(const SuiteReport& report, bool timings = false);
std::string summary_table(const SuiteReport& report);

const char* version();

}  // namespace cdg

#endif
