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

#ifndef CDG_CONSTRUCTIONS_HPP
#define CDG_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "engine.hpp"
#include "graph.hpp"

namespace cdg {

// Closed-form equilibrium profiles. Positions are 1-based path/cycle indices,
// matching the figures; subtract one for engine vertex ids (to_profile).

/// Paired-players placement on P_n. Throws no_profile_error for k = 3 and
/// n >= 6, where no equilibrium exists.
std::vector<int> path_profile(int n, int k);

/// Equilibrium on C_n for any k >= 1 (three players get the dedicated split).
std::vector<int> cycle_profile(int n, int k);

StrategyProfile to_profile(const std::vector<int>& one_based);

/// Four-player hypercube profile (x, ~x, y, ~y); x and y must be adjacent.
std::array<unsigned, 4> hypercube_profile(int d, unsigned x, unsigned y);

/// Per-player payoff of the hypercube profile: 2^(d-2) for even d, reduced by
/// half the central binomial coefficient for odd d. Exact integers.
std::uint64_t hypercube_equilibrium_payoff(int d);

// |{v : delta(v,x) < min(delta(v,y), delta(v,~y))}| by full enumeration,
// and its closed-form bound (d >= 2).
std::uint64_t v_region_count(int d, unsigned x, unsigned y);
std::uint64_t v_region_bound(int d);

std::uint64_t binomial(int n, int k);

// --- grid improving moves ----------------------------------------------------

/// A prescribed strictly improving deviation for one player, with the case
/// label that produced it.
struct GridMove {
    int player = 0;  // index into the input profile
    GridCoord to;
    std::string tag;
};

/// For any three distinct positions on an m x n grid (m, n >= 5), returns a
/// move that strictly increases the moving player's payoff. Dispatches on the
/// relative-position case tree after normalizing by reflections, transpose
/// and player relabeling. Throws std::invalid_argument on duplicates.
GridMove grid_improving_move(int rows, int cols, const std::array<GridCoord, 3>& positions);

}  // namespace cdg

#endif
