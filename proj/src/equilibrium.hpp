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

#ifndef CDG_EQUILIBRIUM_HPP
#define CDG_EQUILIBRIUM_HPP

#include <cstdint>
#include <optional>

#include "engine.hpp"

namespace cdg {

struct DeviationWitness {
    int player = 0;
    int vertex = 0;
    int old_payoff = 0;
    int new_payoff = 0;
};

struct EquilibriumReport {
    bool is_nash = false;
    std::optional<DeviationWitness> witness;  // present iff not an equilibrium
    std::vector<int> payoffs;
};

/// Checks every unilateral deviation, scanning players then vertices in
/// ascending order, and reports the first improving one. Deviating onto an
/// occupied vertex scores zero, so those can never be witnesses.
EquilibriumReport verify(const Graph& g, const StrategyProfile& profile);

/// Best payoff the player can reach with the others fixed; ties broken by
/// smallest vertex id. Returns (vertex, payoff).
std::pair<int, int> best_response(const Graph& g, const StrategyProfile& profile, int player);

inline constexpr std::uint64_t kDefaultSearchBudget = 500'000;

struct SearchOptions {
    int threads = 0;  // 0 = hardware concurrency
    std::uint64_t budget = kDefaultSearchBudget;
    bool force = false;
};

struct SearchResult {
    bool exists = false;
    StrategyProfile example;    // nondecreasing vertex order when exists
    std::uint64_t examined = 0;  // all multisets when none; scan prefix when found
};

struct CountResult {
    std::uint64_t nash_profiles = 0;  // equilibrium multisets
    std::uint64_t examined = 0;
};

// Number of k-multisets over n vertices, C(n+k-1, k); throws cap_error if it
// does not fit 63 bits.
std::uint64_t multiset_count(int n, int k);

/// Exhaustive existence search over strategy multisets (sound and complete:
/// payoffs are equivariant under permuting players with their positions).
/// The reported example is the lexicographically first equilibrium multiset
/// regardless of thread count. Throws budget_error above the ceiling unless
/// forced.
SearchResult find_nash(const Graph& g, int k, const SearchOptions& opts = {});

CountResult count_nash(const Graph& g, int k, const SearchOptions& opts = {});

// Multiset rank walk helpers, exposed for tests and sharded callers.
StrategyProfile unrank_multiset(int n, int k, std::uint64_t index);
bool next_multiset(StrategyProfile& m, int n);

}  // namespace cdg

#endif
