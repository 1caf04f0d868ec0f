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

#ifndef CDG_ENGINE_HPP
#define CDG_ENGINE_HPP

#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace cdg {

/// Player i seeds vertex profile[i]. Duplicates are allowed; colliding seeds
/// are removed at time 0 and the colliding players score zero.
using StrategyProfile = std::vector<int>;

// Vertex states: a nonnegative value is the owning player's index.
inline constexpr int kStateUncolored = -1;
inline constexpr int kStateRemoved = -2;

struct PropagationOutcome {
    std::vector<int> final_states;           // one entry per vertex
    std::vector<int> payoffs;                // one entry per player
    int steps = 0;                           // rounds that changed some vertex
    std::vector<std::vector<int>> trace;     // snapshots t = 0..steps (opt-in)
};

/// Reusable buffers so the search hot path never allocates. One round colors
/// every uncolored vertex whose newly colored neighbors all share one color
/// and removes every uncolored vertex claimed by two or more colors, reading
/// the previous round's states only.
class Propagator {
  public:
    // Runs the process to its fixpoint. Throws std::out_of_range on bad ids.
    void run(const Graph& g, std::span<const int> profile);

    int payoff(int player) const { return colored_[player].count(); }
    int steps() const { return steps_; }
    const VertexSet& colored(int player) const { return colored_[player]; }
    const VertexSet& removed() const { return removed_; }

    std::vector<int> payoffs() const {
        std::vector<int> p(colored_.size());
        for (size_t i = 0; i < colored_.size(); ++i) p[i] = colored_[i].count();
        return p;
    }

    std::vector<int> states(int n) const;

  private:
    std::vector<VertexSet> colored_, frontier_, claim_;
    VertexSet uncolored_, removed_;
    int steps_ = 0;
};

PropagationOutcome propagate(const Graph& g, const StrategyProfile& profile,
                             bool want_trace = false);

/// Observation-style lower bound: for each player, the number of vertices to
/// which she is strictly closest. Requires pairwise distinct positions.
std::vector<int> unique_min_lower_bound(const Graph& g, const StrategyProfile& profile);

std::string trace_to_json(const PropagationOutcome& outcome);

}  // namespace cdg

#endif
