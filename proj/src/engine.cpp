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

#include "engine.hpp"

#include <set>

#include <json.hpp>

namespace cdg {

void Propagator::run(const Graph& g, std::span<const int> profile) {
    const int n = g.vertex_count();
    const size_t k = profile.size();
    if (k == 0) throw std::invalid_argument("empty strategy profile");
    for (int v : profile) g.check_vertex(v);

    colored_.assign(k, {});
    frontier_.assign(k, {});
    claim_.assign(k, {});
    uncolored_ = VertexSet::first_n(n);
    removed_.clear();
    steps_ = 0;

    // Time 0: a vertex chosen by one player takes that color, a vertex chosen
    // by several is removed before any propagation.
    VertexSet once, twice;
    for (int v : profile) {
        VertexSet bit;
        bit.set(v);
        if (once.intersects(bit)) twice |= bit;
        once |= bit;
    }
    removed_ = twice;
    uncolored_.remove(once);
    for (size_t i = 0; i < k; ++i) {
        if (!twice.test(profile[i])) {
            colored_[i].set(profile[i]);
            frontier_[i].set(profile[i]);
        }
    }

    for (;;) {
        bool active = false;
        VertexSet claimed_once, claimed_multi;
        for (size_t i = 0; i < k; ++i) {
            VertexSet& c = claim_[i];
            c.clear();
            frontier_[i].for_each([&](int v) { c |= g.neighbors(v); });
            c &= uncolored_;
            claimed_multi |= claimed_once & c;
            claimed_once |= c;
            if (c.any()) active = true;
        }
        if (!active) break;
        ++steps_;
        for (size_t i = 0; i < k; ++i) {
            claim_[i].remove(claimed_multi);
            colored_[i] |= claim_[i];
            frontier_[i] = claim_[i];
        }
        removed_ |= claimed_multi;
        uncolored_.remove(claimed_once);
    }
}

std::vector<int> Propagator::states(int n) const {
    std::vector<int> s(n, kStateUncolored);
    removed_.for_each([&](int v) { s[v] = kStateRemoved; });
    for (size_t i = 0; i < colored_.size(); ++i)
        colored_[i].for_each([&](int v) { s[v] = static_cast<int>(i); });
    return s;
}

PropagationOutcome propagate(const Graph& g, const StrategyProfile& profile, bool want_trace) {
    PropagationOutcome out;
    if (!want_trace) {
        Propagator p;
        p.run(g, profile);
        out.final_states = p.states(g.vertex_count());
        out.payoffs = p.payoffs();
        out.steps = p.steps();
        return out;
    }

    // Traced run: the literal per-vertex rule, reading only the previous
    // round's states, with one snapshot per round.
    const int n = g.vertex_count();
    const size_t k = profile.size();
    if (k == 0) throw std::invalid_argument("empty strategy profile");
    for (int v : profile) g.check_vertex(v);

    std::vector<int> state(n, kStateUncolored);
    std::vector<int> seeds_per_vertex(n, 0);
    for (int v : profile) ++seeds_per_vertex[v];
    for (size_t i = 0; i < k; ++i)
        state[profile[i]] = seeds_per_vertex[profile[i]] > 1 ? kStateRemoved
                                                             : static_cast<int>(i);
    out.trace.push_back(state);
    for (;;) {
        std::vector<int> next = state;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            if (state[v] != kStateUncolored) continue;
            int color = kStateUncolored;
            bool conflict = false;
            g.neighbors(v).for_each([&](int u) {
                if (state[u] < 0) return;  // uncolored or removed neighbors pass nothing
                if (color == kStateUncolored)
                    color = state[u];
                else if (color != state[u])
                    conflict = true;
            });
            if (conflict)
                next[v] = kStateRemoved;
            else if (color != kStateUncolored)
                next[v] = color;
            if (next[v] != state[v]) changed = true;
        }
        if (!changed) break;
        state = std::move(next);
        out.trace.push_back(state);
        ++out.steps;
    }
    out.final_states = state;
    out.payoffs.assign(k, 0);
    for (int v = 0; v < n; ++v)
        if (state[v] >= 0) ++out.payoffs[state[v]];
    return out;
}

std::vector<int> unique_min_lower_bound(const Graph& g, const StrategyProfile& profile) {
    const size_t k = profile.size();
    if (k == 0) throw std::invalid_argument("empty strategy profile");
    std::set<int> distinct(profile.begin(), profile.end());
    if (distinct.size() != k)
        throw std::invalid_argument("unique_min_lower_bound requires distinct positions");

    std::vector<std::vector<int>> dist;
    dist.reserve(k);
    for (int v : profile) dist.push_back(distances_from(g, v));

    std::vector<int> counts(k, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int best = kUnreachable, owner = -1;
        bool tie = false;
        for (size_t i = 0; i < k; ++i) {
            int d = dist[i][v];
            if (d == kUnreachable) continue;
            if (best == kUnreachable || d < best) {
                best = d;
                owner = static_cast<int>(i);
                tie = false;
            } else if (d == best) {
                tie = true;
            }
        }
        if (owner >= 0 && !tie) ++counts[owner];
    }
    return counts;
}

std::string trace_to_json(const PropagationOutcome& outcome) {
    nlohmann::ordered_json j;
    j["steps"] = outcome.steps;
    j["payoffs"] = outcome.payoffs;
    j["rounds"] = nlohmann::json::array();
    for (size_t t = 0; t < outcome.trace.size(); ++t) {
        nlohmann::ordered_json round;
        round["t"] = t;
        auto states = nlohmann::json::array();
        for (int s : outcome.trace[t]) {
            if (s == kStateUncolored)
                states.push_back(nullptr);
            else if (s == kStateRemoved)
                states.push_back("removed");
            else
                states.push_back(s + 1);
        }
        round["states"] = states;
        j["rounds"].push_back(round);
    }
    return j.dump();
}

}  // namespace cdg
