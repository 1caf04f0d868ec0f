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

#include "equilibrium.hpp"

#include <atomic>
#include <thread>

namespace cdg {

namespace {

bool occupied_by_other(const StrategyProfile& profile, int player, int v) {
    for (size_t j = 0; j < profile.size(); ++j)
        if (static_cast<int>(j) != player && profile[j] == v) return true;
    return false;
}

// Early-exit equilibrium test on reusable buffers; the search hot path.
bool is_nash_quick(const Graph& g, StrategyProfile& profile, Propagator& prop) {
    const int n = g.vertex_count();
    const int k = static_cast<int>(profile.size());
    prop.run(g, profile);
    std::vector<int> base = prop.payoffs();
    for (int i = 0; i < k; ++i) {
        const int home = profile[i];
        for (int v = 0; v < n; ++v) {
            if (v == home || occupied_by_other(profile, i, v)) continue;
            profile[i] = v;
            prop.run(g, profile);
            int gained = prop.payoff(i);
            profile[i] = home;
            if (gained > base[i]) return false;
        }
    }
    return true;
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// cnt[j][a] = multisets of size j over a symbols, clamped to 2^63-1
struct MultisetTable {
    int n, k;
    std::vector<std::vector<std::uint64_t>> cnt;
    static constexpr std::uint64_t kClamp = (1ULL << 63) - 1;

    MultisetTable(int n_, int k_) : n(n_), k(k_), cnt(k + 1, std::vector<std::uint64_t>(n + 1)) {
        for (int a = 0; a <= n; ++a) cnt[0][a] = 1;
        for (int j = 1; j <= k; ++j) {
            cnt[j][0] = 0;
            for (int a = 1; a <= n; ++a) {
                unsigned __int128 s =
                    static_cast<unsigned __int128>(cnt[j - 1][a]) + cnt[j][a - 1];
                cnt[j][a] = s > kClamp ? kClamp : static_cast<std::uint64_t>(s);
            }
        }
    }
    std::uint64_t count(int a, int j) const { return cnt[j][a]; }
};

}  // namespace

EquilibriumReport verify(const Graph& g, const StrategyProfile& profile) {
    const int n = g.vertex_count();
    const int k = static_cast<int>(profile.size());
    if (k == 0) throw std::invalid_argument("empty strategy profile");

    Propagator prop;
    prop.run(g, profile);
    EquilibriumReport report;
    report.payoffs = prop.payoffs();

    StrategyProfile scratch = profile;
    for (int i = 0; i < k; ++i) {
        const int home = scratch[i];
        for (int v = 0; v < n; ++v) {
            if (v == home || occupied_by_other(profile, i, v)) continue;
            scratch[i] = v;
            prop.run(g, scratch);
            int gained = prop.payoff(i);
            scratch[i] = home;
            if (gained > report.payoffs[i]) {
                report.is_nash = false;
                report.witness = DeviationWitness{i, v, report.payoffs[i], gained};
                return report;
            }
        }
    }
    report.is_nash = true;
    return report;
}

std::pair<int, int> best_response(const Graph& g, const StrategyProfile& profile, int player) {
    const int n = g.vertex_count();
    if (player < 0 || player >= static_cast<int>(profile.size()))
        throw std::out_of_range("player index out of range");
    Propagator prop;
    StrategyProfile scratch = profile;
    int best_vertex = 0, best_payoff = -1;
    for (int v = 0; v < n; ++v) {
        scratch[player] = v;
        prop.run(g, scratch);
        int payoff = prop.payoff(player);
        if (payoff > best_payoff) {
            best_payoff = payoff;
            best_vertex = v;
        }
    }
    return {best_vertex, best_payoff};
}

std::uint64_t multiset_count(int n, int k) {
    MultisetTable t(n, k);
    std::uint64_t c = t.count(n, k);
    if (c >= MultisetTable::kClamp) throw cap_error("multiset space exceeds 63 bits");
    return c;
}

StrategyProfile unrank_multiset(int n, int k, std::uint64_t index) {
    MultisetTable t(n, k);
    StrategyProfile m(k);
    int v = 0;
    for (int slot = 0; slot < k; ++slot) {
        for (;;) {
            std::uint64_t with_v = t.count(n - v, k - slot - 1);
            if (index < with_v) break;
            index -= with_v;
            ++v;
        }
        m[slot] = v;
    }
    return m;
}

bool next_multiset(StrategyProfile& m, int n) {
    int k = static_cast<int>(m.size());
    for (int i = k - 1; i >= 0; --i) {
        if (m[i] < n - 1) {
            int v = m[i] + 1;
            for (int j = i; j < k; ++j) m[j] = v;
            return true;
        }
    }
    return false;
}

namespace {

// Scans multisets in ascending rank order across contiguous chunks; visit
// returns false to stop the whole search early.
template <typename Visit>
void scan_multisets(int n, int k, std::uint64_t total, int threads, Visit visit) {
    threads = resolve_threads(threads);
    std::uint64_t chunk = (total + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t lo = std::min<std::uint64_t>(total, t * chunk);
        std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, t] {
            StrategyProfile m = unrank_multiset(n, k, lo);
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                if (!visit(idx, m, t)) return;
                if (idx + 1 < hi) next_multiset(m, n);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

SearchResult find_nash(const Graph& g, int k, const SearchOptions& opts) {
    if (k < 1) throw std::invalid_argument("find_nash needs k >= 1");
    const int n = g.vertex_count();
    std::uint64_t total = multiset_count(n, k);
    if (total > opts.budget && !opts.force)
        throw budget_error("search space of " + std::to_string(total) +
                           " multisets exceeds the budget of " + std::to_string(opts.budget));

    std::atomic<std::uint64_t> first_hit{UINT64_MAX};
    int threads = resolve_threads(opts.threads);
    std::vector<Propagator> props(threads);
    scan_multisets(n, k, total, threads, [&](std::uint64_t idx, StrategyProfile& m, int t) {
        if (idx >= first_hit.load(std::memory_order_relaxed)) return false;
        if (is_nash_quick(g, m, props[t])) {
            std::uint64_t seen = first_hit.load(std::memory_order_relaxed);
            while (idx < seen &&
                   !first_hit.compare_exchange_weak(seen, idx, std::memory_order_relaxed)) {
            }
            return false;
        }
        return true;
    });

    SearchResult result;
    std::uint64_t hit = first_hit.load();
    if (hit != UINT64_MAX) {
        result.exists = true;
        result.example = unrank_multiset(n, k, hit);
        result.examined = hit + 1;
    } else {
        result.examined = total;
    }
    return result;
}

CountResult count_nash(const Graph& g, int k, const SearchOptions& opts) {
    if (k < 1) throw std::invalid_argument("count_nash needs k >= 1");
    const int n = g.vertex_count();
    std::uint64_t total = multiset_count(n, k);
    if (total > opts.budget && !opts.force)
        throw budget_error("search space of " + std::to_string(total) +
                           " multisets exceeds the budget of " + std::to_string(opts.budget));

    std::atomic<std::uint64_t> found{0};
    int threads = resolve_threads(opts.threads);
    std::vector<Propagator> props(threads);
    scan_multisets(n, k, total, threads, [&](std::uint64_t, StrategyProfile& m, int t) {
        if (is_nash_quick(g, m, props[t])) found.fetch_add(1, std::memory_order_relaxed);
        return true;
    });
    return {found.load(), total};
}

}  // namespace cdg
