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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "../src/constructions.hpp"
#include "../src/equilibrium.hpp"

using namespace cdg;

namespace {

// Replays a prescribed move through the engine and demands a strict gain.
void check_move_improves(int m, int n, const std::array<GridCoord, 3>& pos) {
    Graph g = grid(m, n);
    GridMove mv = grid_improving_move(m, n, pos);
    StrategyProfile profile;
    for (const auto& p : pos) profile.push_back(grid_vertex(m, n, p));
    Propagator prop;
    prop.run(g, profile);
    int before = prop.payoff(mv.player);
    StrategyProfile deviated = profile;
    deviated[mv.player] = grid_vertex(m, n, mv.to);
    prop.run(g, deviated);
    INFO("grid " << m << "x" << n << " players (" << pos[0].x << "," << pos[0].y << ") ("
                 << pos[1].x << "," << pos[1].y << ") (" << pos[2].x << "," << pos[2].y
                 << ") move player " << mv.player + 1 << " -> (" << mv.to.x << "," << mv.to.y
                 << ") via " << mv.tag);
    CHECK(prop.payoff(mv.player) > before);
}

void check_all_profiles(int m, int n) {
    int total = m * n;
    for (int a = 0; a < total; ++a)
        for (int b = a + 1; b < total; ++b)
            for (int c = b + 1; c < total; ++c)
                check_move_improves(
                    m, n, {grid_coord(m, n, a), grid_coord(m, n, b), grid_coord(m, n, c)});
}

}  // namespace

TEST_CASE("path profiles match the figures") {
    CHECK(path_profile(15, 6) == std::vector<int>{3, 4, 9, 10, 13, 14});
    CHECK(path_profile(14, 5) == std::vector<int>{3, 4, 9, 12, 13});
    CHECK(path_profile(5, 3) == std::vector<int>{2, 3, 4});
    CHECK(path_profile(4, 3) == std::vector<int>{2, 3, 4});
    CHECK(path_profile(9, 1) == std::vector<int>{5});
    CHECK_THROWS_AS(path_profile(6, 3), no_profile_error);
    CHECK_THROWS_AS(path_profile(14, 3), no_profile_error);

    // covering assignment when there are at least as many players as vertices
    auto cover = path_profile(3, 5);
    std::set<int> chosen(cover.begin(), cover.end());
    CHECK(chosen == std::set<int>{1, 2, 3});
}

TEST_CASE("constructed path profiles verify as equilibria") {
    for (int k = 1; k <= 8; ++k) {
        if (k == 3) continue;
        for (int n = 1; n <= 14; ++n) {
            auto positions = path_profile(n, k);
            auto report = verify(path(n), to_profile(positions));
            INFO("n=" << n << " k=" << k);
            CHECK(report.is_nash);
        }
    }
    for (int n = 1; n <= 5; ++n) CHECK(verify(path(n), to_profile(path_profile(n, 3))).is_nash);
}

TEST_CASE("even-k payoffs stay within one of each other") {
    for (int k = 2; k <= 8; k += 2) {
        for (int n = k + 1; n <= 14; ++n) {
            int z = n / k;
            auto out = propagate(path(n), to_profile(path_profile(n, k)));
            for (int payoff : out.payoffs) {
                CHECK(payoff >= z);
                CHECK(payoff <= z + 1);
            }
        }
    }
}

TEST_CASE("cycle profiles") {
    CHECK(cycle_profile(9, 3) == std::vector<int>{1, 9, 4});
    CHECK(cycle_profile(8, 3) == std::vector<int>{1, 8, 4});
    auto single = cycle_profile(6, 1);
    CHECK(propagate(cycle(6), to_profile(single)).payoffs == std::vector<int>{6});
    for (int k = 1; k <= 8; ++k)
        for (int n = 3; n <= 14; ++n) {
            auto report = verify(cycle(n), to_profile(cycle_profile(n, k)));
            INFO("n=" << n << " k=" << k);
            CHECK(report.is_nash);
        }
}

TEST_CASE("hypercube profile quadruple") {
    auto p3 = hypercube_profile(3, 0b000, 0b001);
    CHECK(p3 == std::array<unsigned, 4>{0b000, 0b111, 0b001, 0b110});

    auto p1 = hypercube_profile(1, 0, 1);
    CHECK(p1 == std::array<unsigned, 4>{0, 1, 1, 0});
    auto out1 = propagate(hypercube(1), StrategyProfile(p1.begin(), p1.end()));
    CHECK(out1.payoffs == std::vector<int>{0, 0, 0, 0});
    CHECK(verify(hypercube(1), StrategyProfile(p1.begin(), p1.end())).is_nash);

    Graph h4 = hypercube(4);
    for (unsigned x : {0u, 5u, 9u}) {
        for (int bit = 0; bit < 4; ++bit) {
            auto quad = hypercube_profile(4, x, x ^ (1u << bit));
            auto out = propagate(h4, StrategyProfile(quad.begin(), quad.end()));
            CHECK(out.payoffs == std::vector<int>{4, 4, 4, 4});
        }
    }
    CHECK_THROWS_AS(hypercube_profile(3, 0b000, 0b011), std::invalid_argument);
}

TEST_CASE("hypercube equilibrium payoff closed form") {
    CHECK(hypercube_equilibrium_payoff(1) == 0);
    CHECK(hypercube_equilibrium_payoff(2) == 1);
    CHECK(hypercube_equilibrium_payoff(3) == 1);
    CHECK(hypercube_equilibrium_payoff(4) == 4);
    CHECK(hypercube_equilibrium_payoff(5) == 5);
    CHECK(hypercube_equilibrium_payoff(6) == 16);
    // engine oracle across the desk-scale dimensions
    for (int d = 1; d <= 6; ++d) {
        auto quad = hypercube_profile(d, 0, 1);
        auto out = propagate(hypercube(d), StrategyProfile(quad.begin(), quad.end()));
        for (int payoff : out.payoffs)
            CHECK(static_cast<std::uint64_t>(payoff) == hypercube_equilibrium_payoff(d));
    }
}

namespace {

// sum of C(t, j) over 2j < t: the strict lower half of a binomial row
std::uint64_t half_row_sum(int t) {
    std::uint64_t s = 0;
    for (int j = 0; 2 * j < t; ++j) s += binomial(t, j);
    return s;
}

}  // namespace

TEST_CASE("closed forms match their binomial half-sums") {
    // payoff: vertices agreeing with the seed in more than half of the d-1
    // free bits; region: the product split over the two differing-bit sets
    for (int d = 1; d <= 20; ++d)
        CHECK(hypercube_equilibrium_payoff(d) == half_row_sum(d - 1));
    std::mt19937_64 rng(6);
    for (int d = 2; d <= 10; ++d) {
        unsigned mask = (1u << d) - 1;
        for (int trial = 0; trial < 20; ++trial) {
            unsigned x = static_cast<unsigned>(rng()) & mask;
            unsigned y = static_cast<unsigned>(rng()) & mask;
            int alpha = hamming(x, y);
            CHECK(v_region_count(d, x, y) ==
                  half_row_sum(alpha) * half_row_sum(d - alpha));
        }
    }
}

TEST_CASE("v-region counts and bounds") {
    CHECK(v_region_count(2, 0b00, 0b01) == 1);  // only v = x
    CHECK(v_region_bound(2) == 1);
    CHECK(v_region_bound(3) == 1);
    for (unsigned x = 0; x < 8; ++x)
        for (unsigned y = 0; y < 8; ++y) CHECK(v_region_count(3, x, y) <= 1);
    CHECK(v_region_count(4, 0, 0) == 0);  // x = y leaves the region empty
    CHECK(v_region_count(5, 7, 7) == 0);
    for (int d = 2; d <= 8; ++d) {
        std::uint64_t bound = v_region_bound(d);
        for (unsigned y = 0; y < (1u << d); ++y) CHECK(v_region_count(d, 0, y) <= bound);
    }
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 5) == 252);
}

TEST_CASE("standoff: tied distances end removed") {
    std::mt19937_64 rng(20260810);
    for (int d = 2; d <= 6; ++d) {
        Graph h = hypercube(d);
        int done = 0;
        while (done < 50) {
            unsigned mask = (1u << d) - 1;
            unsigned x = static_cast<unsigned>(rng()) & mask;
            unsigned y = x ^ (1u << (rng() % d));
            unsigned yc = hypercube_complement(d, y);
            if (yc == x) continue;
            unsigned p = static_cast<unsigned>(rng()) & mask;
            if (p == x || p == y || p == yc) continue;
            StrategyProfile profile = {static_cast<int>(x), static_cast<int>(y),
                                       static_cast<int>(yc), static_cast<int>(p)};
            std::shuffle(profile.begin(), profile.end(), rng);
            auto out = propagate(h, profile);
            for (int v = 0; v < h.vertex_count(); ++v) {
                int best = d + 1, hits = 0;
                for (int seed : profile) {
                    int dist = hamming(static_cast<unsigned>(v), static_cast<unsigned>(seed));
                    if (dist < best) best = dist, hits = 1;
                    else if (dist == best) ++hits;
                }
                if (hits >= 2) CHECK(out.final_states[v] == kStateRemoved);
            }
            ++done;
        }
    }
}

TEST_CASE("monotone diagonal move gains when both rivals sit far top-right") {
    std::mt19937_64 rng(13);
    Graph g = grid(7, 7);
    int done = 0;
    while (done < 100) {
        GridCoord p1{1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 6)};
        auto pick = [&]() -> GridCoord {
            return {p1.x + static_cast<int>(rng() % (8 - p1.x)),
                    p1.y + static_cast<int>(rng() % (8 - p1.y))};
        };
        GridCoord p2 = pick(), p3 = pick();
        auto l1 = [&](GridCoord q) { return q.x - p1.x + q.y - p1.y; };
        if (l1(p2) < 3 || l1(p3) < 3 || (p2 == p3)) continue;
        StrategyProfile profile = {grid_vertex(7, 7, p1), grid_vertex(7, 7, p2),
                                   grid_vertex(7, 7, p3)};
        auto before = propagate(g, profile);
        StrategyProfile moved = profile;
        moved[0] = grid_vertex(7, 7, {p1.x + 1, p1.y + 1});
        auto after = propagate(g, moved);
        CHECK(after.payoffs[0] > before.payoffs[0]);
        ++done;
    }
}

TEST_CASE("grid move: spec examples") {
    // strict control chain
    check_move_improves(5, 5, {{{1, 1}, {2, 2}, {4, 4}}});
    GridMove diag = grid_improving_move(5, 5, {{{1, 1}, {2, 2}, {4, 4}}});
    CHECK(std::string(diag.tag).rfind("Strict", 0) == 0);

    // players in a row starting at the first column: the middle one jumps right
    GridMove colinear = grid_improving_move(5, 5, {{{2, 1}, {2, 2}, {2, 3}}});
    CHECK(colinear.player == 1);
    CHECK(colinear.to == GridCoord{2, 4});
    CHECK(colinear.tag == "Close-Case-1");

    // centered L-shape: the corner player steps up-right
    GridMove ell = grid_improving_move(5, 5, {{{3, 3}, {3, 4}, {4, 3}}});
    CHECK(ell.player == 0);
    CHECK(ell.to == GridCoord{2, 4});
    CHECK(ell.tag == "Close-Case-2");

    CHECK_THROWS_AS(grid_improving_move(5, 5, {{{1, 1}, {1, 1}, {2, 2}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(grid_improving_move(4, 9, {{{1, 1}, {2, 2}, {3, 3}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(grid_improving_move(5, 5, {{{1, 1}, {2, 2}, {6, 3}}}), std::out_of_range);
}

TEST_CASE("grid move is total and strictly improving on 5x6") { check_all_profiles(5, 6); }

TEST_CASE("grid move on random larger grids") {
    std::mt19937_64 rng(20260810);
    for (auto [m, n] : {std::pair{6, 6}, {7, 9}, {8, 7}, {9, 5}}) {
        for (int trial = 0; trial < 400; ++trial) {
            std::set<std::pair<int, int>> seen;
            while (seen.size() < 3)
                seen.insert({1 + static_cast<int>(rng() % m), 1 + static_cast<int>(rng() % n)});
            std::array<GridCoord, 3> pos;
            int i = 0;
            for (auto [x, y] : seen) pos[i++] = {x, y};
            check_move_improves(m, n, pos);
        }
    }
}
