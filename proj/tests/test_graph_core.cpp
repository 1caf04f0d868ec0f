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
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "../src/canonical.hpp"
#include "../src/graph.hpp"
#include "../src/graph6.hpp"

using namespace cdg;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

void check_symmetric_no_loops(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        CHECK_FALSE(g.neighbors(u).test(u));
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(g.neighbors(u).test(v) == g.neighbors(v).test(u));
    }
}

// Independent dedup oracle: minimum row-major adjacency bits over all n!
// permutations, without degree classes or pruning.
std::uint64_t min_over_all_perms(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t bits = 0;
        int idx = 0;
        int total = n * (n - 1) / 2;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++idx) {
                int pi = perm[i], pj = perm[j];
                if (g.has_edge(std::min(pi, pj), std::max(pi, pj)))
                    bits |= 1ULL << (total - 1 - idx);
            }
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::uint64_t brute_class_count(int n) {
    int total = n * (n - 1) / 2;
    std::set<std::uint64_t> classes;
    for (std::uint64_t mask = 0; mask < (1ULL << total); ++mask) {
        Graph g(n);
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++idx)
                if ((mask >> idx) & 1) g.add_edge(i, j);
        classes.insert(min_over_all_perms(g));
    }
    return classes.size();
}

}  // namespace

TEST_CASE("path family") {
    Graph p1 = path(1);
    CHECK(p1.vertex_count() == 1);
    CHECK(p1.edge_count() == 0);

    Graph p5 = path(5);
    CHECK(p5.vertex_count() == 5);
    CHECK(p5.edge_count() == 4);
    std::vector<int> degs;
    for (int v = 0; v < 5; ++v) degs.push_back(p5.degree(v));
    CHECK(degs == std::vector<int>{1, 2, 2, 2, 1});

    Graph p15 = path(15);
    CHECK(p15.vertex_count() == 15);
    CHECK(p15.edge_count() == 14);
    check_symmetric_no_loops(p15);
}

TEST_CASE("cycle family") {
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    Graph c3 = cycle(3);
    CHECK(c3.edge_count() == 3);
    Graph c8 = cycle(8);
    CHECK(c8.vertex_count() == 8);
    CHECK(c8.edge_count() == 8);
    for (int v = 0; v < 8; ++v) CHECK(c8.degree(v) == 2);
    // wraparound shortest path: vertices 1 and 4 of C5 (1-based)
    Graph c5 = cycle(5);
    CHECK(distances_from(c5, 0)[3] == 2);
    check_symmetric_no_loops(c8);
}

TEST_CASE("grid family and coordinates") {
    Graph g55 = grid(5, 5);
    CHECK(g55.vertex_count() == 25);
    // edge enumeration oracle: count coordinate pairs at Manhattan distance 1
    long long expected = 0;
    for (int x1 = 1; x1 <= 5; ++x1)
        for (int y1 = 1; y1 <= 5; ++y1)
            for (int x2 = 1; x2 <= 5; ++x2)
                for (int y2 = 1; y2 <= 5; ++y2)
                    if (std::abs(x1 - x2) + std::abs(y1 - y2) == 1) ++expected;
    CHECK(g55.edge_count() == expected / 2);
    CHECK(g55.edge_count() == 2 * 5 * 5 - 5 - 5);

    CHECK(isomorphic(grid(1, 5), path(5)));
    CHECK(isomorphic(grid(2, 2), cycle(4)));

    // coordinate mapping is a bijection with row-major flattening
    for (int v = 0; v < 5 * 7; ++v) {
        GridCoord c = grid_coord(5, 7, v);
        CHECK(grid_vertex(5, 7, c) == v);
    }
    CHECK(grid_vertex(5, 7, {1, 1}) == 0);
    CHECK(grid_vertex(5, 7, {2, 1}) == 7);
    CHECK_THROWS_AS(grid_vertex(5, 7, {6, 1}), std::out_of_range);
    check_symmetric_no_loops(g55);
}

TEST_CASE("grid distance law: BFS equals Manhattan") {
    Graph g = grid(7, 9);
    auto dm = all_pairs_distances(g);
    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<int> vx(1, 7), vy(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        GridCoord a{vx(rng), vy(rng)}, b{vx(rng), vy(rng)};
        int hops = dm.at(grid_vertex(7, 9, a), grid_vertex(7, 9, b));
        CHECK(hops == std::abs(a.x - b.x) + std::abs(a.y - b.y));
    }
}

TEST_CASE("hypercube family") {
    CHECK(isomorphic(hypercube(1), path(2)));
    CHECK(isomorphic(hypercube(2), cycle(4)));
    Graph h3 = hypercube(3);
    CHECK(distances_from(h3, 0b000)[0b111] == 3);
    for (int d = 1; d <= 6; ++d) {
        Graph h = hypercube(d);
        CHECK(h.vertex_count() == 1 << d);
        for (int v = 0; v < h.vertex_count(); ++v) CHECK(h.degree(v) == d);
    }
}

TEST_CASE("hypercube distance law: BFS equals Hamming") {
    for (int d = 1; d <= 6; ++d) {
        Graph h = hypercube(d);
        auto dm = all_pairs_distances(h);
        for (int u = 0; u < h.vertex_count(); ++u)
            for (int v = 0; v < h.vertex_count(); ++v)
                CHECK(dm.at(u, v) == hamming(u, v));
    }
    CHECK(hypercube_complement(3, 0b001) == 0b110);
    CHECK(hypercube_complement(3, hypercube_complement(3, 0b101)) == 0b101);
    CHECK(hamming(0b0000, hypercube_complement(4, 0b0000)) == 4);
}

TEST_CASE("no_ne_tree construction") {
    CHECK_THROWS_AS(no_ne_tree(2), std::invalid_argument);

    Graph t9 = no_ne_tree(9);
    CHECK(t9.vertex_count() == 15);

    Graph t3 = no_ne_tree(3);
    CHECK(t3.vertex_count() == 6);

    Graph t4 = no_ne_tree(4);
    CHECK(t4.vertex_count() == 8);
    CHECK(t4.edge_count() == 7);
    CHECK(is_connected(t4));
    CHECK(is_acyclic(t4));

    for (int k = 3; k <= 12; ++k) {
        Graph t = no_ne_tree(k);
        CHECK(t.vertex_count() == 3 * k / 2 + 2);
        CHECK(is_connected(t));
        CHECK(is_acyclic(t));
        CHECK(t.edge_count() == t.vertex_count() - 1);
        check_symmetric_no_loops(t);
    }
}

TEST_CASE("fig7 graph") {
    Graph g = fig7_graph();
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 13);
    CHECK(is_connected(g));
    // incident-edge count for vertex 4 (1-based) in the figure's edge list:
    // {2,4} {4,5} {4,6} {7,4}
    CHECK(g.degree(3) == 4);
    std::vector<int> degs = g.degree_sequence_sorted();
    CHECK(degs == std::vector<int>{2, 2, 3, 3, 4, 4, 4, 4});
}

TEST_CASE("all pairs distances") {
    auto dm = all_pairs_distances(path(5));
    CHECK(dm.at(0, 4) == 4);
    CHECK(dm.at(4, 0) == 4);
    for (int v = 0; v < 5; ++v) CHECK(dm.at(v, v) == 0);

    Graph g55 = grid(5, 5);
    auto dg = all_pairs_distances(g55);
    CHECK(dg.at(grid_vertex(5, 5, {1, 1}), grid_vertex(5, 5, {5, 5})) == 8);

    Graph isolated(2);  // no edges
    auto di = all_pairs_distances(isolated);
    CHECK(di.at(0, 1) == kUnreachable);
    CHECK(di.at(0, 0) == 0);

    // triangle inequality over reachable triples on a random graph
    std::mt19937_64 rng(7);
    Graph r = random_graph(rng, 10, 0.3);
    auto dr = all_pairs_distances(r);
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b)
            for (int c = 0; c < 10; ++c) {
                if (dr.at(a, b) == kUnreachable || dr.at(b, c) == kUnreachable ||
                    dr.at(a, c) == kUnreachable)
                    continue;
                CHECK(dr.at(a, c) <= dr.at(a, b) + dr.at(b, c));
            }
}

TEST_CASE("canonical form invariance under relabeling") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);  // up to 7
        Graph g = random_graph(rng, n, 0.4);
        auto base = canonical_form(g);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int r = 0; r < 10; ++r) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(relabel(g, perm)) == base);
        }
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    Graph star4(4);
    star4.add_edge(0, 1);
    star4.add_edge(0, 2);
    star4.add_edge(0, 3);
    CHECK_FALSE(canonical_form(path(4)) == canonical_form(star4));
    CHECK_FALSE(canonical_form(grid(2, 3)) == canonical_form(cycle(6)));
    CHECK(grid(2, 3).edge_count() == 7);
    CHECK(cycle(6).edge_count() == 6);
    CHECK_THROWS_AS(canonical_form(path(11)), cap_error);

    // agrees with the all-permutations oracle on every 5-vertex graph
    for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
        Graph g(5);
        int idx = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j, ++idx)
                if ((mask >> idx) & 1) g.add_edge(i, j);
        Graph h = canonical_representative(g);
        CHECK(min_over_all_perms(g) == min_over_all_perms(h));
    }
}

TEST_CASE("enumerate_graphs matches the brute-force dedup oracle") {
    CHECK(enumerate_graphs(1).size() == 1);
    CHECK(enumerate_graphs(2).size() == 2);
    CHECK(enumerate_graphs(3).size() == 4);
    CHECK(enumerate_graphs(4).size() == 11);
    CHECK(brute_class_count(4) == 11);
    CHECK(enumerate_graphs(5).size() == brute_class_count(5));  // 34

    // pairwise non-isomorphic output
    auto graphs = enumerate_graphs(5);
    std::set<std::uint64_t> forms;
    for (const auto& g : graphs) forms.insert(canonical_form(g).bits);
    CHECK(forms.size() == graphs.size());

    CHECK_THROWS_AS(enumerate_graphs(8), cap_error);
    CHECK_THROWS_AS(enumerate_graphs(9, true), cap_error);
}

TEST_CASE("graph6 round trips") {
    // every valid short-form string on <= 5 vertices survives a round trip
    auto classes = enumerate_graphs(5);
    for (const auto& g : classes) {
        std::string s = serialize_graph6(g);
        CHECK(serialize_graph6(parse_graph6(s)) == s);
        CHECK(isomorphic(parse_graph6(s), g));
    }
    CHECK(isomorphic(parse_graph6(serialize_graph6(path(3))), path(3)));

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 40), 0.2);
        Graph back = parse_graph6(serialize_graph6(g));
        CHECK(back == g);
    }

    // largest short-form size round trips; anything bigger is rejected
    Graph g62 = random_graph(rng, 62, 0.3);
    CHECK(parse_graph6(serialize_graph6(g62)) == g62);
    CHECK_THROWS_AS(serialize_graph6(path(63)), cap_error);
}

TEST_CASE("graph6 known encodings") {
    CHECK(serialize_graph6(cycle(3)) == "Bw");  // triangle
    Graph p3 = path(3);
    CHECK(serialize_graph6(p3) == "Bg");
    Graph k4 = cycle(4);
    k4.add_edge(0, 2);
    k4.add_edge(1, 3);
    CHECK(serialize_graph6(k4) == "C~");  // complete graph on four vertices
}

TEST_CASE("graph6 malformed inputs") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("\x1f"), std::invalid_argument);   // bad length byte
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);      // truncated body
    CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument);    // oversized body
    CHECK_THROWS_AS(parse_graph6("B\x10"), std::invalid_argument);  // non-printable data
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);    // long form
    // nonzero padding: path(2) has one pair bit; five padding bits must be zero
    CHECK_THROWS_AS(parse_graph6("A"
                                 "w"),
                    std::invalid_argument);
    CHECK(parse_graph6("A_").edge_count() == 1);
}

TEST_CASE("graph6 corpus file of all 6-vertex classes") {
    auto classes = enumerate_graphs(6);
    CHECK(classes.size() == 156);
    std::string path_name = "cdg_test_n6.g6";
    {
        std::ofstream out(path_name);
        out << ">>graph6<<\n";
        for (const auto& g : classes) out << serialize_graph6(g) << "\n";
    }
    auto parsed = read_graph6_file(path_name);
    CHECK(parsed.size() == 156);
    std::set<std::uint64_t> forms;
    for (const auto& g : parsed) forms.insert(canonical_form(g).bits);
    CHECK(forms.size() == 156);
    std::remove(path_name.c_str());
}

TEST_CASE("dot export") {
    Graph g = path(3);
    std::string dot = to_dot(g);
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    CHECK(dot.find("2 -- 3;") != std::string::npos);
    std::string colored = to_dot(g, {0, -2, 1});
    CHECK(colored.find("fillcolor=gray") != std::string::npos);
    CHECK(colored.find(":p1") != std::string::npos);
}
