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

#include "graph.hpp"

#include <algorithm>
#include <sstream>

namespace cdg {

std::vector<int> Graph::degree_sequence_sorted() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n - 1, 0);
    return g;
}

Graph grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs rows, cols >= 1");
    Graph g(rows * cols);
    for (int x = 1; x <= rows; ++x) {
        for (int y = 1; y <= cols; ++y) {
            int v = grid_vertex(rows, cols, {x, y});
            if (x < rows) g.add_edge(v, grid_vertex(rows, cols, {x + 1, y}));
            if (y < cols) g.add_edge(v, grid_vertex(rows, cols, {x, y + 1}));
        }
    }
    return g;
}

Graph hypercube(int d) {
    if (d < 1) throw std::invalid_argument("hypercube needs d >= 1");
    if (d > 8) throw cap_error("hypercube dimension exceeds vertex capacity");
    int n = 1 << d;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
    return g;
}

// Odd k: path u1-u2-u3 with ceil(k/2)-1 pendant P3 branches attached at u3.
// Even k: path u1-u2 with k/2 branches attached at u2.
// Each branch v1-v2-v3 hangs by its v1 endpoint. Total floor(3k/2)+2 vertices.
Graph no_ne_tree(int k) {
    if (k < 3) throw std::invalid_argument("no_ne_tree needs k >= 3");
    bool odd = k % 2 != 0;
    int spine = odd ? 3 : 2;
    int branches = odd ? (k + 1) / 2 - 1 : k / 2;
    int n = spine + 3 * branches;
    Graph g(n);
    for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
    int hub = spine - 1;
    for (int b = 0; b < branches; ++b) {
        int v1 = spine + 3 * b;
        g.add_edge(hub, v1);
        g.add_edge(v1, v1 + 1);
        g.add_edge(v1 + 1, v1 + 2);
    }
    return g;
}

Graph fig7_graph() {
    Graph g(8);
    constexpr int edges[13][2] = {{1, 2}, {2, 4}, {4, 5}, {5, 3}, {3, 1}, {4, 6}, {6, 8},
                                  {8, 7}, {7, 5}, {2, 6}, {3, 7}, {6, 5}, {7, 4}};
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
}

int grid_vertex(int rows, int cols, GridCoord c) {
    if (c.x < 1 || c.x > rows || c.y < 1 || c.y > cols)
        throw std::out_of_range("grid coordinate out of range");
    return (c.x - 1) * cols + (c.y - 1);
}

GridCoord grid_coord(int rows, int cols, int v) {
    if (v < 0 || v >= rows * cols) throw std::out_of_range("grid vertex out of range");
    return {v / cols + 1, v % cols + 1};
}

unsigned hypercube_complement(int d, unsigned v) {
    return ~v & ((d >= 32) ? ~0u : ((1u << d) - 1));
}

int hamming(unsigned a, unsigned b) { return __builtin_popcount(a ^ b); }

std::vector<int> distances_from(const Graph& g, int src) {
    g.check_vertex(src);
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    VertexSet seen, frontier;
    seen.set(src);
    frontier.set(src);
    dist[src] = 0;
    for (int d = 1; frontier.any(); ++d) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        next.remove(seen);
        next.for_each([&](int v) { dist[v] = d; });
        seen |= next;
        frontier = next;
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    int n = g.vertex_count();
    DistanceMatrix m(n);
    for (int s = 0; s < n; ++s) {
        auto d = distances_from(g, s);
        for (int v = 0; v < n; ++v) m.at(s, v) = d[v];
    }
    return m;
}

bool is_connected(const Graph& g) {
    auto d = distances_from(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

bool is_acyclic(const Graph& g) {
    // A simple graph is a forest iff every connected component has |E| = |V|-1.
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        auto d = distances_from(g, s);
        for (int v = 0; v < n; ++v)
            if (d[v] != kUnreachable) comp[v] = comps;
        ++comps;
    }
    return g.edge_count() == n - comps;
}

namespace {
const char* kPalette[] = {"#e6550d", "#3182bd", "#31a354", "#756bb1", "#d6616b",
                          "#e7ba52", "#17becf", "#8c6d31", "#636363", "#ce6dbd"};
}

std::string to_dot(const Graph& g, const std::vector<int>& vertex_colors) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v + 1;
        if (!vertex_colors.empty()) {
            int c = vertex_colors[v];
            if (c >= 0)
                out << " [fillcolor=\"" << kPalette[c % 10] << "\", label=\"" << v + 1 << ":p"
                    << c + 1 << "\"]";
            else if (c == -2)
                out << " [fillcolor=gray, label=\"" << v + 1 << ":x\"]";
        }
        out << ";\n";
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) out << "  " << u + 1 << " -- " << v + 1 << ";\n";
        });
    out << "}\n";
    return out.str();
}

}  // namespace cdg
