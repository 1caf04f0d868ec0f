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

#ifndef CDG_GRAPH_HPP
#define CDG_GRAPH_HPP

#include <string>
#include <vector>

#include "common.hpp"

namespace cdg {

/// Simple undirected graph, adjacency stored as one bitset row per vertex.
/// Immutable once built (all builders finish before handing the graph out).
class Graph {
  public:
    explicit Graph(int n) : n_(n), adj_(n) {
        if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
        if (n > VertexSet::capacity()) throw cap_error("vertex capacity exceeded");
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("no self loops");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u].test(v);
    }

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    long long edge_count() const {
        long long d = 0;
        for (int v = 0; v < n_; ++v) d += degree(v);
        return d / 2;
    }

    std::vector<int> degree_sequence_sorted() const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    }

    bool operator==(const Graph&) const = default;

  private:
    int n_;
    std::vector<VertexSet> adj_;
};

// --- named families ---------------------------------------------------------

Graph path(int n);
Graph cycle(int n);                // n >= 3
Graph grid(int rows, int cols);    // rows, cols >= 1
Graph hypercube(int d);            // d >= 1, 2^d vertices (id = bit pattern)
Graph no_ne_tree(int k);           // k >= 3, floor(3k/2)+2 vertices
Graph fig7_graph();                // 8 vertices, 13 edges

// --- grid coordinates --------------------------------------------------------

/// 1-based grid position, x in [1,rows], y in [1,cols].
struct GridCoord {
    int x = 1;
    int y = 1;
    bool operator==(const GridCoord&) const = default;
};

// Row-major flattening (x-1)*cols + (y-1).
int grid_vertex(int rows, int cols, GridCoord c);
GridCoord grid_coord(int rows, int cols, int v);

// --- hypercube helpers -------------------------------------------------------

unsigned hypercube_complement(int d, unsigned v);
int hamming(unsigned a, unsigned b);

// --- distances ---------------------------------------------------------------

inline constexpr int kUnreachable = -1;

/// All-pairs hop distances; kUnreachable marks disconnected pairs.
class DistanceMatrix {
  public:
    DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, kUnreachable) {}
    int n() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    int& at(int u, int v) { return d_[static_cast<size_t>(u) * n_ + v]; }

  private:
    int n_;
    std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// BFS distances from one source; kUnreachable for unreached vertices.
std::vector<int> distances_from(const Graph& g, int src);

bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);

// --- DOT export ---------------------------------------------------------------

/// DOT text for the graph. vertex_colors may be empty; otherwise one entry per
/// vertex: -1 uncolored, -2 removed, >= 0 player id (mapped onto a palette).
std::string to_dot(const Graph& g, const std::vector<int>& vertex_colors = {});

}  // namespace cdg

#endif
