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

#ifndef CDG_SPECPARSE_HPP
#define CDG_SPECPARSE_HPP

#include <string>

#include "graph.hpp"

namespace cdg {

/// Textual graph selector:
///   path:N | cycle:N | grid:MxN | hypercube:D | tree:K | fig7 | graph6:FILE[:LINE]
struct GraphSpec {
    enum class Family { Path, Cycle, Grid, Hypercube, Tree, Fig7, Graph6 };
    Family family = Family::Path;
    int a = 0, b = 0;      // n | rows, cols | d | k
    std::string file;      // graph6 source
    int line = 1;          // 1-based line within the file
    std::string text;      // the original selector
};

GraphSpec parse_graph_spec(const std::string& spec);
Graph build_graph(const GraphSpec& spec);

/// Vertex labels follow the figures: 1-based ids for paths, cycles, trees and
/// parsed graphs; "x.y" coordinates (or 1-based flat ids) on grids; raw bit
/// patterns (decimal, or binary of length d) on hypercubes.
int parse_vertex(const GraphSpec& spec, const Graph& g, const std::string& token);
std::string format_vertex(const GraphSpec& spec, int id);

}  // namespace cdg

#endif
