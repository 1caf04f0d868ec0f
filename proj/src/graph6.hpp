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

#ifndef CDG_GRAPH6_HPP
#define CDG_GRAPH6_HPP

#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace cdg {

// Short-form graph6 (n <= 62): one length byte n+63, then the upper-triangle
// bits in column order x(0,1) x(0,2) x(1,2) x(0,3) ..., packed 6 per byte
// (+63), zero padded. Throws std::invalid_argument on malformed input.
Graph parse_graph6(std::string_view line);
std::string serialize_graph6(const Graph& g);

// One graph per non-empty line; ">>graph6<<" header is tolerated.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace cdg

#endif
