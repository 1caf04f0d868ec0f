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

#include "graph6.hpp"

#include <fstream>

namespace cdg {

namespace {
constexpr int kBias = 63;
constexpr int kMaxShort = 62;
}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    unsigned char c0 = static_cast<unsigned char>(line[0]);
    if (c0 == 126) throw std::invalid_argument("graph6: long form (n > 62) not supported");
    if (c0 < kBias || c0 > kBias + kMaxShort)
        throw std::invalid_argument("graph6: malformed length byte");
    int n = c0 - kBias;
    if (n == 0) throw std::invalid_argument("graph6: zero-vertex graph");

    int pairs = n * (n - 1) / 2;
    int body = (pairs + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + body)
        throw std::invalid_argument("graph6: wrong length for declared vertex count");

    Graph g(n);
    int bit = 0;
    for (int byte = 0; byte < body; ++byte) {
        unsigned char c = static_cast<unsigned char>(line[1 + byte]);
        if (c < kBias || c > 126) throw std::invalid_argument("graph6: non-printable data byte");
        int v = c - kBias;
        for (int k = 5; k >= 0; --k, ++bit) {
            bool on = (v >> k) & 1;
            if (bit >= pairs) {
                if (on) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (on) {
                // bit index -> pair (i, j), j the larger endpoint, column order
                int j = 1;
                int rem = bit;
                while (rem >= j) rem -= j, ++j;
                g.add_edge(rem, j);
            }
        }
    }
    return g;
}

std::string serialize_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxShort) throw cap_error("graph6: short form supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph6 file: " + path);
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

}  // namespace cdg
