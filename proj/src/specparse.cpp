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

#include "specparse.hpp"

#include <algorithm>
#include <charconv>

#include "graph6.hpp"

namespace cdg {

namespace {

constexpr const char* kGrammar =
    "expected path:N | cycle:N | grid:MxN | hypercube:D | tree:K | fig7 | graph6:FILE[:LINE]";

int parse_int(std::string_view s) {
    int value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("bad graph spec (" + std::string(s) + "): " + kGrammar);
    return value;
}

}  // namespace

GraphSpec parse_graph_spec(const std::string& spec) {
    GraphSpec out;
    out.text = spec;
    if (spec == "fig7") {
        out.family = GraphSpec::Family::Fig7;
        return out;
    }
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad graph spec (" + spec + "): " + kGrammar);
    std::string head = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (head == "path") {
        out.family = GraphSpec::Family::Path;
        out.a = parse_int(rest);
    } else if (head == "cycle") {
        out.family = GraphSpec::Family::Cycle;
        out.a = parse_int(rest);
    } else if (head == "hypercube") {
        out.family = GraphSpec::Family::Hypercube;
        out.a = parse_int(rest);
    } else if (head == "tree") {
        out.family = GraphSpec::Family::Tree;
        out.a = parse_int(rest);
    } else if (head == "grid") {
        out.family = GraphSpec::Family::Grid;
        auto x = rest.find('x');
        if (x == std::string::npos)
            throw std::invalid_argument("bad graph spec (" + spec + "): " + kGrammar);
        out.a = parse_int(rest.substr(0, x));
        out.b = parse_int(rest.substr(x + 1));
    } else if (head == "graph6") {
        out.family = GraphSpec::Family::Graph6;
        auto last = rest.rfind(':');
        bool has_line = last != std::string::npos && last + 1 < rest.size() &&
                        std::all_of(rest.begin() + last + 1, rest.end(),
                                    [](char c) { return c >= '0' && c <= '9'; });
        if (has_line) {
            out.file = rest.substr(0, last);
            out.line = parse_int(rest.substr(last + 1));
        } else {
            out.file = rest;
        }
        if (out.file.empty() || out.line < 1)
            throw std::invalid_argument("bad graph spec (" + spec + "): " + kGrammar);
    } else {
        throw std::invalid_argument("bad graph spec (" + spec + "): " + kGrammar);
    }
    return out;
}

Graph build_graph(const GraphSpec& spec) {
    using F = GraphSpec::Family;
    switch (spec.family) {
        case F::Path: return path(spec.a);
        case F::Cycle: return cycle(spec.a);
        case F::Grid: return grid(spec.a, spec.b);
        case F::Hypercube: return hypercube(spec.a);
        case F::Tree: return no_ne_tree(spec.a);
        case F::Fig7: return fig7_graph();
        case F::Graph6: {
            auto graphs = read_graph6_file(spec.file);
            if (spec.line > static_cast<int>(graphs.size()))
                throw std::invalid_argument("graph6 file " + spec.file + " has only " +
                                            std::to_string(graphs.size()) + " graphs");
            return graphs[spec.line - 1];
        }
    }
    throw std::logic_error("unhandled graph family");
}

int parse_vertex(const GraphSpec& spec, const Graph& g, const std::string& token) {
    using F = GraphSpec::Family;
    if (token.empty()) throw std::invalid_argument("empty vertex token");
    if (spec.family == F::Grid) {
        auto dot = token.find('.');
        if (dot != std::string::npos) {
            GridCoord c{parse_int(token.substr(0, dot)), parse_int(token.substr(dot + 1))};
            return grid_vertex(spec.a, spec.b, c);
        }
        int flat = parse_int(token);
        g.check_vertex(flat - 1);
        return flat - 1;
    }
    if (spec.family == F::Hypercube) {
        int d = spec.a;
        bool binary = static_cast<int>(token.size()) == d &&
                      std::all_of(token.begin(), token.end(),
                                  [](char c) { return c == '0' || c == '1'; });
        int v = 0;
        if (binary && d > 1) {
            for (char c : token) v = (v << 1) | (c - '0');
        } else {
            v = parse_int(token);
        }
        g.check_vertex(v);
        return v;
    }
    int id = parse_int(token);
    g.check_vertex(id - 1);
    return id - 1;
}

std::string format_vertex(const GraphSpec& spec, int id) {
    using F = GraphSpec::Family;
    if (spec.family == F::Grid) {
        GridCoord c = grid_coord(spec.a, spec.b, id);
        return std::to_string(c.x) + "." + std::to_string(c.y);
    }
    if (spec.family == F::Hypercube) return std::to_string(id);
    return std::to_string(id + 1);
}

}  // namespace cdg
