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

#ifndef CDG_CANONICAL_HPP
#define CDG_CANONICAL_HPP

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace cdg {

inline constexpr int kCanonicalCap = 10;  // C(10,2) = 45 bits fits a word

/// Relabeling-invariant form: the upper-triangle adjacency bits (row-major)
/// of the canonically relabeled graph. Equal iff the graphs are isomorphic.
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;
    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
};

// Minimum over all degree-class-preserving vertex permutations, found by
// backtracking with lexicographic pruning. Throws cap_error for n > cap.
CanonicalForm canonical_form(const Graph& g, int cap = kCanonicalCap);

// The canonically relabeled graph itself (same search as canonical_form).
Graph canonical_representative(const Graph& g, int cap = kCanonicalCap);

Graph relabel(const Graph& g, const std::vector<int>& perm);  // new id = perm[old id]

bool isomorphic(const Graph& a, const Graph& b, int cap = kCanonicalCap);

/// One representative per isomorphism class of simple graphs on n vertices,
/// by labeled enumeration deduplicated per degree-sequence bucket. Output is
/// sorted by canonical form (deterministic). n <= 7 unless allow_large, which
/// raises the ceiling to 8.
std::vector<Graph> enumerate_graphs(int n, bool allow_large = false);

}  // namespace cdg

#endif
