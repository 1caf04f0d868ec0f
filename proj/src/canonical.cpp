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

#include "canonical.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace cdg {

namespace {

// Dense scratch representation for the permutation search (n <= 10).
struct SmallGraph {
    int n = 0;
    std::array<std::uint16_t, kCanonicalCap> adj{};

    int degree(int v) const { return __builtin_popcount(adj[v]); }
    bool edge(int i, int j) const { return (adj[i] >> j) & 1; }
    void add_edge(int i, int j) {
        adj[i] |= std::uint16_t(1) << j;
        adj[j] |= std::uint16_t(1) << i;
    }
};

SmallGraph to_small(const Graph& g, int cap) {
    if (g.vertex_count() > cap || g.vertex_count() > kCanonicalCap)
        throw cap_error("canonical form limited to small graphs");
    SmallGraph s;
    s.n = g.vertex_count();
    for (int v = 0; v < s.n; ++v)
        g.neighbors(v).for_each([&](int u) { s.adj[v] |= std::uint16_t(1) << u; });
    return s;
}

// Upper-triangle bits in column order (the graph6 order): pair s -> (i, j)
// with j the larger endpoint, chunks of size j starting at j(j-1)/2.
// Sequence bit s sits at word bit (T-1-s), so numeric < is lexicographic <.
struct CanonSearch {
    const SmallGraph& g;
    int n, total_bits;
    std::array<int, kCanonicalCap> vertex_at{};   // position -> vertex
    std::array<int, kCanonicalCap> class_of{};    // vertex -> degree class
    std::array<int, kCanonicalCap> pos_class{};   // position -> required class
    std::uint64_t best = ~0ULL;
    std::uint16_t used = 0;

    explicit CanonSearch(const SmallGraph& graph) : g(graph), n(graph.n) {
        total_bits = n * (n - 1) / 2;
        // degree classes ordered by degree descending
        std::vector<int> degs;
        for (int v = 0; v < n; ++v) degs.push_back(g.degree(v));
        std::vector<int> uniq = degs;
        std::sort(uniq.begin(), uniq.end(), std::greater<>());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            class_of[v] = static_cast<int>(
                std::find(uniq.begin(), uniq.end(), degs[v]) - uniq.begin());
        int p = 0;
        for (size_t c = 0; c < uniq.size(); ++c)
            for (int v = 0; v < n; ++v)
                if (class_of[v] == static_cast<int>(c)) pos_class[p++] = static_cast<int>(c);
    }

    void descend(int pos, std::uint64_t value) {
        if (pos == n) {
            if (value < best) best = value;
            return;
        }
        int chunk_lo = pos * (pos - 1) / 2;
        int shift = total_bits - chunk_lo - pos;
        std::uint64_t prefix_mask =
            (total_bits == chunk_lo + pos) ? ~0ULL : ~((1ULL << shift) - 1);
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (class_of[v] != pos_class[pos]) continue;
            std::uint64_t chunk = 0;
            for (int q = 0; q < pos; ++q) chunk = (chunk << 1) | ((g.adj[v] >> vertex_at[q]) & 1);
            std::uint64_t next = value | (chunk << shift);
            if (pos > 0 && next > (best & prefix_mask)) continue;
            used |= std::uint16_t(1) << v;
            vertex_at[pos] = v;
            descend(pos + 1, next);
            used &= ~(std::uint16_t(1) << v);
        }
    }

    std::uint64_t run() {
        descend(0, 0);
        return best;
    }
};

std::uint64_t colmajor_min(const SmallGraph& g) { return CanonSearch(g).run(); }

SmallGraph decode_colmajor(int n, std::uint64_t bits) {
    SmallGraph s;
    s.n = n;
    int total = n * (n - 1) / 2;
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if ((bits >> (total - 1 - idx)) & 1) s.add_edge(i, j);
    return s;
}

std::uint64_t rowmajor_bits(const SmallGraph& g) {
    int total = g.n * (g.n - 1) / 2;
    std::uint64_t bits = 0;
    int idx = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j, ++idx)
            if (g.edge(i, j)) bits |= 1ULL << (total - 1 - idx);
    return bits;
}

Graph from_small(const SmallGraph& s) {
    Graph g(s.n);
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
            if (s.edge(i, j)) g.add_edge(i, j);
    return g;
}

std::uint64_t degree_bucket_key(const SmallGraph& g) {
    std::array<int, kCanonicalCap> d{};
    for (int v = 0; v < g.n; ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.begin() + g.n);
    std::uint64_t key = 0;
    for (int v = 0; v < g.n; ++v) key = (key << 4) | static_cast<unsigned>(d[v]);
    return key;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, int cap) {
    SmallGraph s = to_small(g, cap);
    return {s.n, rowmajor_bits(decode_colmajor(s.n, colmajor_min(s)))};
}

Graph canonical_representative(const Graph& g, int cap) {
    SmallGraph s = to_small(g, cap);
    return from_small(decode_colmajor(s.n, colmajor_min(s)));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("bad permutation size");
    Graph h(n);
    for (int u = 0; u < n; ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) h.add_edge(perm[u], perm[v]);
        });
    return h;
}

bool isomorphic(const Graph& a, const Graph& b, int cap) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.degree_sequence_sorted() != b.degree_sequence_sorted()) return false;
    return canonical_form(a, cap) == canonical_form(b, cap);
}

std::vector<Graph> enumerate_graphs(int n, bool allow_large) {
    int cap = allow_large ? 8 : 7;
    if (n < 1 || n > cap)
        throw cap_error("enumeration capped at n <= " + std::to_string(cap) +
                        (allow_large ? "" : " (pass the override for n = 8)"));
    int total = n * (n - 1) / 2;
    std::unordered_map<std::uint64_t, std::unordered_set<std::uint64_t>> buckets;
    std::vector<std::uint64_t> forms;
    for (std::uint64_t mask = 0; mask < (1ULL << total); ++mask) {
        SmallGraph s;
        s.n = n;
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++idx)
                if ((mask >> idx) & 1) s.add_edge(i, j);
        std::uint64_t canon = colmajor_min(s);
        if (buckets[degree_bucket_key(s)].insert(canon).second) forms.push_back(canon);
    }
    std::sort(forms.begin(), forms.end());
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (auto f : forms) out.push_back(from_small(decode_colmajor(n, f)));
    return out;
}

}  // namespace cdg
