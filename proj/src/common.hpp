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

#ifndef CDG_COMMON_HPP
#define CDG_COMMON_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdg {

// Thrown when an enumeration or search would exceed the configured ceiling.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a size cap (canonical form, enumeration, vertex capacity) is exceeded.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a requested construction provably does not exist
// (three players on a path with at least six vertices).
struct no_profile_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fixed-width bitset over vertex ids. Four words cover every desk-scale
/// instance handled here (paths/cycles, grids up to ~15x15, hypercubes up
/// to d=8, graph6 short form).
class VertexSet {
  public:
    static constexpr int kWords = 4;
    static constexpr int kCapacity = kWords * 64;

    constexpr VertexSet() = default;

    static constexpr int capacity() { return kCapacity; }

    // Mask with the first n bits set.
    static VertexSet first_n(int n) {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.w_[w] = (n >= 64) ? ~0ULL : ((1ULL << n) - 1);
        return s;
    }

    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void clear() { w_ = {}; }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    int find_first() const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i]) return i * 64 + __builtin_ctzll(w_[i]);
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // this &= ~o
    VertexSet& remove(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool operator==(const VertexSet&) const = default;

    // Calls f(vertex) for every set bit, ascending.
    template <typename F>
    void for_each(F f) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(i * 64 + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

  private:
    std::array<std::uint64_t, kWords> w_{};
};

}  // namespace cdg

#endif
