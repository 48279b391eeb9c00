// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KCL_VERTEX_SET_HPP
#define KCL_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcl {

/// Set of vertices 0..63, backed by one machine word. Vertex 0 is the
/// least significant bit, so the integer value of `bits` induces the
/// lexicographic order used for deterministic tie-breaking everywhere.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet range(int n) {
        if (n < 0 || n > 64) throw std::invalid_argument("VertexSet::range: n out of [0,64]");
        return n == 64 ? VertexSet(~std::uint64_t{0}) : VertexSet((std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1u; }
    void add(int v) {
        if (v < 0 || v >= 64) throw std::invalid_argument("VertexSet: vertex out of [0,64)");
        bits |= std::uint64_t{1} << v;
    }
    void remove(int v) { bits &= ~(std::uint64_t{1} << v); }

    constexpr int count() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

    /// Smallest member; undefined on empty sets.
    constexpr int lowest() const { return std::countr_zero(bits); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : to_vector()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
    /// Integer-value order (vertex 0 least significant).
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }
};

/// Applies `f(v)` to each member in increasing label order.
template <typename F>
inline void for_each_vertex(VertexSet s, F&& f) {
    for (std::uint64_t b = s.bits; b != 0; b &= b - 1) f(std::countr_zero(b));
}

}  // namespace kcl

#endif  // KCL_VERTEX_SET_HPP
