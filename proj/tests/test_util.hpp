// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared test fixtures: random instance generators and independent
// oracles. The oracles here intentionally avoid the library's search
// code paths so that agreement between the two is meaningful.

#ifndef KCL_TESTS_TEST_UTIL_HPP
#define KCL_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "kcl/choosability.hpp"
#include "kcl/graph.hpp"
#include "kcl/kernels.hpp"
#include "kcl/list_coloring.hpp"
#include "kcl/orientation.hpp"

namespace kcl_test {

inline kcl::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution edge(p);
    kcl::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

/// Orients every edge along a uniformly random vertex permutation.
inline kcl::Digraph random_acyclic_orientation(std::mt19937_64& rng, const kcl::Graph& g) {
    std::vector<int> rank(static_cast<std::size_t>(g.order()));
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    kcl::Digraph d(g);
    for (auto [u, v] : g.edges()) {
        if (rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(v)])
            d.add_arc(u, v);
        else
            d.add_arc(v, u);
    }
    return d;
}

/// Each edge gets one direction or both, independently at random.
inline kcl::Digraph random_orientation(std::mt19937_64& rng, const kcl::Graph& g) {
    std::uniform_int_distribution<int> pick(0, 2);
    kcl::Digraph d(g);
    for (auto [u, v] : g.edges()) {
        switch (pick(rng)) {
            case 0: d.add_arc(u, v); break;
            case 1: d.add_arc(v, u); break;
            default:
                d.add_arc(u, v);
                d.add_arc(v, u);
        }
    }
    return d;
}

/// Classical sink-peeling kernel of an acyclic digraph: walk vertices in
/// an order where out-neighbors come first; a vertex joins the kernel
/// exactly when none of its out-neighbors did. Unique for DAGs.
inline std::optional<kcl::VertexSet> dag_kernel_sink_peeling(const kcl::Digraph& d,
                                                             kcl::VertexSet support) {
    std::vector<int> order;
    kcl::VertexSet placed;
    while (placed != support) {
        bool progressed = false;
        kcl::for_each_vertex(support - placed, [&](int v) {
            if (((d.out_neighbors(v) & support) - placed).empty()) {
                order.push_back(v);
                placed.add(v);
                progressed = true;
            }
        });
        if (!progressed) return std::nullopt;  // a directed cycle: not a DAG
    }
    kcl::VertexSet kernel;
    for (int v : order)
        if ((d.out_neighbors(v) & kernel).empty()) kernel.add(v);
    return kernel;
}

/// Tries every color tuple; independent of the library's backtracking.
inline bool naive_colorable(const kcl::Graph& g, const std::vector<std::vector<int>>& lists) {
    const int n = g.order();
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (lists[static_cast<std::size_t>(u)][idx[static_cast<std::size_t>(u)]] ==
                lists[static_cast<std::size_t>(v)][idx[static_cast<std::size_t>(v)]])
                proper = false;
        if (proper) return true;
        int pos = n - 1;
        while (pos >= 0) {
            if (++idx[static_cast<std::size_t>(pos)] < lists[static_cast<std::size_t>(pos)].size())
                break;
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return false;
    }
}

/// Enumerates every assignment of f(v)-subsets from a universe of
/// sum f(v) colors, with no canonicalization at all.
inline bool naive_is_f_choosable(const kcl::Graph& g, const std::vector<int>& f) {
    const int n = g.order();
    const int universe = std::accumulate(f.begin(), f.end(), 0);

    std::vector<std::vector<std::vector<int>>> subsets(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> comb(static_cast<std::size_t>(f[static_cast<std::size_t>(v)]));
        std::function<void(int, int)> gen = [&](int start, int depth) {
            if (depth == f[static_cast<std::size_t>(v)]) {
                subsets[static_cast<std::size_t>(v)].push_back(comb);
                return;
            }
            for (int c = start; c < universe; ++c) {
                comb[static_cast<std::size_t>(depth)] = c;
                gen(c + 1, depth + 1);
            }
        };
        gen(0, 0);
    }

    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
    for (;;) {
        for (int v = 0; v < n; ++v)
            lists[static_cast<std::size_t>(v)] =
                subsets[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]];
        if (!naive_colorable(g, lists)) return false;
        int pos = n - 1;
        while (pos >= 0) {
            if (++pick[static_cast<std::size_t>(pos)] <
                subsets[static_cast<std::size_t>(pos)].size())
                break;
            pick[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return true;
    }
}

/// All labeled graphs on n vertices, edge mask order.
inline std::vector<kcl::Graph> all_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<kcl::Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        kcl::Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace kcl_test

#endif  // KCL_TESTS_TEST_UTIL_HPP
