// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#include "kcl/list_coloring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace kcl {

ListAssignment ListAssignment::uniform(int n, std::vector<int> colors) {
    ListAssignment L;
    L.lists.assign(static_cast<std::size_t>(n), colors);
    L.normalize();
    return L;
}

void ListAssignment::normalize() {
    for (std::size_t v = 0; v < lists.size(); ++v) {
        auto& l = lists[v];
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (l.empty())
            throw std::invalid_argument("ListAssignment: empty list at vertex " + std::to_string(v));
        if (l.front() < 0)
            throw std::invalid_argument("ListAssignment: negative color at vertex " + std::to_string(v));
    }
}

bool Coloring::complete() const {
    return std::all_of(colors.begin(), colors.end(), [](int c) { return c >= 0; });
}

GalvinResult galvin_color(const Digraph& d, const ListAssignment& L) {
    const int n = d.order();
    if (static_cast<int>(L.lists.size()) != n)
        throw std::invalid_argument("galvin_color: list count differs from vertex count");

    ListAssignment norm = L;
    norm.normalize();
    {
        std::string deficient;
        for (int v = 0; v < n; ++v)
            if (norm.size(v) < d.out_degree(v) + 1) deficient += " " + std::to_string(v);
        if (!deficient.empty())
            throw std::invalid_argument("galvin_color: lists shorter than outdegree+1 at vertices:" +
                                        deficient);
    }

    std::vector<std::vector<int>> lists = norm.lists;
    GalvinResult res;
    res.coloring.colors.assign(static_cast<std::size_t>(n), -1);
    VertexSet uncolored = d.underlying().vertices();

    while (!uncolored.empty()) {
        int c = std::numeric_limits<int>::max();
        for_each_vertex(uncolored, [&](int v) {
            if (!lists[static_cast<std::size_t>(v)].empty())
                c = std::min(c, lists[static_cast<std::size_t>(v)].front());
        });

        VertexSet with_c;
        for_each_vertex(uncolored, [&](int v) {
            const auto& l = lists[static_cast<std::size_t>(v)];
            if (std::binary_search(l.begin(), l.end(), c)) with_c.add(v);
        });

        const auto kernel = find_kernel(d, with_c);
        if (!kernel.has_value()) {
            res.success = false;
            res.missing_kernel_support = with_c;
            res.failed_color = c;
            return res;
        }

        for_each_vertex(*kernel, [&](int v) { res.coloring.colors[static_cast<std::size_t>(v)] = c; });
        uncolored = uncolored - *kernel;
        for_each_vertex(with_c - *kernel, [&](int v) {
            auto& l = lists[static_cast<std::size_t>(v)];
            l.erase(std::remove(l.begin(), l.end(), c), l.end());
        });

        // round invariant: list length keeps exceeding the outdegree
        // within the uncolored subdigraph
        for_each_vertex(uncolored, [&](int v) {
            const int deg = (d.out_neighbors(v) & uncolored).count();
            if (static_cast<int>(lists[static_cast<std::size_t>(v)].size()) < deg + 1)
                throw std::logic_error("galvin_color: round invariant violated at vertex " +
                                       std::to_string(v));
        });
    }

    res.success = true;
    return res;
}

bool verify_list_coloring(const Graph& g, const ListAssignment& L, const Coloring& col) {
    const int n = g.order();
    if (static_cast<int>(col.colors.size()) != n || !col.complete())
        throw std::invalid_argument("verify_list_coloring: coloring is incomplete");
    if (static_cast<int>(L.lists.size()) != n)
        throw std::invalid_argument("verify_list_coloring: list count differs from vertex count");
    for (int v = 0; v < n; ++v) {
        const auto& l = L.lists[static_cast<std::size_t>(v)];
        if (std::find(l.begin(), l.end(), col.colors[static_cast<std::size_t>(v)]) == l.end())
            return false;
    }
    for (auto [u, v] : g.edges())
        if (col.colors[static_cast<std::size_t>(u)] == col.colors[static_cast<std::size_t>(v)])
            return false;
    return true;
}

int lemma1_bound(const Digraph& d) { return max_outdegree(d) + 1; }

}  // namespace kcl
