// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#include "kcl/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kcl {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("Graph: order must be in [1,64], got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.check_invariants();
    return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
    Graph g(static_cast<int>(adj.size()));
    g.adj_ = std::move(adj);
    g.check_invariants();
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
}

void Graph::check_invariants() const {
    const VertexSet all = vertices();
    for (int v = 0; v < n_; ++v) {
        const VertexSet row = adj_[static_cast<std::size_t>(v)];
        if (!row.subset_of(all))
            throw std::logic_error("Graph: adjacency row exceeds vertex range");
        if (row.contains(v)) throw std::logic_error("Graph: loop at vertex " + std::to_string(v));
        for_each_vertex(row, [&](int u) {
            if (!adj_[static_cast<std::size_t>(u)].contains(v))
                throw std::logic_error("Graph: asymmetric adjacency between " + std::to_string(v) +
                                       " and " + std::to_string(u));
        });
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for_each_vertex(neighbors(u), [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    const VertexSet all = g.vertices();
    for (int v = 0; v < n; ++v) {
        VertexSet row = all - g.neighbors(v);
        row.remove(v);
        adj[static_cast<std::size_t>(v)] = row;
    }
    return Graph::from_adjacency(std::move(adj));
}

InducedGraph induced(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("empty induced subgraph");
    if (!s.subset_of(g.vertices()))
        throw std::invalid_argument("induced: support exceeds vertex range");
    InducedGraph out;
    out.labels = s.to_vector();
    const int m = static_cast<int>(out.labels.size());
    std::vector<int> pos(64, -1);
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(out.labels[i])] = i;
    std::vector<VertexSet> adj(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for_each_vertex(g.neighbors(out.labels[static_cast<std::size_t>(i)]) & s, [&](int w) {
            adj[static_cast<std::size_t>(i)].add(pos[static_cast<std::size_t>(w)]);
        });
    }
    out.graph = Graph::from_adjacency(std::move(adj));
    return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    if (n1 + n2 > 64)
        throw std::invalid_argument("disjoint_union: combined order " + std::to_string(n1 + n2) +
                                    " exceeds the 64-vertex representation limit");
    Graph g(n1 + n2);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
    return g;
}

bool is_independent(const Graph& g, VertexSet s) {
    bool ok = true;
    for_each_vertex(s, [&](int v) {
        if (!(g.neighbors(v) & s).empty()) ok = false;
    });
    return ok;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp;
        VertexSet frontier = VertexSet::of({unseen.lowest()});
        while (!frontier.empty()) {
            comp = comp | frontier;
            VertexSet next;
            for_each_vertex(frontier, [&](int v) { next = next | g.neighbors(v); });
            frontier = next - comp;
        }
        out.push_back(comp);
        unseen = unseen - comp;
    }
    return out;
}

}  // namespace kcl
