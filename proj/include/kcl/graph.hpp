// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KCL_GRAPH_HPP
#define KCL_GRAPH_HPP

#include <utility>
#include <vector>

#include "kcl/vertex_set.hpp"

namespace kcl {

/// Undirected simple graph on vertices 0..n-1 with bit-vector adjacency.
/// n is capped at 64; every constructor validates symmetry and
/// loop-freeness before returning.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    /// Builds from an explicit edge list; rejects loops and out-of-range
    /// endpoints, duplicate edges are harmless.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    /// Takes ownership of adjacency rows and validates the invariants.
    static Graph from_adjacency(std::vector<VertexSet> adj);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const { return u != v && adj_[static_cast<std::size_t>(u)].contains(v); }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
    int max_degree() const;
    long long edge_count() const;

    void add_edge(int u, int v);

    /// Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

  private:
    int n_ = 0;
    std::vector<VertexSet> adj_;

    void check_invariants() const;
};

Graph complement(const Graph& g);

struct InducedGraph {
    Graph graph;
    std::vector<int> labels;  // labels[i] = original vertex of new vertex i
};

/// Subgraph induced on s; vertices relabelled 0..|s|-1 in increasing
/// original-label order. Empty s is an error.
InducedGraph induced(const Graph& g, VertexSet s);

Graph disjoint_union(const Graph& g1, const Graph& g2);

bool is_independent(const Graph& g, VertexSet s);

/// Connected components, each reported as a VertexSet, ordered by
/// smallest member.
std::vector<VertexSet> components(const Graph& g);

}  // namespace kcl

#endif  // KCL_GRAPH_HPP
