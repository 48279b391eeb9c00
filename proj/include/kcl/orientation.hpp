// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KCL_ORIENTATION_HPP
#define KCL_ORIENTATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcl/cayley.hpp"
#include "kcl/graph.hpp"

namespace kcl {

/// Directed graph over the vertex set of an underlying undirected graph.
/// Arcs may only run along edges of the underlying graph; a pair of
/// opposite arcs (a bidirected edge) is allowed and counts toward the
/// outdegree of both endpoints.
class Digraph {
  public:
    Digraph() = default;
    explicit Digraph(Graph underlying);

    const Graph& underlying() const { return g_; }
    int order() const { return g_.order(); }
    VertexSet out_neighbors(int v) const { return out_[static_cast<std::size_t>(v)]; }
    VertexSet in_neighbors(int v) const;
    bool has_arc(int v, int u) const { return out_[static_cast<std::size_t>(v)].contains(u); }
    int out_degree(int v) const { return out_[static_cast<std::size_t>(v)].count(); }

    void add_arc(int v, int u);

    /// Arcs as (tail, head), sorted lexicographically.
    std::vector<std::pair<int, int>> arcs() const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.g_ == b.g_ && a.out_ == b.out_;
    }

  private:
    Graph g_;
    std::vector<VertexSet> out_;
};

int max_outdegree(const Digraph& d);
std::map<int, int> outdegree_profile(const Digraph& d);

/// Exact edge accounting of an orientation against its underlying graph.
struct CoverageReport {
    long long covered = 0;       // edges with at least one arc
    long long bidirected = 0;    // edges with both arcs
    std::vector<std::pair<int, int>> uncovered;  // edges with no arc, sorted
    std::vector<int> accepted_directives;
    std::vector<int> rejected_directives;

    bool fully_covered() const { return uncovered.empty(); }
};

CoverageReport validate_orientation(const Digraph& d);

struct OrientationResult {
    Digraph digraph;
    CoverageReport coverage;
};

/// For each accepted directive j and every vertex v, adds the arc
/// v -> (v+j) mod n ("anticlockwise" is the increasing direction). A
/// directive is accepted only if {v, v+j} is an edge for every v;
/// otherwise it is rejected and recorded (or, in strict mode, an error).
OrientationResult orient_by_generators(const Graph& target, const std::vector<int>& directives,
                                       bool strict = false);

struct OrientationStrategy {
    enum class Kind { PaperLiteral, Completed, FullBidirect, Reps };
    Kind kind = Kind::PaperLiteral;
    std::vector<int> reps;  // only for Kind::Reps

    std::string name() const;
    static std::optional<OrientationStrategy> parse(const std::string& text);
};

/// The generator list a strategy prescribes for the (side) circulant of
/// a theorem instance. paper_literal follows the theorem text: T2/T4/C5
/// use 1..p (plus one representative per S2 inverse pair for C5), T3/T6/C7
/// use p,2p,...,n-p (plus S2 representatives for C7). completed appends
/// the canonical representative j < n/2 of every difference class the
/// paper-literal arcs leave uncovered. full_bidirect lists every residue,
/// which orient_by_generators trims to the connection set.
std::vector<int> strategy_directives(const Graph& side, TheoremId id, int n,
                                     const OrientationStrategy& strategy, const std::vector<int>& s2);

/// Partition of the reflection generators controlling cross-edge
/// direction: the edge {a, n+x} with b = (a+x) mod n is oriented
/// rotation -> reflection when b is in `out_set`, the other way when b
/// is in `in_set`.
struct CrossSplit {
    std::vector<int> out_set;
    std::vector<int> in_set;

    /// Alternates the sorted reflection list: even positions out, odd in.
    static CrossSplit default_for(const std::vector<int>& reflections);
};

OrientationResult orient_dihedral(const DihedralSpec& spec, const std::vector<int>& side_directives,
                                  const CrossSplit& split, bool strict = false);

/// Builds the strategy's orientation for a theorem instance: directly on
/// the circulant for T2/T3, composed with the default cross split for
/// the dihedral families.
OrientationResult build_strategy_orientation(const TheoremInstance& inst,
                                             const OrientationStrategy& strategy);

}  // namespace kcl

#endif  // KCL_ORIENTATION_HPP
