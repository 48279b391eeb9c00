// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KCL_CHOOSABILITY_HPP
#define KCL_CHOOSABILITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kcl/graph.hpp"
#include "kcl/list_coloring.hpp"

namespace kcl {

/// Exact maximum clique via branch and bound; returns a witness clique.
struct CliqueResult {
    int size = 0;
    VertexSet witness;
};
CliqueResult clique_number(const Graph& g);

/// Exact chromatic number: k-colorability decided by backtracking for
/// k = omega(g) upward; returns a witness coloring.
struct ChromaticResult {
    int chi = 0;
    Coloring coloring;
};
ChromaticResult chromatic_number(const Graph& g);

/// Exact decision with a witness coloring on success. Vertices are
/// processed smallest-remaining-list first; deterministic.
std::optional<Coloring> list_colorable(const Graph& g, const ListAssignment& L);

struct ChoosabilityVerdict {
    enum class Status { Choosable, NotChoosable, BudgetExceeded };
    Status status = Status::Choosable;
    std::optional<ListAssignment> bad_lists;  // present iff NotChoosable, re-verified
    unsigned long long assignments_checked = 0;  // canonical assignments reached
    unsigned long long nodes_expanded = 0;       // enumeration tree nodes visited
};

struct ChoosabilityOptions {
    unsigned long long budget_nodes = 100000000;  // enumeration node budget
    int threads = 0;        // 0 keeps the OpenMP default
    bool decompose = true;  // solve per connected component
    bool peel = true;       // drop vertices with f(v) > remaining degree
};

/// Decides whether every assignment of lists with |L(v)| = f(v) admits a
/// proper list coloring. Enumeration is over canonical assignments only
/// (colors from {0..sum f - 1}, renamed so they first appear in
/// increasing order), vertices in label order and lists in
/// colexicographic order; the first failing assignment is the
/// certificate. Results are independent of the thread count.
ChoosabilityVerdict is_f_choosable(const Graph& g, const std::vector<int>& f,
                                   const ChoosabilityOptions& opts = {});
ChoosabilityVerdict is_f_choosable(const Graph& g, int k, const ChoosabilityOptions& opts = {});

/// Single-threaded reference; produces exactly the same verdict,
/// certificate and counters as the parallel path.
ChoosabilityVerdict is_f_choosable_serial(const Graph& g, const std::vector<int>& f,
                                          const ChoosabilityOptions& opts = {});
ChoosabilityVerdict is_f_choosable_serial(const Graph& g, int k,
                                          const ChoosabilityOptions& opts = {});

struct ChoiceNumberResult {
    int lower = 1;  // certified: max(chi, highest refuted level + 1)
    int upper = 1;  // certified: lowest choosable level, else max degree + 1
    bool budget_limited = false;
    std::vector<std::pair<int, ChoosabilityVerdict::Status>> levels;
    std::optional<ListAssignment> refuting_lists;  // from the highest refuted level
    unsigned long long nodes_expanded = 0;

    bool exact() const { return lower == upper; }
};

/// Smallest k such that the graph is k-choosable, searched upward from
/// the chromatic number; budget exhaustion yields a certified interval.
ChoiceNumberResult choice_number(const Graph& g, const ChoosabilityOptions& opts = {});

/// Exhaustive search for induced odd cycles of length 5..max_hole in g
/// (holes) and in its complement (antiholes); empirical perfectness check.
struct OddHoleReport {
    bool clean = true;
    std::vector<int> cycle;  // witness hole, empty when clean
    bool in_complement = false;
};
OddHoleReport perfect_spot_check(const Graph& g, int max_hole);

}  // namespace kcl

#endif  // KCL_CHOOSABILITY_HPP
