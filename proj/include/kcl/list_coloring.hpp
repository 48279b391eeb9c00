// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KCL_LIST_COLORING_HPP
#define KCL_LIST_COLORING_HPP

#include <vector>

#include "kcl/kernels.hpp"

namespace kcl {

/// Per-vertex finite color lists; colors are small nonnegative integers.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    static ListAssignment uniform(int n, std::vector<int> colors);
    int size(int v) const { return static_cast<int>(lists[static_cast<std::size_t>(v)].size()); }
    /// Sorts lists, drops duplicates, rejects empty lists and negative colors.
    void normalize();
};

struct Coloring {
    std::vector<int> colors;  // -1 marks an unassigned vertex

    bool complete() const;
};

struct GalvinResult {
    bool success = false;
    Coloring coloring;                 // filled on success
    VertexSet missing_kernel_support;  // the U with no kernel, on failure
    int failed_color = -1;             // the color being placed when U had no kernel
};

/// Kernel-driven list coloring: repeatedly take the smallest color c
/// still on an uncolored list, find a kernel of the subdigraph induced
/// on the uncolored vertices holding c, color it c, and delete c from
/// the other lists in that set. Requires |L(v)| >= outdegree(v)+1 for
/// all v (violations are errors, not failure certificates). When some
/// round's support has no kernel the result is a failure certificate
/// naming that support, which witnesses that d is not kernel-perfect.
GalvinResult galvin_color(const Digraph& d, const ListAssignment& L);

/// True iff col is complete, picks every color from the vertex's list,
/// and no edge is monochromatic. Incomplete colorings are an error.
bool verify_list_coloring(const Graph& g, const ListAssignment& L, const Coloring& col);

/// max outdegree + 1. The bound is meaningful for ch(G) only when the
/// orientation is certified kernel-perfect; reports track that tag.
int lemma1_bound(const Digraph& d);

}  // namespace kcl

#endif  // KCL_LIST_COLORING_HPP
