// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KCL_KERNELS_HPP
#define KCL_KERNELS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kcl/orientation.hpp"

namespace kcl {

/// True iff k is a kernel of the subdigraph induced on `support`:
/// k is independent in the underlying graph and every vertex of
/// support \ k has an arc into k. Bidirected arcs absorb both ways but
/// still forbid co-membership through independence.
bool is_kernel(const Digraph& d, VertexSet support, VertexSet k);

/// Lexicographically least kernel of the subdigraph induced on
/// `support` (least under the bit-vector integer value, vertex 0 being
/// the least significant bit), or nullopt when no kernel exists.
std::optional<VertexSet> find_kernel(const Digraph& d, VertexSet support);

/// Every kernel of the induced subdigraph, sorted by mask value.
/// Exhaustive over 2^|support| subsets; |support| is capped at 20.
std::vector<VertexSet> all_kernels(const Digraph& d, VertexSet support);

struct KernelVerdict {
    enum class Status { KernelPerfect, Counterexample, BudgetExceeded };
    Status status = Status::KernelPerfect;
    std::optional<VertexSet> witness;  // kernel-free support, present iff Counterexample
    unsigned long long subsets_checked = 0;
};

struct KernelSweepOptions {
    int exhaustive_cap = 22;  // largest n for which the full sweep is allowed
    bool sample = false;
    unsigned long long sample_budget = 1000000;  // supports drawn in sampling mode
    std::uint64_t seed = 0;
    int threads = 0;  // 0 keeps the OpenMP default
};

/// Sweeps every nonempty support in increasing popcount order (mask
/// value breaking ties) and reports the first kernel-free one, or
/// KernelPerfect after all 2^n - 1 pass. Above the exhaustive cap the
/// sampling flag is required, and the verdict can then only be
/// Counterexample or BudgetExceeded. Witnesses are re-checked before
/// being reported. The parallel sweep returns exactly the serial answer.
KernelVerdict kernel_perfect(const Digraph& d, const KernelSweepOptions& opts = {});
KernelVerdict kernel_perfect_serial(const Digraph& d, const KernelSweepOptions& opts = {});

}  // namespace kcl

#endif  // KCL_KERNELS_HPP
