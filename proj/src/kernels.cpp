// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#include "kcl/kernels.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace kcl {

bool is_kernel(const Digraph& d, VertexSet support, VertexSet k) {
    if (!k.subset_of(support))
        throw std::invalid_argument("is_kernel: kernel candidate not contained in support");
    if (!support.subset_of(d.underlying().vertices()))
        throw std::invalid_argument("is_kernel: support exceeds vertex range");
    bool ok = true;
    for_each_vertex(k, [&](int v) {
        if (!(d.underlying().neighbors(v) & k).empty()) ok = false;
    });
    if (!ok) return false;
    for_each_vertex(support - k, [&](int v) {
        if ((d.out_neighbors(v) & k).empty()) ok = false;
    });
    return ok;
}

namespace {

struct KernelSearch {
    const std::vector<int>& verts;       // support members, ascending
    std::vector<std::uint64_t> adj;      // underlying adjacency within support, by position
    std::vector<std::uint64_t> out;      // arcs within support, by position
    std::uint64_t found = 0;
    bool success = false;

    // Decides positions from high to low, excluded branch first, so the
    // first complete kernel is the minimum under the mask-value order.
    bool dfs(int i, std::uint64_t kernel, std::uint64_t pending) {
        if (i < 0) {
            if (pending != 0) return false;
            found = kernel;
            return success = true;
        }
        const std::uint64_t below = (std::uint64_t{1} << i) - 1;
        const std::uint64_t bit = std::uint64_t{1} << i;

        // v stays out: it needs an absorber among current or future members
        if ((out[static_cast<std::size_t>(i)] & (kernel | below)) != 0) {
            const bool absorbed = (out[static_cast<std::size_t>(i)] & kernel) != 0;
            if (feasible(pending | (absorbed ? 0 : bit), kernel, below) &&
                dfs(i - 1, kernel, absorbed ? pending : (pending | bit)))
                return true;
        }
        // v joins the kernel: independence against chosen members
        if ((adj[static_cast<std::size_t>(i)] & kernel) == 0) {
            std::uint64_t still = 0;
            for (std::uint64_t b = pending; b != 0; b &= b - 1) {
                const int p = std::countr_zero(b);
                if ((out[static_cast<std::size_t>(p)] & bit) == 0) still |= std::uint64_t{1} << p;
            }
            if (feasible(still, kernel | bit, below) && dfs(i - 1, kernel | bit, still)) return true;
        }
        return false;
    }

    bool feasible(std::uint64_t pending, std::uint64_t kernel, std::uint64_t below) const {
        for (std::uint64_t b = pending; b != 0; b &= b - 1) {
            const int p = std::countr_zero(b);
            if ((out[static_cast<std::size_t>(p)] & (kernel | below)) == 0) return false;
        }
        return true;
    }
};

}  // namespace

std::optional<VertexSet> find_kernel(const Digraph& d, VertexSet support) {
    if (support.empty()) throw std::invalid_argument("find_kernel: empty support");
    if (!support.subset_of(d.underlying().vertices()))
        throw std::invalid_argument("find_kernel: support exceeds vertex range");

    const std::vector<int> verts = support.to_vector();
    const int m = static_cast<int>(verts.size());
    std::vector<int> pos(64, -1);
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;

    KernelSearch s{verts, {}, {}};
    s.adj.assign(static_cast<std::size_t>(m), 0);
    s.out.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        const int v = verts[static_cast<std::size_t>(i)];
        for_each_vertex(d.underlying().neighbors(v) & support, [&](int u) {
            s.adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << pos[static_cast<std::size_t>(u)];
        });
        for_each_vertex(d.out_neighbors(v) & support, [&](int u) {
            s.out[static_cast<std::size_t>(i)] |= std::uint64_t{1} << pos[static_cast<std::size_t>(u)];
        });
    }

    if (!s.dfs(m - 1, 0, 0)) return std::nullopt;

    VertexSet kernel;
    for (int i = 0; i < m; ++i)
        if ((s.found >> i) & 1u) kernel.add(verts[static_cast<std::size_t>(i)]);
    return kernel;
}

std::vector<VertexSet> all_kernels(const Digraph& d, VertexSet support) {
    if (support.empty()) throw std::invalid_argument("all_kernels: empty support");
    if (support.count() > 20)
        throw std::invalid_argument("all_kernels: support larger than the 20-vertex cap");
    std::vector<VertexSet> out;
    // iterate all subsets of the support mask, ascending by construction
    const std::uint64_t full = support.bits;
    std::uint64_t sub = 0;
    do {
        sub = (sub - full) & full;  // next subset in increasing mask order
        if (sub != 0 && is_kernel(d, support, VertexSet(sub))) out.emplace_back(sub);
    } while (sub != full);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
    return r;
}

/// Masks of `n`-bit words with exactly `pc` bits set, ascending.
std::vector<std::uint64_t> masks_of_popcount(int n, int pc) {
    std::vector<std::uint64_t> out;
    if (pc >= 64) {
        out.push_back(~std::uint64_t{0});
        return out;
    }
    out.reserve(binomial(n, pc));
    std::uint64_t v = (std::uint64_t{1} << pc) - 1;
    const std::uint64_t limit = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    while (v <= limit) {
        out.push_back(v);
        if (v == 0) break;
        const std::uint64_t t = v | (v - 1);  // Gosper's hack
        const std::uint64_t next = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
        if (next <= v) break;
        v = next;
    }
    return out;
}

KernelVerdict sampled_sweep(const Digraph& d, const KernelSweepOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    const int n = d.order();
    const std::uint64_t limit = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    KernelVerdict verdict;
    for (unsigned long long i = 0; i < opts.sample_budget; ++i) {
        const std::uint64_t mask = rng() & limit;
        if (mask == 0) continue;
        ++verdict.subsets_checked;
        const VertexSet support(mask);
        if (!find_kernel(d, support).has_value()) {
            if (find_kernel(d, support).has_value())
                throw std::logic_error("kernel_perfect: witness failed re-check");
            verdict.status = KernelVerdict::Status::Counterexample;
            verdict.witness = support;
            return verdict;
        }
    }
    verdict.status = KernelVerdict::Status::BudgetExceeded;
    return verdict;
}

void require_within_cap(const Digraph& d, const KernelSweepOptions& opts) {
    if (d.order() > opts.exhaustive_cap && !opts.sample)
        throw std::invalid_argument("kernel_perfect: n=" + std::to_string(d.order()) +
                                    " exceeds the exhaustive cap of " +
                                    std::to_string(opts.exhaustive_cap) +
                                    "; enable sampling to proceed");
}

KernelVerdict finish_counterexample(const Digraph& d, VertexSet witness,
                                    unsigned long long checked) {
    if (find_kernel(d, witness).has_value())
        throw std::logic_error("kernel_perfect: witness failed re-check");
    KernelVerdict v;
    v.status = KernelVerdict::Status::Counterexample;
    v.witness = witness;
    v.subsets_checked = checked;
    return v;
}

}  // namespace

KernelVerdict kernel_perfect_serial(const Digraph& d, const KernelSweepOptions& opts) {
    require_within_cap(d, opts);
    if (opts.sample) return sampled_sweep(d, opts);

    const int n = d.order();
    unsigned long long checked = 0;
    for (int pc = 1; pc <= n; ++pc) {
        for (std::uint64_t mask : masks_of_popcount(n, pc)) {
            ++checked;
            if (!find_kernel(d, VertexSet(mask)).has_value())
                return finish_counterexample(d, VertexSet(mask), checked);
        }
    }
    KernelVerdict v;
    v.status = KernelVerdict::Status::KernelPerfect;
    v.subsets_checked = checked;
    return v;
}

KernelVerdict kernel_perfect(const Digraph& d, const KernelSweepOptions& opts) {
    require_within_cap(d, opts);
    if (opts.sample) return sampled_sweep(d, opts);

#if !defined(_OPENMP)
    return kernel_perfect_serial(d, opts);
#else
    const int n = d.order();
    if (n <= 12) return kernel_perfect_serial(d, opts);

    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
    unsigned long long checked = 0;
    for (int pc = 1; pc <= n; ++pc) {
        const std::vector<std::uint64_t> masks = masks_of_popcount(n, pc);
        const long long count = static_cast<long long>(masks.size());
        long long best = count;  // first kernel-free index within this popcount block

#pragma omp parallel for schedule(dynamic, 256) num_threads(threads)
        for (long long i = 0; i < count; ++i) {
            long long current;
#pragma omp atomic read
            current = best;
            if (i > current) continue;  // already beaten by an earlier index
            if (!find_kernel(d, VertexSet(masks[static_cast<std::size_t>(i)])).has_value()) {
#pragma omp critical
                best = std::min(best, i);
            }
        }

        if (best < count)
            return finish_counterexample(d, VertexSet(masks[static_cast<std::size_t>(best)]),
                                         checked + static_cast<unsigned long long>(best) + 1);
        checked += static_cast<unsigned long long>(count);
    }
    KernelVerdict v;
    v.status = KernelVerdict::Status::KernelPerfect;
    v.subsets_checked = checked;
    return v;
#endif
}

}  // namespace kcl
