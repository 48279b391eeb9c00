// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#include "kcl/choosability.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace kcl {

// ---------------------------------------------------------------------------
// clique number
// ---------------------------------------------------------------------------

namespace {

struct CliqueSearch {
    const Graph& g;
    int best = 0;
    VertexSet best_set;

    void expand(VertexSet r, VertexSet p) {
        if (p.empty()) {
            if (r.count() > best) {
                best = r.count();
                best_set = r;
            }
            return;
        }
        while (!p.empty()) {
            if (r.count() + p.count() <= best) return;
            const int v = p.lowest();
            p.remove(v);
            VertexSet r2 = r;
            r2.add(v);
            expand(r2, p & g.neighbors(v));
        }
    }
};

}  // namespace

CliqueResult clique_number(const Graph& g) {
    CliqueSearch s{g, 0, VertexSet{}};
    s.expand(VertexSet{}, g.vertices());
    return {s.best, s.best_set};
}

// ---------------------------------------------------------------------------
// chromatic number
// ---------------------------------------------------------------------------

namespace {

struct KColoring {
    const Graph& g;
    int k;
    std::vector<int> color;

    explicit KColoring(const Graph& graph, int colors)
        : g(graph), k(colors), color(static_cast<std::size_t>(graph.order()), -1) {}

    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (color[static_cast<std::size_t>(v)] != -1) continue;
            std::uint64_t seen = 0;
            for_each_vertex(g.neighbors(v), [&](int u) {
                const int c = color[static_cast<std::size_t>(u)];
                if (c >= 0) seen |= std::uint64_t{1} << c;
            });
            const int sat = std::popcount(seen);
            const int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(int colored, int used) {
        if (colored == g.order()) return true;
        const int v = pick();
        std::uint64_t forbidden = 0;
        for_each_vertex(g.neighbors(v), [&](int u) {
            const int c = color[static_cast<std::size_t>(u)];
            if (c >= 0) forbidden |= std::uint64_t{1} << c;
        });
        const int limit = std::min(k - 1, used);  // at most one brand-new color
        for (int c = 0; c <= limit; ++c) {
            if ((forbidden >> c) & 1u) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (solve(colored + 1, std::max(used, c + 1))) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g) {
    const int lo = clique_number(g).size;
    for (int k = std::max(1, lo);; ++k) {
        KColoring search(g, k);
        if (search.solve(0, 0)) {
            ChromaticResult res;
            res.chi = k;
            res.coloring.colors = search.color;
            return res;
        }
    }
}

// ---------------------------------------------------------------------------
// list colorability (public, general colors)
// ---------------------------------------------------------------------------

std::optional<Coloring> list_colorable(const Graph& g, const ListAssignment& L) {
    const int n = g.order();
    if (static_cast<int>(L.lists.size()) != n)
        throw std::invalid_argument("list_colorable: list count differs from vertex count");
    ListAssignment norm = L;
    norm.normalize();

    std::vector<int> assigned(static_cast<std::size_t>(n), -1);
    std::vector<char> done(static_cast<std::size_t>(n), 0);

    // deterministic backtracking, smallest remaining list first
    auto feasible = [&](int v, int c) {
        bool ok = true;
        for_each_vertex(g.neighbors(v), [&](int u) {
            if (assigned[static_cast<std::size_t>(u)] == c) ok = false;
        });
        return ok;
    };

    std::function<bool(int)> rec = [&](int count) -> bool {
        if (count == n) return true;
        int best = -1, best_avail = -1;
        for (int v = 0; v < n; ++v) {
            if (done[static_cast<std::size_t>(v)]) continue;
            int avail = 0;
            for (int c : norm.lists[static_cast<std::size_t>(v)])
                if (feasible(v, c)) ++avail;
            if (avail == 0) return false;  // dead vertex
            if (best == -1 || avail < best_avail) {
                best = v;
                best_avail = avail;
            }
        }
        done[static_cast<std::size_t>(best)] = 1;
        for (int c : norm.lists[static_cast<std::size_t>(best)]) {
            if (!feasible(best, c)) continue;
            assigned[static_cast<std::size_t>(best)] = c;
            if (rec(count + 1)) return true;
            assigned[static_cast<std::size_t>(best)] = -1;
        }
        done[static_cast<std::size_t>(best)] = 0;
        return false;
    };

    if (!rec(0)) return std::nullopt;
    Coloring col;
    col.colors = assigned;
    return col;
}

// ---------------------------------------------------------------------------
// canonical list-assignment enumeration
// ---------------------------------------------------------------------------

namespace {

using Color = std::uint8_t;
constexpr int kColorCap = 48;       // canonical colors tracked exactly
constexpr int kPoolCap = 20000;     // stored colorings per subtree
constexpr std::uint64_t kCancelCheck = 4096;

/// Candidate lists for one (s, f) state: f bytes per candidate, ordered
/// by fresh-color count t (blocks ascending), colex within each block,
/// which is exactly global colex order.
struct CandidateSet {
    int width = 0;
    int count = 0;
    std::vector<Color> data;
    std::vector<int> fresh;  // per candidate: number of colors >= s
    bool truncated = false;  // blocks beyond kColorCap were dropped

    const Color* at(int i) const { return data.data() + static_cast<std::size_t>(i) * width; }
};

void combos_colex(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k == 0) {
        static const std::vector<int> empty;
        fn(empty);
        return;
    }
    if (k > m) return;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    for (;;) {
        fn(c);
        int i = 0;
        while (i < k) {
            const int cap = (i + 1 < k) ? c[static_cast<std::size_t>(i + 1)] : m;
            if (c[static_cast<std::size_t>(i)] + 1 < cap) break;
            ++i;
        }
        if (i == k) return;
        ++c[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j;
    }
}

CandidateSet make_candidates(int s, int f, int universe) {
    CandidateSet cs;
    cs.width = f;
    const int t_universe = std::min(f, universe - s);
    const int t_max = std::min(t_universe, kColorCap - s);
    cs.truncated = t_max < t_universe;
    for (int t = 0; t <= t_max; ++t) {
        combos_colex(s, f - t, [&](const std::vector<int>& old) {
            for (int x : old) cs.data.push_back(static_cast<Color>(x));
            for (int j = 0; j < t; ++j) cs.data.push_back(static_cast<Color>(s + j));
            cs.fresh.push_back(t);
            ++cs.count;
        });
    }
    return cs;
}

/// Per-component enumeration context shared (read-only) by all subtrees.
struct ComponentContext {
    Graph graph;              // component, vertices 0..m-1
    std::vector<int> f;       // list sizes per component vertex
    int m = 0;
    int universe = 0;         // sum of f
    int fmax = 0;
    // candidates[s] per distinct f value
    std::vector<std::map<int, CandidateSet>> candidates;

    void build() {
        m = graph.order();
        universe = 0;
        fmax = 0;
        for (int x : f) {
            universe += x;
            fmax = std::max(fmax, x);
        }
        const int s_hi = std::min(universe, kColorCap);
        candidates.assign(static_cast<std::size_t>(s_hi + 1), {});
        for (int s = 0; s <= s_hi; ++s)
            for (int x : f)
                if (!candidates[static_cast<std::size_t>(s)].count(x))
                    candidates[static_cast<std::size_t>(s)].emplace(x, make_candidates(s, x, universe));
    }

    const CandidateSet& cand(int s, int fv) const {
        return candidates[static_cast<std::size_t>(s)].at(fv);
    }
};

/// Leaf test: proper coloring from flat lists; colors < kColorCap.
struct FlatColorer {
    const ComponentContext& ctx;
    std::vector<std::uint64_t> avail;  // per vertex: list mask minus neighbor colors
    std::vector<Color> result;

    explicit FlatColorer(const ComponentContext& c)
        : ctx(c),
          avail(static_cast<std::size_t>(c.m)),
          result(static_cast<std::size_t>(c.m)) {}

    bool solve(const Color* lists) {
        const int m = ctx.m;
        for (int v = 0; v < m; ++v) {
            std::uint64_t mask = 0;
            const Color* row = lists + static_cast<std::size_t>(v) * ctx.fmax;
            for (int i = 0; i < ctx.f[static_cast<std::size_t>(v)]; ++i)
                mask |= std::uint64_t{1} << row[i];
            avail[static_cast<std::size_t>(v)] = mask;
        }
        std::uint64_t undecided = ctx.graph.vertices().bits;
        return rec(undecided);
    }

    bool rec(std::uint64_t undecided) {
        if (undecided == 0) return true;
        // most-constrained vertex
        int best = -1, best_n = 65;
        for (std::uint64_t b = undecided; b != 0; b &= b - 1) {
            const int v = std::countr_zero(b);
            const int cnt = std::popcount(avail[static_cast<std::size_t>(v)]);
            if (cnt == 0) return false;
            if (cnt < best_n) {
                best = v;
                best_n = cnt;
            }
        }
        const std::uint64_t rest = undecided & ~(std::uint64_t{1} << best);
        const std::uint64_t nbrs = ctx.graph.neighbors(best).bits & rest;
        for (std::uint64_t cm = avail[static_cast<std::size_t>(best)]; cm != 0; cm &= cm - 1) {
            const int c = std::countr_zero(cm);
            std::uint64_t touched = 0;
            bool dead = false;
            for (std::uint64_t b = nbrs; b != 0; b &= b - 1) {
                const int u = std::countr_zero(b);
                if (avail[static_cast<std::size_t>(u)] & (std::uint64_t{1} << c)) {
                    avail[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << c);
                    touched |= std::uint64_t{1} << u;
                    if (avail[static_cast<std::size_t>(u)] == 0) dead = true;
                }
            }
            if (!dead) {
                result[static_cast<std::size_t>(best)] = static_cast<Color>(c);
                if (rec(rest)) return true;
            }
            for (std::uint64_t b = touched; b != 0; b &= b - 1)
                avail[static_cast<std::size_t>(std::countr_zero(b))] |= std::uint64_t{1} << c;
        }
        return false;
    }
};

struct SubtreeResult {
    unsigned long long nodes = 0;
    unsigned long long leaves = 0;
    bool budget_hit = false;
    bool truncated = false;
    bool found_bad = false;
    bool aborted = false;  // cancelled; data not used by the reduction
    unsigned long long bad_at_node = 0;   // node count when the failure surfaced
    unsigned long long bad_at_leaf = 0;
    std::vector<Color> bad_lists;         // m * fmax
};

struct Prefix {
    std::vector<Color> lists;  // depth * fmax
    int depth = 0;
    int s = 0;
};

/// One canonical subtree, own coloring pool. Candidate order plus the
/// first-failure rule make the result independent of pool contents.
struct SubtreeRunner {
    const ComponentContext& ctx;
    unsigned long long cap;
    const std::atomic<long long>* cancel_before;  // abort when an earlier subtree terminated
    long long my_index;

    SubtreeResult res;
    std::vector<Color> lists;
    std::vector<Color> pool;  // pool_count * m
    int pool_count = 0;
    std::vector<std::vector<int>> compat;
    std::vector<int> seen;
    FlatColorer colorer;

    SubtreeRunner(const ComponentContext& c, unsigned long long budget,
                  const std::atomic<long long>* cancel, long long index)
        : ctx(c),
          cap(budget),
          cancel_before(cancel),
          my_index(index),
          lists(static_cast<std::size_t>(c.m * std::max(1, c.fmax))),
          compat(static_cast<std::size_t>(c.m + 1)),
          seen(static_cast<std::size_t>(c.m + 1), 0),
          colorer(c) {}

    void run(const Prefix& p) {
        std::copy(p.lists.begin(), p.lists.end(), lists.begin());
        compat[static_cast<std::size_t>(p.depth)].clear();
        seen[static_cast<std::size_t>(p.depth)] = 0;
        dfs(p.depth, p.s);
    }

    bool should_abort() {
        if (cancel_before == nullptr) return false;
        if ((res.nodes & (kCancelCheck - 1)) != 0) return false;
        return cancel_before->load(std::memory_order_relaxed) < my_index;
    }

    void absorb_new(int i) {
        auto& c = compat[static_cast<std::size_t>(i)];
        for (int idx = seen[static_cast<std::size_t>(i)]; idx < pool_count; ++idx) {
            const Color* kappa = pool.data() + static_cast<std::size_t>(idx) * ctx.m;
            bool ok = true;
            for (int v = 0; ok && v < i; ++v) {
                const Color* row = lists.data() + static_cast<std::size_t>(v) * ctx.fmax;
                bool in = false;
                for (int j = 0; j < ctx.f[static_cast<std::size_t>(v)]; ++j)
                    if (row[j] == kappa[v]) in = true;
                ok = in;
            }
            if (ok) c.push_back(idx);
        }
        seen[static_cast<std::size_t>(i)] = pool_count;
    }

    // returns true to unwind (bad found, budget, or cancellation)
    bool dfs(int i, int s) {
        if (res.nodes >= cap) {
            res.budget_hit = true;
            return true;
        }
        ++res.nodes;
        if (should_abort()) {
            res.aborted = true;
            return true;
        }
        if (i == ctx.m) {
            ++res.leaves;
            absorb_new(i);
            if (!compat[static_cast<std::size_t>(i)].empty()) return false;  // covered
            if (colorer.solve(lists.data())) {
                if (pool_count < kPoolCap) {
                    pool.insert(pool.end(), colorer.result.begin(), colorer.result.end());
                    ++pool_count;
                }
                return false;
            }
            res.found_bad = true;
            res.bad_at_node = res.nodes;
            res.bad_at_leaf = res.leaves;
            res.bad_lists = lists;
            return true;
        }
        const CandidateSet& cs = ctx.cand(s, ctx.f[static_cast<std::size_t>(i)]);
        if (cs.truncated) res.truncated = true;
        Color* row = lists.data() + static_cast<std::size_t>(i) * ctx.fmax;
        for (int c = 0; c < cs.count; ++c) {
            absorb_new(i);
            const Color* cand = cs.at(c);
            std::copy(cand, cand + cs.width, row);
            auto& child = compat[static_cast<std::size_t>(i + 1)];
            child.clear();
            for (int idx : compat[static_cast<std::size_t>(i)]) {
                const Color kv = pool[static_cast<std::size_t>(idx) * ctx.m + static_cast<std::size_t>(i)];
                bool in = false;
                for (int j = 0; j < cs.width; ++j)
                    if (cand[j] == kv) in = true;
                if (in) child.push_back(idx);
            }
            seen[static_cast<std::size_t>(i + 1)] = pool_count;
            if (dfs(i + 1, s + cs.fresh[static_cast<std::size_t>(c)])) return true;
        }
        return false;
    }
};

std::vector<Prefix> build_frontier(const ComponentContext& ctx, int target, int depth_cap) {
    std::vector<Prefix> frontier;
    Prefix root;
    root.depth = 0;
    root.s = 0;
    frontier.push_back(root);
    int depth = 0;
    while (static_cast<int>(frontier.size()) < target && depth < std::min(ctx.m, depth_cap)) {
        std::vector<Prefix> next;
        for (const Prefix& p : frontier) {
            const CandidateSet& cs = ctx.cand(p.s, ctx.f[static_cast<std::size_t>(depth)]);
            for (int c = 0; c < cs.count; ++c) {
                Prefix q;
                q.depth = depth + 1;
                q.s = p.s + cs.fresh[static_cast<std::size_t>(c)];
                q.lists = p.lists;
                q.lists.resize(static_cast<std::size_t>(q.depth) * ctx.fmax, 0);
                const Color* cand = cs.at(c);
                std::copy(cand, cand + cs.width,
                          q.lists.begin() + static_cast<std::size_t>(depth) * ctx.fmax);
                next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
        ++depth;
    }
    return frontier;
}

struct ComponentOutcome {
    ChoosabilityVerdict::Status status = ChoosabilityVerdict::Status::Choosable;
    std::vector<Color> bad_lists;  // m * fmax when NotChoosable
    int fmax = 0;
    unsigned long long nodes = 0;
    unsigned long long leaves = 0;
};

ComponentOutcome run_component(const ComponentContext& ctx, unsigned long long budget, int threads) {
    ComponentOutcome out;
    out.fmax = ctx.fmax;
    if (ctx.m == 0) return out;

    const int target = std::max(96, 24 * std::max(1, threads));
    const std::vector<Prefix> frontier = build_frontier(ctx, target, 4);
    const long long count = static_cast<long long>(frontier.size());
    std::vector<SubtreeResult> results(static_cast<std::size_t>(count));
    std::atomic<long long> terminal{count};  // earliest index that found bad / hit budget

    const auto run_serially = [&]() {
        SubtreeRunner runner(ctx, budget, nullptr, 0);
        for (long long j = 0; j < count; ++j) {
            runner.res = SubtreeResult{};
            runner.pool.clear();
            runner.pool_count = 0;
            runner.run(frontier[static_cast<std::size_t>(j)]);
            results[static_cast<std::size_t>(j)] = runner.res;
            if (runner.res.found_bad || runner.res.budget_hit) break;  // reduction stops here
        }
    };

#if defined(_OPENMP)
    if (threads != 1 && count > 1) {
        const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt)
        {
            SubtreeRunner runner(ctx, budget, &terminal, 0);
#pragma omp for schedule(dynamic, 1)
            for (long long j = 0; j < count; ++j) {
                if (terminal.load(std::memory_order_relaxed) < j) {
                    results[static_cast<std::size_t>(j)].aborted = true;
                    continue;
                }
                runner.res = SubtreeResult{};
                runner.pool.clear();
                runner.pool_count = 0;
                runner.my_index = j;
                runner.run(frontier[static_cast<std::size_t>(j)]);
                if ((runner.res.found_bad || runner.res.budget_hit) && !runner.res.aborted) {
                    long long cur = terminal.load();
                    while (j < cur && !terminal.compare_exchange_weak(cur, j)) {
                    }
                }
                results[static_cast<std::size_t>(j)] = runner.res;
            }
        }
    } else {
        run_serially();
    }
#else
    run_serially();
#endif

    // serial-equivalent reduction over subtrees in enumeration order
    unsigned long long cum = 0, leaves = 0;
    bool truncated = false;
    for (long long j = 0; j < count; ++j) {
        const SubtreeResult& r = results[static_cast<std::size_t>(j)];
        if (r.aborted) break;  // an earlier subtree already terminated the walk
        const unsigned long long horizon = budget - cum;
        if (r.found_bad && r.bad_at_node <= horizon) {
            out.status = ChoosabilityVerdict::Status::NotChoosable;
            out.bad_lists = r.bad_lists;
            out.nodes = cum + r.bad_at_node;
            out.leaves = leaves + r.bad_at_leaf;
            return out;
        }
        if (r.budget_hit || r.found_bad || r.nodes > horizon) {
            // r.found_bad here means the failure lies beyond the serial
            // horizon, so the sequential sweep stops at the budget first
            out.status = ChoosabilityVerdict::Status::BudgetExceeded;
            out.nodes = budget;
            out.leaves = leaves;
            return out;
        }
        cum += r.nodes;
        leaves += r.leaves;
        truncated = truncated || r.truncated;
    }
    out.status = truncated ? ChoosabilityVerdict::Status::BudgetExceeded
                           : ChoosabilityVerdict::Status::Choosable;
    out.nodes = cum;
    out.leaves = leaves;
    return out;
}

/// Peels vertices whose list size exceeds their remaining degree; such a
/// vertex can always be colored last, so choosability is unchanged.
VertexSet peel_core(const Graph& g, const std::vector<int>& f) {
    VertexSet core = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.order(); ++v) {
            if (!core.contains(v)) continue;
            if (f[static_cast<std::size_t>(v)] > (g.neighbors(v) & core).count()) {
                core.remove(v);
                changed = true;
            }
        }
    }
    return core;
}

}  // namespace

ChoosabilityVerdict is_f_choosable(const Graph& g, const std::vector<int>& f,
                                   const ChoosabilityOptions& opts) {
    const int n = g.order();
    if (static_cast<int>(f.size()) != n)
        throw std::invalid_argument("is_f_choosable: f size differs from vertex count");
    long long total = 0;
    for (int x : f) {
        if (x < 1) throw std::invalid_argument("is_f_choosable: list sizes must be >= 1");
        total += x;
    }
    if (total > 255)
        throw std::invalid_argument("is_f_choosable: color universe exceeds 255");

    ChoosabilityVerdict verdict;

    const VertexSet core = opts.peel ? peel_core(g, f) : g.vertices();
    if (core.empty()) return verdict;  // greedy order colors everything

    const InducedGraph core_graph = induced(g, core);
    std::vector<VertexSet> comps;
    if (opts.decompose)
        comps = components(core_graph.graph);
    else
        comps = {core_graph.graph.vertices()};

    unsigned long long used = 0;
    bool budget_seen = false;
    for (const VertexSet& comp : comps) {
        const InducedGraph sub = induced(core_graph.graph, comp);
        ComponentContext ctx;
        ctx.graph = sub.graph;
        ctx.f.reserve(sub.labels.size());
        for (int v : sub.labels)
            ctx.f.push_back(f[static_cast<std::size_t>(core_graph.labels[static_cast<std::size_t>(v)])]);
        ctx.build();

        const unsigned long long remaining =
            opts.budget_nodes > used ? opts.budget_nodes - used : 0;
        const ComponentOutcome res = run_component(ctx, remaining, opts.threads);
        used += res.nodes;
        verdict.nodes_expanded += res.nodes;
        verdict.assignments_checked += res.leaves;

        if (res.status == ChoosabilityVerdict::Status::NotChoosable) {
            // reconstitute a whole-graph certificate: the failing component
            // keeps its lists, everything else gets {0..f(v)-1}
            ListAssignment bad;
            bad.lists.assign(static_cast<std::size_t>(n), {});
            for (int v = 0; v < n; ++v)
                for (int c = 0; c < f[static_cast<std::size_t>(v)]; ++c)
                    bad.lists[static_cast<std::size_t>(v)].push_back(c);
            for (std::size_t i = 0; i < sub.labels.size(); ++i) {
                const int orig =
                    core_graph.labels[static_cast<std::size_t>(sub.labels[i])];
                auto& lst = bad.lists[static_cast<std::size_t>(orig)];
                lst.clear();
                for (int j = 0; j < ctx.f[i]; ++j)
                    lst.push_back(res.bad_lists[i * static_cast<std::size_t>(res.fmax) +
                                                static_cast<std::size_t>(j)]);
            }
            // canonical renaming: colors first appear in increasing order
            std::map<int, int> rename;
            for (auto& lst : bad.lists) {
                std::sort(lst.begin(), lst.end());
                for (int c : lst)
                    if (!rename.count(c)) rename.emplace(c, static_cast<int>(rename.size()));
            }
            for (auto& lst : bad.lists) {
                for (int& c : lst) c = rename.at(c);
                std::sort(lst.begin(), lst.end());
            }
            if (list_colorable(g, bad).has_value())
                throw std::logic_error("is_f_choosable: certificate failed re-verification");
            verdict.status = ChoosabilityVerdict::Status::NotChoosable;
            verdict.bad_lists = bad;
            return verdict;
        }
        if (res.status == ChoosabilityVerdict::Status::BudgetExceeded) budget_seen = true;
    }
    verdict.status = budget_seen ? ChoosabilityVerdict::Status::BudgetExceeded
                                 : ChoosabilityVerdict::Status::Choosable;
    return verdict;
}

ChoosabilityVerdict is_f_choosable(const Graph& g, int k, const ChoosabilityOptions& opts) {
    return is_f_choosable(g, std::vector<int>(static_cast<std::size_t>(g.order()), k), opts);
}

ChoosabilityVerdict is_f_choosable_serial(const Graph& g, const std::vector<int>& f,
                                          const ChoosabilityOptions& opts) {
    ChoosabilityOptions serial = opts;
    serial.threads = 1;
    return is_f_choosable(g, f, serial);
}

ChoosabilityVerdict is_f_choosable_serial(const Graph& g, int k, const ChoosabilityOptions& opts) {
    return is_f_choosable_serial(g, std::vector<int>(static_cast<std::size_t>(g.order()), k), opts);
}

ChoiceNumberResult choice_number(const Graph& g, const ChoosabilityOptions& opts) {
    ChoiceNumberResult res;
    const ChromaticResult chi = chromatic_number(g);
    res.lower = chi.chi;
    res.upper = g.max_degree() + 1;  // greedy bound; peeling certifies it instantly
    if (res.upper < res.lower) res.upper = res.lower;

    unsigned long long used = 0;
    for (int k = res.lower; k <= res.upper; ++k) {
        ChoosabilityOptions level = opts;
        level.budget_nodes = opts.budget_nodes > used ? opts.budget_nodes - used : 0;
        const ChoosabilityVerdict v = is_f_choosable(g, k, level);
        used += v.nodes_expanded;
        res.nodes_expanded += v.nodes_expanded;
        res.levels.emplace_back(k, v.status);
        if (v.status == ChoosabilityVerdict::Status::Choosable) {
            res.upper = k;
            return res;
        }
        if (v.status == ChoosabilityVerdict::Status::NotChoosable) {
            res.lower = k + 1;
            res.refuting_lists = v.bad_lists;
            continue;
        }
        res.budget_limited = true;
        return res;
    }
    return res;
}

// ---------------------------------------------------------------------------
// odd hole / antihole spot check
// ---------------------------------------------------------------------------

namespace {

bool find_odd_hole(const Graph& g, int max_hole, std::vector<int>& cycle) {
    const int n = g.order();
    std::vector<int> path;
    // path[0]=a is the smallest cycle vertex; extension vertices must not
    // be adjacent to any interior vertex, and closing requires the second
    // vertex to be smaller than the last (kills the reversed duplicate).
    std::function<bool(void)> extend = [&]() -> bool {
        const int last = path.back();
        const int len = static_cast<int>(path.size());
        VertexSet forbidden;  // interior vertices path[1..len-2]
        for (int i = 1; i + 1 < len; ++i) forbidden = forbidden | g.neighbors(path[static_cast<std::size_t>(i)]);
        VertexSet onpath;
        for (int v : path) onpath.add(v);
        bool found = false;
        for_each_vertex(g.neighbors(last), [&](int w) {
            if (found || w <= path[0] || onpath.contains(w)) return;
            if (forbidden.contains(w)) return;
            if (g.has_edge(w, path[0])) {
                const int cyclen = len + 1;
                if (cyclen >= 5 && cyclen % 2 == 1 && path[1] < w) {
                    path.push_back(w);
                    cycle = path;
                    found = true;
                    path.pop_back();
                }
                return;  // w would chord any longer cycle
            }
            if (len + 1 < max_hole) {
                path.push_back(w);
                if (extend()) found = true;
                path.pop_back();
            }
        });
        return found;
    };

    for (int a = 0; a < n; ++a) {
        path = {a};
        bool found = false;
        for_each_vertex(g.neighbors(a), [&](int b) {
            if (found || b <= a) return;
            path.push_back(b);
            if (extend()) found = true;
            path.pop_back();
        });
        if (found) return true;
    }
    return false;
}

}  // namespace

OddHoleReport perfect_spot_check(const Graph& g, int max_hole) {
    if (max_hole < 5) throw std::invalid_argument("perfect_spot_check: max_hole must be >= 5");
    OddHoleReport rep;
    if (find_odd_hole(g, max_hole, rep.cycle)) {
        rep.clean = false;
        rep.in_complement = false;
        return rep;
    }
    if (g.order() >= 2 && find_odd_hole(complement(g), max_hole, rep.cycle)) {
        rep.clean = false;
        rep.in_complement = true;
        return rep;
    }
    return rep;
}

}  // namespace kcl
