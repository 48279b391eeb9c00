// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "kcl/cayley.hpp"
#include "kcl/kernels.hpp"
#include "kcl/orientation.hpp"
#include "test_util.hpp"

using namespace kcl;

namespace {

Digraph directed_cycle(int n) {
    std::vector<int> conn{1, n - 1};
    Digraph d(circulant(n, conn));
    for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
    return d;
}

Digraph transitive_triangle() {
    Digraph d(Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
    d.add_arc(0, 1);
    d.add_arc(0, 2);
    d.add_arc(1, 2);
    return d;
}

}  // namespace

TEST_CASE("is_kernel on the spec digraphs") {
    const Digraph tt = transitive_triangle();
    const VertexSet all = VertexSet::range(3);
    CHECK(is_kernel(tt, all, VertexSet::of({2})));
    CHECK_FALSE(is_kernel(tt, all, VertexSet::of({1})));
    CHECK_FALSE(is_kernel(tt, all, VertexSet::of({0})));

    const Digraph c3 = directed_cycle(3);
    CHECK_FALSE(is_kernel(c3, VertexSet::range(3), VertexSet::of({2})));

    const Digraph c4 = directed_cycle(4);
    CHECK(is_kernel(c4, VertexSet::range(4), VertexSet::of({1, 3})));
    CHECK(is_kernel(c4, VertexSet::range(4), VertexSet::of({0, 2})));

    CHECK_THROWS_AS(is_kernel(c4, VertexSet::of({0, 1}), VertexSet::of({2})),
                    std::invalid_argument);
}

TEST_CASE("find_kernel returns the mask-least kernel") {
    CHECK_FALSE(find_kernel(directed_cycle(3), VertexSet::range(3)).has_value());
    CHECK(find_kernel(directed_cycle(4), VertexSet::range(4)) == VertexSet::of({0, 2}));
    CHECK_THROWS_AS(find_kernel(directed_cycle(4), VertexSet{}), std::invalid_argument);

    // bidirected K4: every singleton is a kernel; {0} is least
    Digraph k4(circulant(4, {1, 2, 3}));
    for (auto [u, v] : k4.underlying().edges()) {
        k4.add_arc(u, v);
        k4.add_arc(v, u);
    }
    CHECK(find_kernel(k4, VertexSet::range(4)) == VertexSet::of({0}));
    CHECK(kernel_perfect(k4).status == KernelVerdict::Status::KernelPerfect);
}

TEST_CASE("DAG kernels match the sink-peeling construction") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 300; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = kcl_test::random_graph(rng, n, 0.5);
        const Digraph d = kcl_test::random_acyclic_orientation(rng, g);
        std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
        if (mask == 0) mask = 1;
        const VertexSet support(mask);
        const auto peeled = kcl_test::dag_kernel_sink_peeling(d, support);
        REQUIRE(peeled.has_value());
        const auto found = find_kernel(d, support);
        REQUIRE(found.has_value());
        CHECK(*found == *peeled);  // unique kernel in a DAG
        CHECK(all_kernels(d, support).size() == 1);
    }
}

TEST_CASE("find_kernel agrees with all_kernels on random digraphs") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 250; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = kcl_test::random_graph(rng, n, 0.5);
        const Digraph d = kcl_test::random_orientation(rng, g);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            const VertexSet support(mask);
            const auto every = all_kernels(d, support);
            const auto found = find_kernel(d, support);
            if (every.empty()) {
                CHECK_FALSE(found.has_value());
            } else {
                REQUIRE(found.has_value());
                CHECK(*found == every.front());  // least by mask value
                CHECK(is_kernel(d, support, *found));
            }
        }
    }
}

TEST_CASE("all_kernels spec examples") {
    CHECK(all_kernels(directed_cycle(4), VertexSet::range(4)) ==
          std::vector<VertexSet>{VertexSet::of({0, 2}), VertexSet::of({1, 3})});

    Digraph single(Graph::from_edges(2, {{0, 1}}));
    single.add_arc(0, 1);
    CHECK(all_kernels(single, VertexSet::range(2)) == std::vector<VertexSet>{VertexSet::of({1})});

    const Digraph edgeless{Graph(3)};
    CHECK(all_kernels(edgeless, VertexSet::range(3)) ==
          std::vector<VertexSet>{VertexSet::range(3)});

    Digraph big(Graph(22));
    CHECK_THROWS_AS(all_kernels(big, VertexSet::range(22)), std::invalid_argument);
}

TEST_CASE("kernel_perfect on cyclic C5 blames the full support") {
    const KernelVerdict v = kernel_perfect(directed_cycle(5));
    CHECK(v.status == KernelVerdict::Status::Counterexample);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == VertexSet::range(5));
    CHECK(v.subsets_checked == 31);  // every proper support has a kernel
    CHECK_FALSE(find_kernel(directed_cycle(5), *v.witness).has_value());
}

TEST_CASE("acyclic orientations are always kernel-perfect") {
    std::mt19937_64 rng(55);
    for (int round = 0; round < 120; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Digraph d =
            kcl_test::random_acyclic_orientation(rng, kcl_test::random_graph(rng, n, 0.5));
        CHECK(kernel_perfect(d).status == KernelVerdict::Status::KernelPerfect);
    }
}

TEST_CASE("kernel-perfect digraphs restrict kernel-perfectly") {
    std::mt19937_64 rng(77);
    int spot_checks = 0;
    while (spot_checks < 25) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Digraph d = kcl_test::random_orientation(rng, kcl_test::random_graph(rng, n, 0.5));
        if (kernel_perfect(d).status != KernelVerdict::Status::KernelPerfect) continue;
        ++spot_checks;
        std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
        if (mask == 0) mask = 1;
        const auto sub = induced(d.underlying(), VertexSet(mask));
        Digraph restricted(sub.graph);
        for (std::size_t i = 0; i < sub.labels.size(); ++i)
            for (std::size_t j = 0; j < sub.labels.size(); ++j)
                if (i != j && d.has_arc(sub.labels[i], sub.labels[j]))
                    restricted.add_arc(static_cast<int>(i), static_cast<int>(j));
        CHECK(kernel_perfect(restricted).status == KernelVerdict::Status::KernelPerfect);
    }
}

TEST_CASE("exhaustive cap and sampling") {
    Digraph wide{Graph(30)};
    CHECK_THROWS_AS(kernel_perfect(wide), std::invalid_argument);

    KernelSweepOptions sample;
    sample.sample = true;
    sample.sample_budget = 500;
    sample.seed = 9;
    const KernelVerdict v = kernel_perfect(wide, sample);
    // edgeless digraphs are kernel-perfect, but sampling never certifies that
    CHECK(v.status == KernelVerdict::Status::BudgetExceeded);

    const KernelVerdict found = kernel_perfect(directed_cycle(5), [] {
        KernelSweepOptions o;
        o.sample = true;
        o.sample_budget = 100000;
        o.seed = 4;
        return o;
    }());
    CHECK(found.status == KernelVerdict::Status::Counterexample);
    REQUIRE(found.witness.has_value());
    CHECK_FALSE(find_kernel(directed_cycle(5), *found.witness).has_value());
}

TEST_CASE("parallel sweep matches the serial reference") {
    // counterexample instances
    const TheoremInstance t2 = theorem_graph(TheoremId::T2, 9);
    for (auto kind : {OrientationStrategy::Kind::PaperLiteral, OrientationStrategy::Kind::Completed,
                      OrientationStrategy::Kind::FullBidirect}) {
        const auto r = build_strategy_orientation(t2, OrientationStrategy{kind, {}});
        const KernelVerdict par = kernel_perfect(r.digraph);
        const KernelVerdict ser = kernel_perfect_serial(r.digraph);
        CHECK(par.status == ser.status);
        CHECK(par.subsets_checked == ser.subsets_checked);
        CHECK(par.witness == ser.witness);
    }
    // a full 2^18 kernel-perfect sweep
    const auto full = build_strategy_orientation(theorem_graph(TheoremId::T6, 9),
                                                 OrientationStrategy{OrientationStrategy::Kind::Completed, {}});
    const KernelVerdict par = kernel_perfect(full.digraph);
    const KernelVerdict ser = kernel_perfect_serial(full.digraph);
    CHECK(par.status == KernelVerdict::Status::KernelPerfect);
    CHECK(par.status == ser.status);
    CHECK(par.subsets_checked == ser.subsets_checked);
    CHECK(par.subsets_checked == (1u << 18) - 1);
}

TEST_CASE("the completed T2 orientation at n=9 is not kernel-perfect") {
    const auto r = build_strategy_orientation(theorem_graph(TheoremId::T2, 9),
                                              OrientationStrategy{OrientationStrategy::Kind::Completed, {}});
    const KernelVerdict v = kernel_perfect(r.digraph);
    CHECK(v.status == KernelVerdict::Status::Counterexample);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == VertexSet::of({0, 1, 5}));  // directed triangle 0->1->5->0
    CHECK(v.subsets_checked == 56);
}
