// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "kcl/cayley.hpp"
#include "kcl/orientation.hpp"

using namespace kcl;

TEST_CASE("orient_by_generators basics") {
    const Graph c5 = circulant(5, {1, 4});
    const auto res = orient_by_generators(c5, {1});
    CHECK(max_outdegree(res.digraph) == 1);
    for (int v = 0; v < 5; ++v) CHECK(res.digraph.has_arc(v, (v + 1) % 5));
    CHECK(res.coverage.fully_covered());
    CHECK(res.coverage.bidirected == 0);
}

TEST_CASE("uniform outdegree across vertices") {
    const auto res = orient_by_generators(unitary(9), {1, 2});
    for (int v = 0; v < 9; ++v) CHECK(res.digraph.out_degree(v) == 2);
    CHECK(res.coverage.covered == 18);
    CHECK(res.coverage.uncovered.size() == 9);  // the difference-4 class
    for (auto [u, v] : res.coverage.uncovered) {
        const int diff = (v - u + 9) % 9;
        CHECK((diff == 4 || diff == 5));
    }
}

TEST_CASE("inverse directive pairs bidirect every edge") {
    const auto res = orient_by_generators(unitary_complement(9), {3, 6});
    CHECK(res.coverage.fully_covered());
    CHECK(res.coverage.bidirected == 9);
    CHECK(max_outdegree(res.digraph) == 2);  // n/p - 1
}

TEST_CASE("directive rejection modes") {
    const auto res = orient_by_generators(unitary(9), {1, 2, 3});
    CHECK(res.coverage.accepted_directives == std::vector<int>{1, 2});
    CHECK(res.coverage.rejected_directives == std::vector<int>{3});
    CHECK_THROWS_AS(orient_by_generators(unitary(9), {1, 2, 3}, true), std::invalid_argument);
}

TEST_CASE("digraph invariants") {
    Digraph d(circulant(5, {1, 4}));
    CHECK_THROWS_AS(d.add_arc(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(d.add_arc(0, 2), std::invalid_argument);  // no such edge
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(1, 0));
    CHECK(validate_orientation(d).bidirected == 1);
}

TEST_CASE("strategy directive lists for the circulant theorems") {
    const TheoremInstance t2 = theorem_graph(TheoremId::T2, 9);
    const OrientationStrategy lit{OrientationStrategy::Kind::PaperLiteral, {}};
    const OrientationStrategy comp{OrientationStrategy::Kind::Completed, {}};
    const OrientationStrategy fullb{OrientationStrategy::Kind::FullBidirect, {}};

    auto r = build_strategy_orientation(t2, lit);
    CHECK(r.coverage.accepted_directives == std::vector<int>{1, 2});
    CHECK(r.coverage.uncovered.size() == 9);

    r = build_strategy_orientation(t2, comp);
    CHECK(r.coverage.accepted_directives == std::vector<int>{1, 2, 4});
    CHECK(r.coverage.fully_covered());
    CHECK(max_outdegree(r.digraph) == 3);

    r = build_strategy_orientation(t2, fullb);
    CHECK(max_outdegree(r.digraph) == 6);
    CHECK(r.coverage.bidirected == 27);

    const TheoremInstance t3 = theorem_graph(TheoremId::T3, 9);
    r = build_strategy_orientation(t3, lit);
    CHECK(r.coverage.accepted_directives == std::vector<int>{3, 6});
    CHECK(r.coverage.fully_covered());
    CHECK(max_outdegree(r.digraph) == 2);

    // two-prime n: the literal T3 list misses the cross-class differences
    const TheoremInstance t3b = theorem_graph(TheoremId::T3, 15);
    r = build_strategy_orientation(t3b, lit);
    CHECK(r.coverage.accepted_directives == std::vector<int>{3, 6, 9, 12});
    CHECK(r.coverage.uncovered.size() == 15);  // the difference-5 class
    r = build_strategy_orientation(t3b, comp);
    CHECK(r.coverage.accepted_directives == std::vector<int>{3, 5, 6, 9, 12});
    CHECK(r.coverage.fully_covered());
}

TEST_CASE("reps strategy validates one direction per class") {
    const TheoremInstance t2 = theorem_graph(TheoremId::T2, 9);
    OrientationStrategy reps{OrientationStrategy::Kind::Reps, {1, 2, 4}};
    const auto r = build_strategy_orientation(t2, reps);
    CHECK(r.coverage.fully_covered());
    CHECK(r.coverage.bidirected == 0);

    OrientationStrategy bad{OrientationStrategy::Kind::Reps, {1, 8}};
    CHECK_THROWS_AS(build_strategy_orientation(t2, bad), std::invalid_argument);
}

TEST_CASE("strategy parsing round trips") {
    for (const std::string name : {"paper_literal", "completed", "full_bidirect", "reps=1,2,4"}) {
        const auto st = OrientationStrategy::parse(name);
        REQUIRE(st.has_value());
        CHECK(st->name() == name);
    }
    CHECK_FALSE(OrientationStrategy::parse("nope").has_value());
    CHECK_FALSE(OrientationStrategy::parse("reps=").has_value());
}

TEST_CASE("default cross split alternates sorted reflections") {
    const CrossSplit split = CrossSplit::default_for({0, 1});
    CHECK(split.out_set == std::vector<int>{0});
    CHECK(split.in_set == std::vector<int>{1});
    const CrossSplit wide = CrossSplit::default_for({4, 0, 2});
    CHECK(wide.out_set == std::vector<int>{0, 4});
    CHECK(wide.in_set == std::vector<int>{2});
}

TEST_CASE("dihedral composition covers every cross edge once") {
    const DihedralSpec spec{9, units(9), {0, 1}};
    const auto r = orient_dihedral(spec, {1, 2, 4}, CrossSplit::default_for(spec.reflections));
    CHECK(r.coverage.fully_covered());
    CHECK(r.coverage.bidirected == 0);
    // every vertex gains exactly one cross arc over its side outdegree
    for (int v = 0; v < 18; ++v) CHECK(r.digraph.out_degree(v) == 4);
    // total arcs = 2 * side arcs + n * |reflections|
    CHECK(static_cast<long long>(r.digraph.arcs().size()) == 2 * 27 + 18);

    // all-out split makes the reflection side absorbing
    const auto allout = orient_dihedral({9, {}, {0}}, {}, CrossSplit{{0}, {}});
    for (int a = 0; a < 9; ++a) {
        CHECK(allout.digraph.out_degree(a) == 1);
        CHECK(allout.digraph.out_degree(9 + a) == 0);
    }

    CHECK_THROWS_AS(orient_dihedral(spec, {1, 2, 4}, CrossSplit{{0}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(orient_dihedral(spec, {1, 2, 4}, CrossSplit{{0, 1}, {1}}), std::invalid_argument);
}

TEST_CASE("outdegree profiles") {
    const auto res = orient_by_generators(circulant(6, {1, 5}), {1});
    const auto profile = outdegree_profile(res.digraph);
    CHECK(profile.at(1) == 6);
    CHECK(max_outdegree(res.digraph) == 1);
}
