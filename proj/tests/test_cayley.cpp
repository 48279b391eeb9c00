// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numeric>

#include "kcl/cayley.hpp"
#include "kcl/graph.hpp"

using namespace kcl;

TEST_CASE("units and nonunits") {
    CHECK(units(9) == std::vector<int>{1, 2, 4, 5, 7, 8});
    CHECK(units(7) == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(units(15).size() == 8);
    CHECK(nonunits(9) == std::vector<int>{3, 6});
    CHECK(nonunits(15) == std::vector<int>{3, 5, 6, 9, 10, 12});
    CHECK_THROWS_AS(units(1), std::invalid_argument);
    CHECK(least_prime_factor(9) == 3);
    CHECK(least_prime_factor(15) == 3);
    CHECK(least_prime_factor(7) == 7);
    CHECK(distinct_prime_factor_count(9) == 1);
    CHECK(distinct_prime_factor_count(15) == 2);
    CHECK(distinct_prime_factor_count(105) == 3);
}

TEST_CASE("circulant constructions") {
    const Graph c5 = circulant(5, {1, 4});
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    CHECK(components(circulant(9, {3, 6})).size() == 3);

    for (int n : {9, 15, 21}) {
        const Graph u = circulant(n, units(n));
        const int phi = static_cast<int>(units(n).size());
        for (int v = 0; v < n; ++v) CHECK(u.degree(v) == phi);
    }

    CHECK_THROWS_WITH_AS(circulant(9, std::vector<int>{1}),
                         "circulant connection set: residue 1 present without its inverse 8",
                         std::invalid_argument);
    CHECK_THROWS_AS(circulant(9, std::vector<int>{0}), std::invalid_argument);
}

TEST_CASE("circulants are rotation invariant") {
    for (int n : {9, 15}) {
        const Graph g = unitary(n);
        // relabeling v -> v+1 mod n maps edges onto edges
        for (auto [u, v] : g.edges()) CHECK(g.has_edge((u + 1) % n, (v + 1) % n));
    }
}

TEST_CASE("unitary graphs") {
    const Graph k7 = unitary(7);
    CHECK(k7.edge_count() == 21);  // K_7

    const Graph u9 = unitary(9);
    for (int v = 0; v < 9; ++v) CHECK(u9.degree(v) == 6);
    CHECK(u9.has_edge(0, 1));
    CHECK(u9.has_edge(1, 2));
    CHECK(u9.has_edge(0, 2));  // the clique of 3 consecutive vertices

    CHECK_THROWS_AS(unitary(2), std::invalid_argument);
}

TEST_CASE("unitary complement") {
    CHECK(unitary_complement(9) == circulant(9, {3, 6}));
    CHECK(unitary_complement(9) == complement(unitary(9)));
    CHECK(unitary_complement(15) == complement(unitary(15)));

    // clique {0,3,6,9,12}: pairwise differences share a factor with 15
    const Graph uc15 = unitary_complement(15);
    const std::vector<int> clique{0, 3, 6, 9, 12};
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            CHECK(uc15.has_edge(clique[i], clique[j]));

    CHECK_THROWS_AS(unitary_complement(7), std::invalid_argument);
}

TEST_CASE("powers of cycles") {
    CHECK(power_of_cycle(7, 1) == circulant(7, {1, 6}));
    CHECK(power_of_cycle(5, 2).edge_count() == 10);  // K_5
    CHECK(power_of_cycle(9, 2) == circulant(9, {1, 2, 7, 8}));
    CHECK_THROWS_AS(power_of_cycle(9, 0), std::invalid_argument);
    CHECK_THROWS_AS(power_of_cycle(9, 5), std::invalid_argument);
}

TEST_CASE("dihedral cayley graphs") {
    // no rotations, single reflection: a perfect matching a <-> n+((-a) mod n)
    const Graph match = dihedral_cayley({5, {}, {0}});
    CHECK(match.order() == 10);
    CHECK(match.edge_count() == 5);
    for (int a = 0; a < 5; ++a) CHECK(match.has_edge(a, 5 + ((5 - a) % 5)));

    const Graph t4 = dihedral_cayley({9, units(9), {0, 1}});
    CHECK(t4.order() == 18);
    CHECK(t4.edge_count() == 72);
    for (int v = 0; v < 18; ++v) CHECK(t4.degree(v) == 8);

    // sides are circulant(n, rotations) under the shift relabeling
    const Graph side = circulant(9, units(9));
    const auto rot_side = induced(t4, VertexSet::range(9));
    CHECK(rot_side.graph == side);
    VertexSet refl;
    for (int a = 0; a < 9; ++a) refl.add(9 + a);
    CHECK(induced(t4, refl).graph == side);

    // cross edges: {a, 9+x} with (a+x) mod 9 in {0,1}; 2-regular bipartite
    long long cross = 0;
    for (int a = 0; a < 9; ++a)
        for (int x = 0; x < 9; ++x)
            if (t4.has_edge(a, 9 + x)) {
                ++cross;
                CHECK(((a + x) % 9 == 0 || (a + x) % 9 == 1));
            }
    CHECK(cross == 18);  // n * |reflections|
}

TEST_CASE("theorem dispatcher") {
    const TheoremInstance t2 = theorem_graph(TheoremId::T2, 9);
    CHECK(t2.graph == unitary(9));
    CHECK(t2.claim.kind == Claim::Kind::Equals);
    CHECK(t2.claim.value == 3);

    const TheoremInstance t3 = theorem_graph(TheoremId::T3, 9);
    CHECK(t3.graph == unitary_complement(9));
    CHECK(t3.claim.value == 3);

    const TheoremInstance t4 = theorem_graph(TheoremId::T4, 9);
    CHECK(t4.graph.order() == 18);
    CHECK(t4.claim.kind == Claim::Kind::AtMost);
    CHECK(t4.claim.value == 4);

    const TheoremInstance t6 = theorem_graph(TheoremId::T6, 9);
    CHECK(t6.claim.value == 4);
    CHECK(t6.graph.edge_count() == 36);

    TheoremOptions c5opts;
    c5opts.s2 = {3, 6};
    const TheoremInstance c5 = theorem_graph(TheoremId::C5, 9, c5opts);
    CHECK(c5.claim.value == 4);  // p + |S2|/2
    CHECK(components(c5.graph).size() == 2);
    CHECK(induced(c5.graph, VertexSet::range(9)).graph.edge_count() == 36);  // K_9 side

    TheoremOptions c7opts;
    c7opts.s2 = {1, 8};
    const TheoremInstance c7 = theorem_graph(TheoremId::C7, 9, c7opts);
    CHECK(c7.claim.value == 4);  // n/p + |S2|/2
    CHECK(components(c7.graph).size() == 2);

    CHECK_THROWS_AS(theorem_graph(TheoremId::T2, 8), std::invalid_argument);    // even
    CHECK_THROWS_AS(theorem_graph(TheoremId::T2, 105), std::invalid_argument);  // 3 primes
    TheoremOptions force;
    force.force = true;
    CHECK(theorem_graph(TheoremId::T2, 8, force).graph.order() == 8);
    CHECK_THROWS_AS(theorem_graph(TheoremId::C5, 9), std::invalid_argument);  // S2 required
    TheoremOptions bad_s2;
    bad_s2.s2 = {1, 8};  // already units
    CHECK_THROWS_AS(theorem_graph(TheoremId::C5, 9, bad_s2), std::invalid_argument);
}

TEST_CASE("corollary graphs keep reflections only on request") {
    TheoremOptions opts;
    opts.s2 = {3, 6};
    CHECK(components(theorem_graph(TheoremId::C5, 9, opts).graph).size() == 2);
    opts.with_reflections = true;
    CHECK(components(theorem_graph(TheoremId::C5, 9, opts).graph).size() == 1);
}
