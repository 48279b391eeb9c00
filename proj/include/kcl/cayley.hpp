// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KCL_CAYLEY_HPP
#define KCL_CAYLEY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kcl/graph.hpp"

namespace kcl {

/// Circulant graph description: vertices are Z_n, u ~ v iff
/// (u - v) mod n lies in the connection set. The connection set must be
/// inverse-closed and must not contain 0.
struct CirculantSpec {
    int n = 0;
    std::vector<int> connection;  // sorted, unique residues in 1..n-1

    void validate() const;
};

/// Cayley graph on the dihedral group D_2n. Rotation s^a is vertex a,
/// reflection r*s^a ("ra") is vertex n+a. Rotation generators s^j give
/// side edges {a, a+j}; reflection generators r*s^b give cross edges
/// {a, n + (b - a) mod n}.
struct DihedralSpec {
    int n = 0;
    std::vector<int> rotations;    // sorted residues in 1..n-1, inverse-closed
    std::vector<int> reflections;  // sorted residues in 0..n-1

    void validate() const;
};

using CayleySpec = std::variant<CirculantSpec, DihedralSpec>;

/// Residues in 1..n-1 coprime to n.
std::vector<int> units(int n);
/// Residues in 1..n-1 sharing a factor with n.
std::vector<int> nonunits(int n);
int least_prime_factor(int n);
int distinct_prime_factor_count(int n);

Graph circulant(const CirculantSpec& spec);
Graph circulant(int n, const std::vector<int>& connection);

/// Unitary Cayley graph X_n = circulant(n, units(n)). Requires n >= 3.
Graph unitary(int n);

/// circulant(n, nonunits(n)); requires composite n >= 4.
Graph unitary_complement(int n);

/// C_n^k = circulant(n, {1..k} u {n-k..n-1}); requires 1 <= k < n/2.
Graph power_of_cycle(int n, int k);

Graph dihedral_cayley(const DihedralSpec& spec);

enum class TheoremId { T2, T3, T4, C5, T6, C7 };

std::string theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(const std::string& name);

struct Claim {
    enum class Kind { Equals, AtMost };
    Kind kind = Kind::Equals;
    int value = 0;

    std::string to_string() const;
};

struct TheoremInstance {
    TheoremId id;
    int n = 0;
    CayleySpec spec;
    Graph graph;
    Claim claim;
    std::vector<int> s2;  // only for C5/C7
};

struct TheoremOptions {
    std::vector<int> s2;          // required non-empty for C5/C7
    bool force = false;           // bypass the parity / prime-divisor checks
    bool with_reflections = false;  // add {r, r1} back into C5/C7
};

/// Builds the graph a theorem or corollary talks about, together with
/// the bound it claims. Preconditions (n odd, n >= 3, at most two
/// distinct prime divisors) are enforced unless opts.force is set.
TheoremInstance theorem_graph(TheoremId id, int n, const TheoremOptions& opts = {});

}  // namespace kcl

#endif  // KCL_CAYLEY_HPP
