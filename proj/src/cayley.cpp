// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#include "kcl/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kcl {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_inverse_closed(int n, const std::vector<int>& set, const char* what) {
    std::set<int> s(set.begin(), set.end());
    for (int j : set) {
        if (j <= 0 || j >= n)
            throw std::invalid_argument(std::string(what) + ": residue " + std::to_string(j) +
                                        " outside 1.." + std::to_string(n - 1));
        if (!s.count((n - j) % n))
            throw std::invalid_argument(std::string(what) + ": residue " + std::to_string(j) +
                                        " present without its inverse " + std::to_string((n - j) % n));
    }
}

}  // namespace

void CirculantSpec::validate() const {
    if (n < 1 || n > 64)
        throw std::invalid_argument("circulant: order must be in [1,64], got " + std::to_string(n));
    for (int j : connection)
        if (j == 0) throw std::invalid_argument("circulant: residue 0 is not a valid generator");
    check_inverse_closed(n, connection, "circulant connection set");
}

void DihedralSpec::validate() const {
    if (n < 1 || n > 32)
        throw std::invalid_argument("dihedral: rotation order must be in [1,32] (group order <= 64), got " +
                                    std::to_string(n));
    for (int j : rotations)
        if (j == 0) throw std::invalid_argument("dihedral: rotation residue 0 is not a valid generator");
    check_inverse_closed(n, rotations, "dihedral rotation set");
    for (int b : reflections)
        if (b < 0 || b >= n)
            throw std::invalid_argument("dihedral: reflection index " + std::to_string(b) +
                                        " outside 0.." + std::to_string(n - 1));
}

std::vector<int> units(int n) {
    if (n < 2) throw std::invalid_argument("units: n must be >= 2");
    std::vector<int> out;
    for (int j = 1; j < n; ++j)
        if (std::gcd(j, n) == 1) out.push_back(j);
    return out;
}

std::vector<int> nonunits(int n) {
    if (n < 2) throw std::invalid_argument("nonunits: n must be >= 2");
    std::vector<int> out;
    for (int j = 1; j < n; ++j)
        if (std::gcd(j, n) > 1) out.push_back(j);
    return out;
}

int least_prime_factor(int n) {
    if (n < 2) throw std::invalid_argument("least_prime_factor: n must be >= 2");
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

int distinct_prime_factor_count(int n) {
    int count = 0;
    for (int p = 2; n > 1; ++p) {
        if (p * p > n) {
            ++count;
            break;
        }
        if (n % p == 0) {
            ++count;
            while (n % p == 0) n /= p;
        }
    }
    return count;
}

Graph circulant(const CirculantSpec& spec) {
    spec.validate();
    Graph g(spec.n);
    for (int v = 0; v < spec.n; ++v)
        for (int j : spec.connection) g.add_edge(v, (v + j) % spec.n);
    return g;
}

Graph circulant(int n, const std::vector<int>& connection) {
    return circulant(CirculantSpec{n, sorted_unique(connection)});
}

Graph unitary(int n) {
    if (n < 3) throw std::invalid_argument("unitary: n must be >= 3");
    return circulant(n, units(n));
}

Graph unitary_complement(int n) {
    if (n < 4) throw std::invalid_argument("unitary_complement: n must be >= 4");
    if (least_prime_factor(n) == n)
        throw std::invalid_argument("unitary_complement: n must be composite (the complement of K_n is edgeless)");
    return circulant(n, nonunits(n));
}

Graph power_of_cycle(int n, int k) {
    if (k < 1 || 2 * k >= n)
        throw std::invalid_argument("power_of_cycle: k must satisfy 1 <= k < n/2, got k=" +
                                    std::to_string(k) + " for n=" + std::to_string(n));
    std::vector<int> conn;
    for (int j = 1; j <= k; ++j) {
        conn.push_back(j);
        conn.push_back(n - j);
    }
    return circulant(n, conn);
}

Graph dihedral_cayley(const DihedralSpec& spec) {
    spec.validate();
    const int n = spec.n;
    Graph g(2 * n);
    for (int a = 0; a < n; ++a) {
        for (int j : spec.rotations) {
            g.add_edge(a, (a + j) % n);
            g.add_edge(n + a, n + (a + j) % n);
        }
        // x = s^a, g = r*s^b: s^a * r * s^b = r * s^(b-a).
        for (int b : spec.reflections) g.add_edge(a, n + ((b - a) % n + n) % n);
    }
    return g;
}

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T2: return "T2";
        case TheoremId::T3: return "T3";
        case TheoremId::T4: return "T4";
        case TheoremId::C5: return "C5";
        case TheoremId::T6: return "T6";
        case TheoremId::C7: return "C7";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem(const std::string& name) {
    if (name == "T2") return TheoremId::T2;
    if (name == "T3") return TheoremId::T3;
    if (name == "T4") return TheoremId::T4;
    if (name == "C5") return TheoremId::C5;
    if (name == "T6") return TheoremId::T6;
    if (name == "C7") return TheoremId::C7;
    return std::nullopt;
}

std::string Claim::to_string() const {
    return (kind == Kind::Equals ? "ch = " : "ch <= ") + std::to_string(value);
}

namespace {

std::vector<int> validated_s2(int n, const std::vector<int>& base, const std::vector<int>& s2_in) {
    if (s2_in.empty())
        throw std::invalid_argument("corollary graphs need a non-empty --s2 residue set");
    std::vector<int> s2 = sorted_unique(s2_in);
    check_inverse_closed(n, s2, "S2");
    std::set<int> baseset(base.begin(), base.end());
    for (int j : s2)
        if (baseset.count(j))
            throw std::invalid_argument("S2 residue " + std::to_string(j) +
                                        " already belongs to the base generating set");
    return s2;
}

}  // namespace

TheoremInstance theorem_graph(TheoremId id, int n, const TheoremOptions& opts) {
    if (!opts.force) {
        if (n < 3 || n % 2 == 0)
            throw std::invalid_argument("theorem_graph: n must be odd and >= 3 (use --force to override)");
        if (distinct_prime_factor_count(n) > 2)
            throw std::invalid_argument("theorem_graph: n must have at most two distinct prime divisors "
                                        "(use --force to override)");
    }
    if (n < 3) throw std::invalid_argument("theorem_graph: n must be >= 3");

    const int p = least_prime_factor(n);
    TheoremInstance inst;
    inst.id = id;
    inst.n = n;

    switch (id) {
        case TheoremId::T2: {
            inst.graph = unitary(n);
            inst.spec = CirculantSpec{n, units(n)};
            inst.claim = {Claim::Kind::Equals, p};
            break;
        }
        case TheoremId::T3: {
            inst.graph = unitary_complement(n);
            inst.spec = CirculantSpec{n, nonunits(n)};
            inst.claim = {Claim::Kind::Equals, n / p};
            break;
        }
        case TheoremId::T4: {
            DihedralSpec spec{n, units(n), {0, 1}};
            inst.graph = dihedral_cayley(spec);
            inst.spec = spec;
            inst.claim = {Claim::Kind::AtMost, p + 1};
            break;
        }
        case TheoremId::T6: {
            if (p == n) throw std::invalid_argument("theorem_graph: T6 needs composite n");
            DihedralSpec spec{n, nonunits(n), {0, 1}};
            inst.graph = dihedral_cayley(spec);
            inst.spec = spec;
            inst.claim = {Claim::Kind::AtMost, n / p + 1};
            break;
        }
        case TheoremId::C5: {
            inst.s2 = validated_s2(n, units(n), opts.s2);
            std::vector<int> rot = units(n);
            rot.insert(rot.end(), inst.s2.begin(), inst.s2.end());
            std::sort(rot.begin(), rot.end());
            DihedralSpec spec{n, rot, opts.with_reflections ? std::vector<int>{0, 1} : std::vector<int>{}};
            inst.graph = dihedral_cayley(spec);
            inst.spec = spec;
            inst.claim = {Claim::Kind::AtMost, p + static_cast<int>(inst.s2.size()) / 2};
            break;
        }
        case TheoremId::C7: {
            if (p == n) throw std::invalid_argument("theorem_graph: C7 needs composite n");
            inst.s2 = validated_s2(n, nonunits(n), opts.s2);
            std::vector<int> rot = nonunits(n);
            rot.insert(rot.end(), inst.s2.begin(), inst.s2.end());
            std::sort(rot.begin(), rot.end());
            DihedralSpec spec{n, rot, opts.with_reflections ? std::vector<int>{0, 1} : std::vector<int>{}};
            inst.graph = dihedral_cayley(spec);
            inst.spec = spec;
            inst.claim = {Claim::Kind::AtMost, n / p + static_cast<int>(inst.s2.size()) / 2};
            break;
        }
    }
    return inst;
}

}  // namespace kcl
