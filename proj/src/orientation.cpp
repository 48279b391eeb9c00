// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#include "kcl/orientation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kcl {

Digraph::Digraph(Graph underlying) : g_(std::move(underlying)) {
    out_.assign(static_cast<std::size_t>(g_.order()), VertexSet{});
}

VertexSet Digraph::in_neighbors(int v) const {
    VertexSet in;
    for (int u = 0; u < order(); ++u)
        if (u != v && has_arc(u, v)) in.add(u);
    return in;
}

void Digraph::add_arc(int v, int u) {
    if (v == u) throw std::invalid_argument("add_arc: self-arcs are not allowed");
    if (!g_.has_edge(v, u))
        throw std::invalid_argument("add_arc: no underlying edge {" + std::to_string(v) + "," +
                                    std::to_string(u) + "}");
    out_[static_cast<std::size_t>(v)].add(u);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < order(); ++v)
        for_each_vertex(out_neighbors(v), [&](int u) { out.emplace_back(v, u); });
    return out;
}

int max_outdegree(const Digraph& d) {
    int m = 0;
    for (int v = 0; v < d.order(); ++v) m = std::max(m, d.out_degree(v));
    return m;
}

std::map<int, int> outdegree_profile(const Digraph& d) {
    std::map<int, int> profile;
    for (int v = 0; v < d.order(); ++v) ++profile[d.out_degree(v)];
    return profile;
}

CoverageReport validate_orientation(const Digraph& d) {
    CoverageReport rep;
    for (auto [u, v] : d.underlying().edges()) {
        const bool fwd = d.has_arc(u, v), bwd = d.has_arc(v, u);
        if (fwd && bwd) ++rep.bidirected;
        if (fwd || bwd)
            ++rep.covered;
        else
            rep.uncovered.emplace_back(u, v);
    }
    return rep;
}

OrientationResult orient_by_generators(const Graph& target, const std::vector<int>& directives,
                                       bool strict) {
    const int n = target.order();
    std::vector<int> sorted = directives;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Digraph d(target);
    CoverageReport rej;  // only directive bookkeeping here
    for (int j : sorted) {
        const int step = ((j % n) + n) % n;
        bool ok = step != 0;
        for (int v = 0; ok && v < n; ++v)
            if (!target.has_edge(v, (v + step) % n)) ok = false;
        if (!ok) {
            rej.rejected_directives.push_back(j);
            continue;
        }
        rej.accepted_directives.push_back(j);
        for (int v = 0; v < n; ++v) d.add_arc(v, (v + step) % n);
    }
    if (strict && !rej.rejected_directives.empty()) {
        std::string msg = "orient_by_generators: directives not edge differences of the target:";
        for (int j : rej.rejected_directives) msg += " " + std::to_string(j);
        throw std::invalid_argument(msg);
    }

    OrientationResult res;
    res.digraph = std::move(d);
    res.coverage = validate_orientation(res.digraph);
    res.coverage.accepted_directives = rej.accepted_directives;
    res.coverage.rejected_directives = rej.rejected_directives;
    return res;
}

std::string OrientationStrategy::name() const {
    switch (kind) {
        case Kind::PaperLiteral: return "paper_literal";
        case Kind::Completed: return "completed";
        case Kind::FullBidirect: return "full_bidirect";
        case Kind::Reps: {
            std::string s = "reps=";
            for (std::size_t i = 0; i < reps.size(); ++i)
                s += (i ? "," : "") + std::to_string(reps[i]);
            return s;
        }
    }
    return "?";
}

std::optional<OrientationStrategy> OrientationStrategy::parse(const std::string& text) {
    if (text == "paper_literal") return OrientationStrategy{Kind::PaperLiteral, {}};
    if (text == "completed") return OrientationStrategy{Kind::Completed, {}};
    if (text == "full_bidirect") return OrientationStrategy{Kind::FullBidirect, {}};
    if (text.rfind("reps=", 0) == 0) {
        OrientationStrategy st{Kind::Reps, {}};
        std::string rest = text.substr(5);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            try {
                st.reps.push_back(std::stoi(rest.substr(pos, comma - pos)));
            } catch (const std::exception&) {
                return std::nullopt;
            }
            pos = comma + 1;
        }
        if (st.reps.empty()) return std::nullopt;
        return st;
    }
    return std::nullopt;
}

namespace {

std::vector<int> paper_literal_directives(TheoremId id, int n, const std::vector<int>& s2) {
    const int p = least_prime_factor(n);
    std::vector<int> out;
    switch (id) {
        case TheoremId::T2:
        case TheoremId::T4:
        case TheoremId::C5:
            for (int j = 1; j <= p; ++j) out.push_back(j);
            break;
        case TheoremId::T3:
        case TheoremId::T6:
        case TheoremId::C7:
            for (int j = p; j <= n - p; j += p) out.push_back(j);
            break;
    }
    if (id == TheoremId::C5 || id == TheoremId::C7) {
        // one representative per S2 inverse pair, oriented outwards
        for (int j : s2)
            if (j < n - j) out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> complete_directives(const Graph& side, int n, std::vector<int> base) {
    OrientationResult lit = orient_by_generators(side, base, false);
    std::set<int> extra;
    for (auto [u, v] : lit.coverage.uncovered) {
        const int diff = ((v - u) % n + n) % n;
        extra.insert(std::min(diff, n - diff));
    }
    base = lit.coverage.accepted_directives;
    base.insert(base.end(), extra.begin(), extra.end());
    std::sort(base.begin(), base.end());
    return base;
}

}  // namespace

std::vector<int> strategy_directives(const Graph& side, TheoremId id, int n,
                                     const OrientationStrategy& strategy,
                                     const std::vector<int>& s2) {
    switch (strategy.kind) {
        case OrientationStrategy::Kind::PaperLiteral:
            return paper_literal_directives(id, n, s2);
        case OrientationStrategy::Kind::Completed:
            return complete_directives(side, n, paper_literal_directives(id, n, s2));
        case OrientationStrategy::Kind::FullBidirect: {
            std::vector<int> all;
            for (int j = 1; j < n; ++j) all.push_back(j);
            return all;
        }
        case OrientationStrategy::Kind::Reps: {
            std::set<int> seen(strategy.reps.begin(), strategy.reps.end());
            for (int j : strategy.reps) {
                if (j <= 0 || j >= n)
                    throw std::invalid_argument("reps: residue " + std::to_string(j) + " outside 1.." +
                                                std::to_string(n - 1));
                if (seen.count(n - j))
                    throw std::invalid_argument("reps: residues " + std::to_string(j) + " and " +
                                                std::to_string(n - j) +
                                                " are inverses; pick one direction per class");
            }
            return strategy.reps;
        }
    }
    return {};
}

CrossSplit CrossSplit::default_for(const std::vector<int>& reflections) {
    std::vector<int> sorted = reflections;
    std::sort(sorted.begin(), sorted.end());
    CrossSplit split;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        (i % 2 == 0 ? split.out_set : split.in_set).push_back(sorted[i]);
    return split;
}

OrientationResult orient_dihedral(const DihedralSpec& spec, const std::vector<int>& side_directives,
                                  const CrossSplit& split, bool strict) {
    spec.validate();
    const int n = spec.n;

    {
        std::set<int> refl(spec.reflections.begin(), spec.reflections.end());
        std::set<int> covered;
        for (int b : split.out_set) covered.insert(b);
        for (int b : split.in_set) covered.insert(b);
        if (covered.size() != split.out_set.size() + split.in_set.size() || covered != refl)
            throw std::invalid_argument("orient_dihedral: cross split is not a partition of the reflection set");
    }

    const Graph whole = dihedral_cayley(spec);
    const Graph side = circulant(CirculantSpec{n, spec.rotations});

    // orient the side circulant once, then replay its arcs on both copies
    OrientationResult side_res = orient_by_generators(side, side_directives, strict);

    Digraph d(whole);
    for (auto [v, u] : side_res.digraph.arcs()) {
        d.add_arc(v, u);
        d.add_arc(n + v, n + u);
    }
    for (int a = 0; a < n; ++a) {
        for (int b : split.out_set) d.add_arc(a, n + ((b - a) % n + n) % n);
        for (int b : split.in_set) d.add_arc(n + ((b - a) % n + n) % n, a);
    }

    OrientationResult res;
    res.digraph = std::move(d);
    res.coverage = validate_orientation(res.digraph);
    res.coverage.accepted_directives = side_res.coverage.accepted_directives;
    res.coverage.rejected_directives = side_res.coverage.rejected_directives;
    return res;
}

OrientationResult build_strategy_orientation(const TheoremInstance& inst,
                                             const OrientationStrategy& strategy) {
    if (const auto* circ = std::get_if<CirculantSpec>(&inst.spec)) {
        const std::vector<int> dirs =
            strategy_directives(inst.graph, inst.id, circ->n, strategy, inst.s2);
        return orient_by_generators(inst.graph, dirs);
    }
    const auto& dih = std::get<DihedralSpec>(inst.spec);
    const Graph side = circulant(CirculantSpec{dih.n, dih.rotations});
    const std::vector<int> dirs = strategy_directives(side, inst.id, dih.n, strategy, inst.s2);
    return orient_dihedral(dih, dirs, CrossSplit::default_for(dih.reflections));
}

}  // namespace kcl
