// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#include "kcl/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace kcl {

std::string agreement_name(Agreement a) {
    switch (a) {
        case Agreement::Confirmed: return "confirmed";
        case Agreement::Refuted: return "refuted";
        case Agreement::Undetermined: return "undetermined";
    }
    return "?";
}

namespace {

void check_clique(const Graph& g, VertexSet clique) {
    bool ok = true;
    for_each_vertex(clique, [&](int v) {
        VertexSet rest = clique;
        rest.remove(v);
        if (!rest.subset_of(g.neighbors(v))) ok = false;
    });
    if (!ok) throw std::logic_error("verify: clique witness failed re-check");
}

void check_coloring(const Graph& g, const Coloring& col, int k) {
    if (!col.complete()) throw std::logic_error("verify: chromatic witness incomplete");
    for (auto [u, v] : g.edges())
        if (col.colors[static_cast<std::size_t>(u)] == col.colors[static_cast<std::size_t>(v)])
            throw std::logic_error("verify: chromatic witness not proper");
    for (int c : col.colors)
        if (c < 0 || c >= k) throw std::logic_error("verify: chromatic witness exceeds color count");
}

/// chi > bound gives a compact refutation: identical lists {0..bound-1}
/// admit no proper coloring, which list_colorable re-verifies.
ListAssignment uniform_refutation(const Graph& g, int bound) {
    std::vector<int> colors;
    for (int c = 0; c < bound; ++c) colors.push_back(c);
    ListAssignment L = ListAssignment::uniform(g.order(), colors);
    if (list_colorable(g, L).has_value())
        throw std::logic_error("verify: uniform refutation certificate failed re-check");
    return L;
}

}  // namespace

Report verify_theorem(TheoremId id, int n, const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();

    Report r;
    r.instance = theorem_graph(id, n, opts.theorem);
    const Graph& g = r.instance.graph;
    r.components_count = static_cast<int>(components(g).size());
    r.budget_nodes = opts.budget_nodes;
    r.budget_subsets = opts.kernel.sample_budget;
    r.sampled = opts.kernel.sample;
    r.seed = opts.kernel.seed;
    r.threads = opts.threads;

    KernelSweepOptions ksweep = opts.kernel;
    ksweep.threads = opts.threads;

    for (const OrientationStrategy& st : opts.strategies) {
        StrategyReport sr;
        sr.strategy = st;
        OrientationResult orient = build_strategy_orientation(r.instance, st);
        sr.coverage = orient.coverage;
        sr.outdegree_profile = outdegree_profile(orient.digraph);
        sr.max_outdegree = max_outdegree(orient.digraph);
        sr.kernel = kernel_perfect(orient.digraph, ksweep);
        sr.lemma1_bound = lemma1_bound(orient.digraph);
        sr.lemma1_valid = sr.kernel.status == KernelVerdict::Status::KernelPerfect;
        r.strategies.push_back(std::move(sr));
    }

    r.omega = clique_number(g);
    check_clique(g, r.omega.witness);
    r.chi = chromatic_number(g);
    check_coloring(g, r.chi.coloring, r.chi.chi);
    if (r.omega.size > r.chi.chi) throw std::logic_error("verify: omega exceeds chi");

    const Claim claim = r.instance.claim;
    ChSummary ch;
    ch.lower = r.chi.chi;
    ch.upper = std::max(g.max_degree() + 1, ch.lower);
    ch.skipped = opts.skip_ch;

    ChoosabilityOptions copts;
    copts.threads = opts.threads;

    unsigned long long used = 0;
    const auto run_level = [&](int k) {
        copts.budget_nodes = opts.budget_nodes > used ? opts.budget_nodes - used : 0;
        ChoosabilityVerdict v = is_f_choosable(g, k, copts);
        used += v.nodes_expanded;
        ch.nodes_expanded += v.nodes_expanded;
        ch.levels.emplace_back(k, choosability_status_name(v.status));
        switch (v.status) {
            case ChoosabilityVerdict::Status::Choosable:
                ch.upper = std::min(ch.upper, k);
                break;
            case ChoosabilityVerdict::Status::NotChoosable:
                if (k + 1 > ch.lower) {
                    ch.lower = k + 1;
                    ch.refuting_lists = v.bad_lists;
                }
                break;
            case ChoosabilityVerdict::Status::BudgetExceeded:
                ch.budget_limited = true;
                break;
        }
        return v.status;
    };

    if (!opts.skip_ch) {
        const auto status = run_level(claim.value);
        // equality claims may still need the lower side decided
        if (claim.kind == Claim::Kind::Equals && status == ChoosabilityVerdict::Status::Choosable &&
            ch.lower < claim.value)
            run_level(claim.value - 1);
    }
    r.ch = ch;

    // Lemma 1 consistency: a certified kernel-perfect orientation caps ch
    for (const StrategyReport& sr : r.strategies)
        if (sr.lemma1_valid && r.ch.lower > sr.lemma1_bound)
            throw std::logic_error("verify: oracle ch lower bound exceeds a certified lemma-1 bound");
    if (r.ch.upper < r.ch.lower) throw std::logic_error("verify: ch bounds crossed");

    // settle the claim
    int kp_bound = -1;  // best certified kernel-perfect lemma-1 bound
    for (const StrategyReport& sr : r.strategies)
        if (sr.lemma1_valid && (kp_bound < 0 || sr.lemma1_bound < kp_bound)) kp_bound = sr.lemma1_bound;

    if (claim.kind == Claim::Kind::Equals) {
        const int c = claim.value;
        if (r.chi.chi > c) {
            r.agreement = Agreement::Refuted;
            r.ch.refuting_lists = uniform_refutation(g, c);
            if (r.omega.size > c) r.refuting_clique = r.omega.witness;
            r.agreement_reason = "chi = " + std::to_string(r.chi.chi) + " exceeds the claimed ch = " +
                                 std::to_string(c) + "; identical lists {0.." + std::to_string(c - 1) +
                                 "} re-verified uncolorable";
        } else if (r.ch.lower > c) {
            r.agreement = Agreement::Refuted;
            r.agreement_reason = "the " + std::to_string(c) +
                                 "-choosability oracle found re-verified bad lists, so ch > " +
                                 std::to_string(c);
        } else if (r.ch.lower == c && r.ch.upper == c) {
            r.agreement = Agreement::Confirmed;
            r.agreement_reason = "exact computation: ch = " + std::to_string(c);
        } else {
            r.agreement = Agreement::Undetermined;
            r.agreement_reason = "certified ch interval [" + std::to_string(r.ch.lower) + "," +
                                 std::to_string(r.ch.upper) + "] does not settle ch = " +
                                 std::to_string(c);
        }
    } else {
        const int b = claim.value;
        if (r.chi.chi > b) {
            r.agreement = Agreement::Refuted;
            r.ch.refuting_lists = uniform_refutation(g, b);
            if (r.omega.size > b) r.refuting_clique = r.omega.witness;
            r.agreement_reason = "chi = " + std::to_string(r.chi.chi) + " exceeds the claimed bound " +
                                 std::to_string(b) + "; identical lists {0.." + std::to_string(b - 1) +
                                 "} re-verified uncolorable";
        } else if (r.ch.lower > b) {
            r.agreement = Agreement::Refuted;
            r.agreement_reason = "the " + std::to_string(b) +
                                 "-choosability oracle found re-verified bad lists, so ch > " +
                                 std::to_string(b);
        } else if (r.ch.upper <= b) {
            r.agreement = Agreement::Confirmed;
            r.agreement_reason = "exact computation: ch <= " + std::to_string(r.ch.upper);
        } else if (kp_bound >= 0 && kp_bound <= b) {
            r.agreement = Agreement::Confirmed;
            r.agreement_reason = "kernel-perfect orientation certified with max outdegree + 1 = " +
                                 std::to_string(kp_bound) + " <= " + std::to_string(b);
        } else {
            r.agreement = Agreement::Undetermined;
            r.agreement_reason = "no certified bound settles ch <= " + std::to_string(b);
        }
    }

    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Json report_to_json(const Report& r) {
    Json j;
    j["version"] = kVersion;
    j["theorem"] = theorem_name(r.instance.id);
    j["n"] = r.instance.n;
    j["spec"] = spec_to_json(r.instance.spec);
    if (!r.instance.s2.empty()) j["s2"] = r.instance.s2;
    j["claim"] = Json{{"kind", r.instance.claim.kind == Claim::Kind::Equals ? "equals" : "at_most"},
                      {"value", r.instance.claim.value},
                      {"text", r.instance.claim.to_string()}};
    j["graph"] = Json{{"vertices", r.instance.graph.order()},
                      {"edges", r.instance.graph.edge_count()},
                      {"max_degree", r.instance.graph.max_degree()},
                      {"components", r.components_count}};

    Json strategies = Json::array();
    for (const StrategyReport& sr : r.strategies) {
        Json s;
        s["strategy"] = sr.strategy.name();
        s["coverage"] = coverage_to_json(sr.coverage);
        Json profile = Json::object();
        for (auto [deg, count] : sr.outdegree_profile) profile[std::to_string(deg)] = count;
        s["outdegree_profile"] = std::move(profile);
        s["max_outdegree"] = sr.max_outdegree;
        s["kernel"] = kernel_verdict_to_json(sr.kernel);
        s["lemma1_bound"] = sr.lemma1_bound;
        s["lemma1_valid"] = sr.lemma1_valid;
        strategies.push_back(std::move(s));
    }
    j["strategies"] = std::move(strategies);

    j["exact"] = Json{{"omega", r.omega.size},
                      {"omega_witness", vertex_set_to_json(r.omega.witness)},
                      {"chi", r.chi.chi},
                      {"chi_witness", coloring_to_json(r.chi.coloring)}};
    Json ch;
    ch["skipped"] = r.ch.skipped;
    ch["lower"] = r.ch.lower;
    ch["upper"] = r.ch.upper;
    ch["exact"] = r.ch.exact();
    ch["budget_limited"] = r.ch.budget_limited;
    Json levels = Json::array();
    for (const auto& [k, status] : r.ch.levels)
        levels.push_back(Json{{"k", k}, {"status", status}});
    ch["levels"] = std::move(levels);
    if (r.ch.refuting_lists.has_value())
        ch["refuting_lists"] = lists_to_json(*r.ch.refuting_lists);
    ch["nodes_expanded"] = r.ch.nodes_expanded;
    j["ch"] = std::move(ch);

    j["agreement"] = agreement_name(r.agreement);
    j["agreement_reason"] = r.agreement_reason;
    if (r.refuting_clique.has_value())
        j["refuting_clique"] = vertex_set_to_json(*r.refuting_clique);

    j["run"] = Json{{"budget_nodes", r.budget_nodes},
                    {"budget_subsets", r.budget_subsets},
                    {"sampled", r.sampled},
                    {"seed", r.seed},
                    {"threads", r.threads},
                    {"wall_seconds", r.wall_seconds}};
    return j;
}

std::string report_summary(const Report& r) {
    std::ostringstream os;
    os << "theorem " << theorem_name(r.instance.id) << " at n = " << r.instance.n << ": claim "
       << r.instance.claim.to_string() << "\n";
    os << "graph: " << r.instance.graph.order() << " vertices, " << r.instance.graph.edge_count()
       << " edges, " << r.components_count
       << (r.components_count == 1 ? " component" : " components") << "\n";
    for (const StrategyReport& sr : r.strategies) {
        os << "strategy " << sr.strategy.name() << ": covered " << sr.coverage.covered << ", uncovered "
           << sr.coverage.uncovered.size() << ", bidirected " << sr.coverage.bidirected
           << ", max outdegree " << sr.max_outdegree << ", kernel "
           << kernel_status_name(sr.kernel.status);
        if (sr.kernel.witness.has_value()) os << " witness " << sr.kernel.witness->to_string();
        os << " (" << sr.kernel.subsets_checked << " supports)";
        if (!sr.coverage.rejected_directives.empty()) {
            os << ", rejected directives";
            for (int d : sr.coverage.rejected_directives) os << " " << d;
        }
        os << "; lemma-1 bound " << sr.lemma1_bound << (sr.lemma1_valid ? " (certified)" : " (not certified)")
           << "\n";
    }
    os << "omega = " << r.omega.size << " witness " << r.omega.witness.to_string() << ", chi = "
       << r.chi.chi << "\n";
    if (r.ch.skipped)
        os << "ch: skipped\n";
    else if (r.ch.exact())
        os << "ch = " << r.ch.lower << " (exact)\n";
    else
        os << "ch in [" << r.ch.lower << "," << r.ch.upper << "]"
           << (r.ch.budget_limited ? " (budget limited)" : "") << "\n";
    os << "agreement: " << agreement_name(r.agreement) << " -- " << r.agreement_reason << "\n";
    return os.str();
}

int report_exit_code(const Report& r) { return r.agreement == Agreement::Refuted ? 2 : 0; }

}  // namespace kcl
