// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: graph generation, theorem verification,
// kernel checking, kernel-based coloring, and the choosability oracle.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcl/dimacs.hpp"
#include "kcl/report.hpp"

namespace {

using namespace kcl;

std::vector<int> parse_residues(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        if (!tok.empty()) out.push_back(std::stoi(tok));
        pos = comma + 1;
    }
    return out;
}

unsigned long long default_budget_nodes() {
    if (const char* env = std::getenv("KCL_BUDGET_NODES")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed KCL_BUDGET_NODES\n";
        }
    }
    return 100000000ULL;
}

void emit(const Json& j, const std::string& json_path) {
    if (json_path.empty() || json_path == "-")
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(json_path, j);
}

Graph load_graph(const std::string& path) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        return graph_from_json(parse_json_file(path));
    return read_dimacs_file(path);
}

struct GenOutput {
    std::string stem;
    Graph graph;
    CayleySpec spec;
};

int write_gen(const GenOutput& out) {
    const std::string dimacs_path = out.stem + ".dimacs";
    const std::string json_path = out.stem + ".json";
    write_dimacs_file(dimacs_path, out.graph);
    write_json_file(json_path, spec_to_json(out.spec));
    std::cout << "wrote " << dimacs_path << " and " << json_path << " (" << out.graph.order()
              << " vertices, " << out.graph.edge_count() << " edges)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kcl: kernels, Cayley graphs, and list-coloring verification"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = all available)")
        ->capture_default_str();

    // ----- gen -----
    auto* gen = app.add_subcommand("gen", "construct a graph family instance");
    gen->require_subcommand(1);
    struct {
        int n = 0, k = 0;
        std::string connection, rotations, reflections, s2, theorem, out;
        bool force = false, with_reflections = false;
    } g_args;

    auto* gen_circ = gen->add_subcommand("circulant", "circulant graph from a connection set");
    gen_circ->add_option("--n", g_args.n, "order")->required();
    gen_circ->add_option("--connection", g_args.connection, "comma-separated residues")->required();
    gen_circ->add_option("--out", g_args.out, "output stem (default <family>-<n>)");

    auto* gen_uni = gen->add_subcommand("unitary", "unitary Cayley graph X_n");
    gen_uni->add_option("--n", g_args.n, "order")->required();
    gen_uni->add_option("--out", g_args.out, "output stem");

    auto* gen_unc = gen->add_subcommand("unitary-complement", "complement of X_n");
    gen_unc->add_option("--n", g_args.n, "order")->required();
    gen_unc->add_option("--out", g_args.out, "output stem");

    auto* gen_pow = gen->add_subcommand("power", "k-th power of the n-cycle");
    gen_pow->add_option("--n", g_args.n, "order")->required();
    gen_pow->add_option("--k", g_args.k, "power")->required();
    gen_pow->add_option("--out", g_args.out, "output stem");

    auto* gen_dih = gen->add_subcommand("dihedral", "Cayley graph on the dihedral group D_2n");
    gen_dih->add_option("--n", g_args.n, "rotation order (2n vertices)")->required();
    gen_dih->add_option("--theorem", g_args.theorem, "generator sets of T4, C5, T6 or C7");
    gen_dih->add_option("--rotations", g_args.rotations, "comma-separated rotation residues");
    gen_dih->add_option("--reflections", g_args.reflections, "comma-separated reflection indices");
    gen_dih->add_option("--s2", g_args.s2, "extra inverse-closed residues for C5/C7");
    gen_dih->add_flag("--force", g_args.force, "skip the theorem preconditions");
    gen_dih->add_flag("--with-reflections", g_args.with_reflections,
                      "keep {r, r1} in the corollary graphs");
    gen_dih->add_option("--out", g_args.out, "output stem");

    // ----- verify -----
    auto* verify = app.add_subcommand("verify", "run the verification pipeline for a theorem claim");
    struct {
        std::string theorem;
        int n = 0;
        std::string s2;
        std::vector<std::string> strategies;
        bool skip_ch = false, force = false, sample = false, with_reflections = false;
        unsigned long long budget_nodes = default_budget_nodes();
        unsigned long long budget_subsets = 1000000;
        std::uint64_t seed = 0;
        std::string json_path;
    } v_args;
    verify->add_option("--theorem", v_args.theorem, "one of T2 T3 T4 C5 T6 C7")->required();
    verify->add_option("--n", v_args.n, "instance order")->required();
    verify->add_option("--s2", v_args.s2, "comma-separated S2 residues (C5/C7)");
    verify->add_option("--strategy", v_args.strategies,
                       "orientation strategies (paper_literal, completed, full_bidirect, reps=...)");
    verify->add_flag("--skip-ch", v_args.skip_ch, "skip the choosability oracle");
    verify->add_flag("--force", v_args.force, "bypass the theorem preconditions");
    verify->add_flag("--with-reflections", v_args.with_reflections,
                     "keep {r, r1} in the corollary graphs");
    verify->add_option("--budget-nodes", v_args.budget_nodes, "choosability node budget")
        ->capture_default_str();
    verify->add_option("--budget-subsets", v_args.budget_subsets, "sampled kernel supports")
        ->capture_default_str();
    verify->add_flag("--sample", v_args.sample, "sample kernel supports above the exhaustive cap");
    verify->add_option("--seed", v_args.seed, "sampling seed")->capture_default_str();
    verify->add_option("--json", v_args.json_path, "write the report JSON here ('-' for stdout)");

    // ----- kernel-check -----
    auto* kcheck = app.add_subcommand("kernel-check", "exhaustive kernel-perfectness of a digraph file");
    struct {
        std::string path;
        bool sample = false;
        unsigned long long budget_subsets = 1000000;
        std::uint64_t seed = 0;
        int cap = 22;
        std::string json_path;
    } k_args;
    kcheck->add_option("digraph", k_args.path, "digraph JSON file")->required();
    kcheck->add_flag("--sample", k_args.sample, "sample supports above the exhaustive cap");
    kcheck->add_option("--budget-subsets", k_args.budget_subsets, "sampled supports")
        ->capture_default_str();
    kcheck->add_option("--seed", k_args.seed, "sampling seed")->capture_default_str();
    kcheck->add_option("--cap", k_args.cap, "exhaustive sweep cap")->capture_default_str();
    kcheck->add_option("--json", k_args.json_path, "write the verdict JSON here");

    // ----- color -----
    auto* color = app.add_subcommand("color", "kernel-based list coloring of a digraph");
    struct {
        std::string digraph_path, lists_path, json_path;
    } c_args;
    color->add_option("digraph", c_args.digraph_path, "digraph JSON file")->required();
    color->add_option("lists", c_args.lists_path, "list assignment JSON file")->required();
    color->add_option("--json", c_args.json_path, "write the result JSON here");

    // ----- ch -----
    auto* ch = app.add_subcommand("ch", "choosability oracle on a graph file");
    struct {
        std::string path;
        int k = 0;
        bool exact = false;
        unsigned long long budget_nodes = default_budget_nodes();
        std::string json_path;
    } ch_args;
    ch->add_option("graph", ch_args.path, "graph file (DIMACS, or JSON by extension)")->required();
    ch->add_option("--k", ch_args.k, "decide k-choosability");
    ch->add_flag("--exact", ch_args.exact, "compute the choice number");
    ch->add_option("--budget-nodes", ch_args.budget_nodes, "enumeration node budget")
        ->capture_default_str();
    ch->add_option("--json", ch_args.json_path, "write the verdict JSON here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            GenOutput out;
            if (gen_circ->parsed()) {
                CirculantSpec spec{g_args.n, parse_residues(g_args.connection)};
                out = {g_args.out.empty() ? "circulant-" + std::to_string(g_args.n) : g_args.out,
                       circulant(spec), spec};
            } else if (gen_uni->parsed()) {
                out = {g_args.out.empty() ? "unitary-" + std::to_string(g_args.n) : g_args.out,
                       unitary(g_args.n), CirculantSpec{g_args.n, units(g_args.n)}};
            } else if (gen_unc->parsed()) {
                out = {g_args.out.empty() ? "unitary-complement-" + std::to_string(g_args.n)
                                          : g_args.out,
                       unitary_complement(g_args.n), CirculantSpec{g_args.n, nonunits(g_args.n)}};
            } else if (gen_pow->parsed()) {
                Graph pg = power_of_cycle(g_args.n, g_args.k);
                std::vector<int> conn;
                for (int j = 1; j <= g_args.k; ++j) {
                    conn.push_back(j);
                    conn.push_back(g_args.n - j);
                }
                std::sort(conn.begin(), conn.end());
                out = {g_args.out.empty() ? "power-" + std::to_string(g_args.n) + "-" +
                                                std::to_string(g_args.k)
                                          : g_args.out,
                       pg, CirculantSpec{g_args.n, conn}};
            } else if (gen_dih->parsed()) {
                if (!g_args.theorem.empty()) {
                    const auto id = parse_theorem(g_args.theorem);
                    if (!id.has_value()) throw std::invalid_argument("unknown theorem id");
                    TheoremOptions topts;
                    topts.s2 = parse_residues(g_args.s2);
                    topts.force = g_args.force;
                    topts.with_reflections = g_args.with_reflections;
                    TheoremInstance inst = theorem_graph(*id, g_args.n, topts);
                    out = {g_args.out.empty() ? "dihedral-" + g_args.theorem + "-" +
                                                    std::to_string(g_args.n)
                                              : g_args.out,
                           inst.graph, inst.spec};
                } else {
                    DihedralSpec spec{g_args.n, parse_residues(g_args.rotations),
                                      parse_residues(g_args.reflections)};
                    out = {g_args.out.empty() ? "dihedral-" + std::to_string(g_args.n) : g_args.out,
                           dihedral_cayley(spec), spec};
                }
            }
            return write_gen(out);
        }

        if (verify->parsed()) {
            const auto id = parse_theorem(v_args.theorem);
            if (!id.has_value())
                throw std::invalid_argument("unknown theorem id '" + v_args.theorem + "'");
            VerifyOptions opts;
            if (!v_args.strategies.empty()) {
                opts.strategies.clear();
                for (const std::string& s : v_args.strategies) {
                    const auto st = OrientationStrategy::parse(s);
                    if (!st.has_value())
                        throw std::invalid_argument("unknown strategy '" + s + "'");
                    opts.strategies.push_back(*st);
                }
            }
            opts.skip_ch = v_args.skip_ch;
            opts.budget_nodes = v_args.budget_nodes;
            opts.kernel.sample = v_args.sample;
            opts.kernel.sample_budget = v_args.budget_subsets;
            opts.kernel.seed = v_args.seed;
            opts.threads = threads;
            opts.theorem.s2 = parse_residues(v_args.s2);
            opts.theorem.force = v_args.force;
            opts.theorem.with_reflections = v_args.with_reflections;

            const Report rep = verify_theorem(*id, v_args.n, opts);
            std::cout << report_summary(rep);
            if (!v_args.json_path.empty()) emit(report_to_json(rep), v_args.json_path);
            return report_exit_code(rep);
        }

        if (kcheck->parsed()) {
            const Digraph d = digraph_from_json(parse_json_file(k_args.path));
            KernelSweepOptions opts;
            opts.exhaustive_cap = k_args.cap;
            opts.sample = k_args.sample;
            opts.sample_budget = k_args.budget_subsets;
            opts.seed = k_args.seed;
            opts.threads = threads;
            const KernelVerdict v = kernel_perfect(d, opts);
            emit(kernel_verdict_to_json(v), k_args.json_path);
            return v.status == KernelVerdict::Status::BudgetExceeded ? 3 : 0;
        }

        if (color->parsed()) {
            const Digraph d = digraph_from_json(parse_json_file(c_args.digraph_path));
            const ListAssignment L = lists_from_json(parse_json_file(c_args.lists_path));
            const GalvinResult res = galvin_color(d, L);
            Json j;
            if (res.success) {
                j["status"] = "colored";
                j["coloring"] = coloring_to_json(res.coloring);
                j["verified"] = verify_list_coloring(d.underlying(), L, res.coloring);
            } else {
                j["status"] = "no_kernel";
                j["support"] = vertex_set_to_json(res.missing_kernel_support);
                j["color"] = res.failed_color;
            }
            emit(j, c_args.json_path);
            return res.success ? 0 : 2;
        }

        if (ch->parsed()) {
            const Graph g = load_graph(ch_args.path);
            ChoosabilityOptions opts;
            opts.budget_nodes = ch_args.budget_nodes;
            opts.threads = threads;
            if (ch_args.exact == (ch_args.k > 0))
                throw std::invalid_argument("pass exactly one of --k or --exact");
            if (ch_args.k > 0) {
                const ChoosabilityVerdict v = is_f_choosable(g, ch_args.k, opts);
                Json j = choosability_verdict_to_json(v);
                j["k"] = ch_args.k;
                emit(j, ch_args.json_path);
                return v.status == ChoosabilityVerdict::Status::BudgetExceeded ? 3 : 0;
            }
            const ChoiceNumberResult res = choice_number(g, opts);
            Json j;
            j["lower"] = res.lower;
            j["upper"] = res.upper;
            j["exact"] = res.exact();
            if (res.exact()) j["choice_number"] = res.lower;
            j["budget_limited"] = res.budget_limited;
            Json levels = Json::array();
            for (const auto& [k, status] : res.levels)
                levels.push_back(Json{{"k", k}, {"status", choosability_status_name(status)}});
            j["levels"] = std::move(levels);
            if (res.refuting_lists.has_value())
                j["refuting_lists"] = lists_to_json(*res.refuting_lists);
            j["nodes_expanded"] = res.nodes_expanded;
            emit(j, ch_args.json_path);
            return res.budget_limited ? 3 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
