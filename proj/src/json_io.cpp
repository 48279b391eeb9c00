// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#include "kcl/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace kcl {

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.order();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::from_edges(n, edges);
}

Json vertex_set_to_json(VertexSet s) { return Json(s.to_vector()); }

VertexSet vertex_set_from_json(const Json& j) {
    VertexSet s;
    for (const auto& v : j) s.add(v.get<int>());
    return s;
}

Json digraph_to_json(const Digraph& d) {
    Json j;
    j["n"] = d.order();
    Json arcs = Json::array();
    for (auto [v, u] : d.arcs()) arcs.push_back(Json::array({v, u}));
    j["arcs"] = std::move(arcs);
    j["underlying"] = graph_to_json(d.underlying());
    return j;
}

Digraph digraph_from_json(const Json& j) {
    Digraph d(graph_from_json(j.at("underlying")));
    if (j.at("n").get<int>() != d.order())
        throw std::runtime_error("digraph: n disagrees with the underlying graph");
    for (const auto& a : j.at("arcs")) d.add_arc(a.at(0).get<int>(), a.at(1).get<int>());
    return d;
}

Json spec_to_json(const CayleySpec& spec) {
    Json j;
    if (const auto* c = std::get_if<CirculantSpec>(&spec)) {
        j["family"] = "circulant";
        j["n"] = c->n;
        j["connection"] = c->connection;
    } else {
        const auto& d = std::get<DihedralSpec>(spec);
        j["family"] = "dihedral";
        j["n"] = d.n;
        j["rotations"] = d.rotations;
        j["reflections"] = d.reflections;
    }
    return j;
}

CayleySpec spec_from_json(const Json& j) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "circulant") {
        CirculantSpec c;
        c.n = j.at("n").get<int>();
        c.connection = j.at("connection").get<std::vector<int>>();
        c.validate();
        return c;
    }
    if (family == "dihedral") {
        DihedralSpec d;
        d.n = j.at("n").get<int>();
        d.rotations = j.at("rotations").get<std::vector<int>>();
        d.reflections = j.at("reflections").get<std::vector<int>>();
        d.validate();
        return d;
    }
    throw std::runtime_error("spec: unknown family '" + family + "'");
}

Json lists_to_json(const ListAssignment& L) {
    Json j;
    j["lists"] = L.lists;
    return j;
}

ListAssignment lists_from_json(const Json& j) {
    ListAssignment L;
    L.lists = j.at("lists").get<std::vector<std::vector<int>>>();
    L.normalize();
    return L;
}

Json coloring_to_json(const Coloring& c) {
    Json j;
    j["colors"] = c.colors;
    return j;
}

Coloring coloring_from_json(const Json& j) {
    Coloring c;
    c.colors = j.at("colors").get<std::vector<int>>();
    return c;
}

std::string kernel_status_name(KernelVerdict::Status s) {
    switch (s) {
        case KernelVerdict::Status::KernelPerfect: return "kernel_perfect";
        case KernelVerdict::Status::Counterexample: return "counterexample";
        case KernelVerdict::Status::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

std::string choosability_status_name(ChoosabilityVerdict::Status s) {
    switch (s) {
        case ChoosabilityVerdict::Status::Choosable: return "choosable";
        case ChoosabilityVerdict::Status::NotChoosable: return "not_choosable";
        case ChoosabilityVerdict::Status::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

Json kernel_verdict_to_json(const KernelVerdict& v) {
    Json j;
    j["status"] = kernel_status_name(v.status);
    if (v.witness.has_value()) j["witness"] = vertex_set_to_json(*v.witness);
    j["subsets_checked"] = v.subsets_checked;
    return j;
}

Json choosability_verdict_to_json(const ChoosabilityVerdict& v) {
    Json j;
    j["status"] = choosability_status_name(v.status);
    if (v.bad_lists.has_value()) j["bad_lists"] = lists_to_json(*v.bad_lists);
    j["assignments_checked"] = v.assignments_checked;
    j["nodes_expanded"] = v.nodes_expanded;
    return j;
}

Json coverage_to_json(const CoverageReport& c) {
    Json j;
    j["covered"] = c.covered;
    j["bidirected"] = c.bidirected;
    Json unc = Json::array();
    for (auto [u, v] : c.uncovered) unc.push_back(Json::array({u, v}));
    j["uncovered"] = std::move(unc);
    j["accepted_directives"] = c.accepted_directives;
    j["rejected_directives"] = c.rejected_directives;
    return j;
}

Json parse_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        // translate the byte offset into a line number
        std::ifstream again(path);
        std::size_t line = 1, seen = 0;
        char ch;
        while (seen + 1 < e.byte && again.get(ch)) {
            ++seen;
            if (ch == '\n') ++line;
        }
        throw std::runtime_error(path + ": line " + std::to_string(line) + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << j.dump(2) << "\n";
}

}  // namespace kcl
