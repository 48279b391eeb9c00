// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#include "kcl/dimacs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kcl {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::runtime_error("dimacs: line " + std::to_string(line) + ": " + what);
}

}  // namespace

void write_dimacs(std::ostream& os, const Graph& g) {
    const auto edges = g.edges();
    os << "p edge " << g.order() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) os << "e " << (u + 1) << " " << (v + 1) << "\n";
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream os;
    write_dimacs(os, g);
    return os.str();
}

Graph read_dimacs(std::istream& is) {
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1, seen = 0;
    Graph g;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) fail(lineno, "duplicate problem line");
            std::string fmt;
            if (!(ss >> fmt >> n >> m) || fmt != "edge")
                fail(lineno, "expected 'p edge <n> <m>'");
            if (n < 1 || n > 64) fail(lineno, "vertex count must be in [1,64]");
            if (m < 0) fail(lineno, "negative edge count");
            g = Graph(n);
        } else if (tag == "e") {
            if (n < 0) fail(lineno, "edge before problem line");
            int u = 0, v = 0;
            if (!(ss >> u >> v)) fail(lineno, "expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n) fail(lineno, "endpoint out of range");
            if (u == v) fail(lineno, "self-loop");
            g.add_edge(u - 1, v - 1);
            ++seen;
        } else {
            fail(lineno, "unknown line type '" + tag + "'");
        }
    }
    if (n < 0) throw std::runtime_error("dimacs: missing problem line");
    if (g.edge_count() != m && seen != m)
        throw std::runtime_error("dimacs: declared " + std::to_string(m) + " edges, found " +
                                 std::to_string(seen));
    return g;
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_dimacs(f);
}

void write_dimacs_file(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    write_dimacs(f, g);
}

}  // namespace kcl
