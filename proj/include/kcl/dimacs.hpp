// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KCL_DIMACS_HPP
#define KCL_DIMACS_HPP

#include <iosfwd>
#include <string>

#include "kcl/graph.hpp"

namespace kcl {

// DIMACS undirected graph format: one "p edge <n> <m>" line, then m
// "e <u> <v>" lines with 1-indexed endpoints. The writer emits edges
// with u < v in lexicographic order; the reader accepts any order and
// "c" comment lines. See docs/formats.md for the exact byte layout.

void write_dimacs(std::ostream& os, const Graph& g);
std::string to_dimacs(const Graph& g);

/// Throws std::runtime_error with a line number on malformed input.
Graph read_dimacs(std::istream& is);
Graph read_dimacs_file(const std::string& path);
void write_dimacs_file(const std::string& path, const Graph& g);

}  // namespace kcl

#endif  // KCL_DIMACS_HPP
