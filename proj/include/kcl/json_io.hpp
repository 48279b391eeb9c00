// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KCL_JSON_IO_HPP
#define KCL_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "kcl/cayley.hpp"
#include "kcl/choosability.hpp"
#include "kcl/graph.hpp"
#include "kcl/kernels.hpp"
#include "kcl/list_coloring.hpp"
#include "kcl/orientation.hpp"

namespace kcl {

// Ordered maps keep report output byte-stable across runs.
using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json vertex_set_to_json(VertexSet s);
VertexSet vertex_set_from_json(const Json& j);

Json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const Json& j);

Json spec_to_json(const CayleySpec& spec);
CayleySpec spec_from_json(const Json& j);

Json lists_to_json(const ListAssignment& L);
ListAssignment lists_from_json(const Json& j);

Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json kernel_verdict_to_json(const KernelVerdict& v);
Json choosability_verdict_to_json(const ChoosabilityVerdict& v);
Json coverage_to_json(const CoverageReport& c);

std::string kernel_status_name(KernelVerdict::Status s);
std::string choosability_status_name(ChoosabilityVerdict::Status s);

/// Parses a file; parse errors are reported with a 1-based line number.
Json parse_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace kcl

#endif  // KCL_JSON_IO_HPP
