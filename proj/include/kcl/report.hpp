// Copyright 2026 The KCL Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KCL_REPORT_HPP
#define KCL_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kcl/json_io.hpp"

namespace kcl {

inline constexpr const char* kVersion = "0.1.0";

struct StrategyReport {
    OrientationStrategy strategy;
    CoverageReport coverage;
    std::map<int, int> outdegree_profile;
    int max_outdegree = 0;
    KernelVerdict kernel;
    int lemma1_bound = 0;
    bool lemma1_valid = false;  // only kernel-perfect orientations bound ch
};

struct ChSummary {
    bool skipped = false;
    int lower = 1;                    // certified lower bound on ch
    int upper = 0;                    // certified upper bound on ch
    bool exact() const { return !skipped && lower == upper; }
    bool budget_limited = false;
    std::vector<std::pair<int, std::string>> levels;  // (k, status)
    std::optional<ListAssignment> refuting_lists;     // highest refuted level
    unsigned long long nodes_expanded = 0;
};

enum class Agreement { Confirmed, Refuted, Undetermined };
std::string agreement_name(Agreement a);

struct Report {
    TheoremInstance instance;
    int components_count = 0;
    std::vector<StrategyReport> strategies;
    CliqueResult omega;
    ChromaticResult chi;
    ChSummary ch;
    Agreement agreement = Agreement::Undetermined;
    std::string agreement_reason;
    std::optional<VertexSet> refuting_clique;  // clique larger than the claimed bound

    // run metadata
    unsigned long long budget_nodes = 0;
    unsigned long long budget_subsets = 0;
    bool sampled = false;
    std::uint64_t seed = 0;
    int threads = 0;
    double wall_seconds = 0.0;
};

struct VerifyOptions {
    std::vector<OrientationStrategy> strategies = {
        {OrientationStrategy::Kind::PaperLiteral, {}},
        {OrientationStrategy::Kind::Completed, {}},
        {OrientationStrategy::Kind::FullBidirect, {}},
    };
    bool skip_ch = false;
    unsigned long long budget_nodes = 100000000;
    KernelSweepOptions kernel;
    int threads = 0;
    TheoremOptions theorem;
};

/// The flagship pipeline: builds the theorem's graph, measures every
/// requested orientation strategy (coverage, outdegrees, exhaustive
/// kernel-perfectness), computes exact clique and chromatic numbers,
/// interrogates the choosability oracle at the claimed level, and
/// settles the claim. Confirmation requires an exact computation or a
/// certified kernel-perfect orientation; refutation always carries a
/// re-verified certificate.
Report verify_theorem(TheoremId id, int n, const VerifyOptions& opts = {});

Json report_to_json(const Report& r);
std::string report_summary(const Report& r);

/// 0 confirmed/undetermined, 2 refuted (CI contract).
int report_exit_code(const Report& r);

}  // namespace kcl

#endif  // KCL_REPORT_HPP
