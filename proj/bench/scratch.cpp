// temporary exploration harness (removed before release)
#include <chrono>
#include <iostream>

#include "kcl/cayley.hpp"
#include "kcl/choosability.hpp"
#include "kcl/json_io.hpp"
#include "kcl/kernels.hpp"
#include "kcl/orientation.hpp"
#include "kcl/report.hpp"

using namespace kcl;

static double now_s() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

int main(int argc, char** argv) {
    const std::string what = argc > 1 ? argv[1] : "all";

    if (what == "t2ch" || what == "all") {
        // the flagship unknown: 3-choosability of unitary(9) = K_{3,3,3}
        Graph g = unitary(9);
        ChoosabilityOptions opts;
        opts.budget_nodes = 200000000ULL;
        double t = now_s();
        ChoosabilityVerdict v = is_f_choosable(g, 3, opts);
        t = now_s() - t;
        std::cout << "unitary(9) f=3: " << choosability_status_name(v.status)
                  << " nodes=" << v.nodes_expanded << " leaves=" << v.assignments_checked
                  << " time=" << t << "s\n";
        if (v.bad_lists.has_value()) std::cout << "bad lists: " << lists_to_json(*v.bad_lists).dump() << "\n";
        // serial agreement
        double t2 = now_s();
        ChoosabilityVerdict vs = is_f_choosable_serial(g, 3, opts);
        t2 = now_s() - t2;
        std::cout << "serial: " << choosability_status_name(vs.status) << " nodes=" << vs.nodes_expanded
                  << " leaves=" << vs.assignments_checked << " time=" << t2 << "s match="
                  << (v.nodes_expanded == vs.nodes_expanded &&
                      lists_to_json(*v.bad_lists) == lists_to_json(*vs.bad_lists))
                  << "\n";
    }

    if (what == "kernels" || what == "all") {
        for (auto id : {TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::T6}) {
            TheoremInstance inst = theorem_graph(id, 9);
            for (auto kind : {OrientationStrategy::Kind::PaperLiteral, OrientationStrategy::Kind::Completed,
                              OrientationStrategy::Kind::FullBidirect}) {
                OrientationStrategy st{kind, {}};
                OrientationResult r = build_strategy_orientation(inst, st);
                double t = now_s();
                KernelVerdict kv = kernel_perfect(r.digraph);
                t = now_s() - t;
                std::cout << theorem_name(id) << " " << st.name() << ": covered=" << r.coverage.covered
                          << " uncovered=" << r.coverage.uncovered.size()
                          << " bidir=" << r.coverage.bidirected << " maxout=" << max_outdegree(r.digraph)
                          << " kernel=" << kernel_status_name(kv.status);
                if (kv.witness) std::cout << " witness=" << kv.witness->to_string();
                std::cout << " checked=" << kv.subsets_checked << " time=" << t << "s\n";
            }
        }
    }

    if (what == "chi" || what == "all") {
        for (auto id : {TheoremId::T4, TheoremId::T6}) {
            TheoremInstance inst = theorem_graph(id, 9);
            std::cout << theorem_name(id) << "@9: omega=" << clique_number(inst.graph).size
                      << " chi=" << chromatic_number(inst.graph).chi
                      << " edges=" << inst.graph.edge_count() << "\n";
        }
        std::cout << "unitary(9): omega=" << clique_number(unitary(9)).size
                  << " chi=" << chromatic_number(unitary(9)).chi << "\n";
    }

    if (what == "t3" || what == "all") {
        double t = now_s();
        Report rep = verify_theorem(TheoremId::T3, 9);
        t = now_s() - t;
        std::cout << report_summary(rep) << "wall=" << t << "s\n";
    }
    return 0;
}
