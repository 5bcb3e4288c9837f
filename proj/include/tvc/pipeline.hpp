#pragma once

// From a graph with property (P) to an ear-decomposition with (E1)-(E7).

#include <optional>
#include <stdexcept>
#include <string>

#include "tvc/ear.hpp"
#include "tvc/even_ears.hpp"
#include "tvc/graph.hpp"
#include "tvc/properties.hpp"
#include "tvc/rewrite.hpp"

namespace tvc {

struct PipelineOptions {
    Backend backend = Backend::heuristic;
    int oracle_limit = default_exhaustive_limit;
    HeuristicOptions heuristic;
    std::optional<EarDecomposition> start;  // use this decomposition instead of minimising even ears
    RewriteObserver observer;
};

struct PipelineResult {
    EarDecomposition ed;
    RewriteLog log;
    int phi_ref = 0;          // even ears of the starting decomposition
    bool phi_exact = false;   // phi_ref is known to equal phi(G)
    std::string e1_source;    // exact, heuristic or supplied
};

inline PipelineResult run_pipeline(const Graph& g, const PipelineOptions& opt = {}) {
    if (!is_two_connected(g)) throw GraphError("graph is not 2-connected (" + two_connectivity_failure(g) + ")");
    PipelineResult r;
    if (opt.start) {
        if (auto v = validate(*opt.start, g)) throw std::invalid_argument("supplied decomposition is invalid: " + v->describe());
        r.ed = *opt.start;
        r.phi_ref = count_even_ears(r.ed);
        r.phi_exact = r.phi_ref == 0;
        r.e1_source = "supplied";
    } else if (g.vertex_count() == 3) {
        r.ed.base = 0;
        r.ed.ears.push_back(Ear({0, 1, 2, 0}));
        r.phi_exact = true;
        r.e1_source = "exact";
        return r;
    } else {
        auto e1 = minimize_even_ears(g, opt.backend, opt.oracle_limit, opt.heuristic);
        r.ed = std::move(e1.ed);
        r.phi_ref = e1.even;
        r.phi_exact = e1.exact;
        r.e1_source = to_string(opt.backend);
    }
    const int initial_trivial = r.ed.trivial_count();
    const int max_trivial = g.edge_count() - g.vertex_count();
    for (;;) {
        std::optional<RewriteRecord> rec;
        if (!(rec = enforce_E2(r.ed, g, opt.observer)) && !(rec = enforce_E3(r.ed, g, opt.observer)) &&
            !(rec = enforce_E4(r.ed, g, opt.observer))) {
            auto more = enforce_E567(r.ed, g, opt.observer);
            if (more.empty()) break;
            r.log.insert(r.log.end(), more.begin(), more.end());
        } else {
            r.log.push_back(*rec);
        }
        if (r.ed.trivial_count() > max_trivial || r.ed.trivial_count() - initial_trivial > g.vertex_count() - 2)
            throw std::logic_error("trivial ears exceed the possible number");
    }
    if (count_even_ears(r.ed) > r.phi_ref) throw std::logic_error("rewrites increased the number of even ears");
    return r;
}

/// Edges of the nontrivial ears: a 2-connected spanning subgraph.
inline Graph nontrivial_subgraph(const EarDecomposition& ed, int vertex_count) {
    return Graph(vertex_count, ed.nontrivial_edges());
}

}  // namespace tvc
