#pragma once

// End-to-end solver: reduction to property (P), decomposition pipeline, output subgraph,
// lower bounds and the ratio certificate.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvc/bounds.hpp"
#include "tvc/ear.hpp"
#include "tvc/graph.hpp"
#include "tvc/pipeline.hpp"
#include "tvc/properties.hpp"
#include "tvc/redundancy.hpp"

namespace tvc {

struct SolveOptions {
    Backend backend = Backend::heuristic;
    int oracle_limit = default_exhaustive_limit;
    HeuristicOptions heuristic;
    std::optional<EarDecomposition> start;  // starting decomposition of the reduced graph
};

struct SolveReport {
    Graph input;
    Reduction reduction;       // the graph with property (P) and the deleted edges
    PipelineResult run;
    std::vector<Edge> output;  // edges of H
    EarCounts counts;
    Rational star;             // upper bound on |E(H)| from the ear counts
    BoundReport bounds;
    Rational ratio_bound;      // star / combined lower bound
    DeletionCertificate new_bound_cert;
};

inline SolveReport solve(const Graph& g, const SolveOptions& opt = {}) {
    if (const auto why = two_connectivity_failure(g); !why.empty()) throw GraphError("graph is not 2-connected (" + why + ")");
    SolveReport r;
    r.input = g;
    r.reduction = reduce_to_property_P(g);
    const Graph& h = r.reduction.graph;
    PipelineOptions po;
    po.backend = opt.backend;
    po.oracle_limit = opt.oracle_limit;
    po.heuristic = opt.heuristic;
    if (opt.start) {
        if (!r.reduction.log.empty()) throw std::invalid_argument("a starting decomposition needs a graph that already has property (P)");
        po.start = opt.start;
    }
    r.run = run_pipeline(h, po);
    r.output = r.run.ed.nontrivial_edges();
    r.counts = count_three_ears(r.run.ed, h);
    const int n = h.vertex_count();
    r.star = star_value(r.counts.a, r.counts.b, r.counts.c, r.counts.e, n, r.counts.even);
    r.bounds = compute_bounds(r.run.ed, h, r.run.phi_ref, r.run.phi_exact);
    r.ratio_bound = r.star / r.bounds.combined;
    r.new_bound_cert = new_bound_certificate(r.run.ed, h, r.output);
    return r;
}

}  // namespace tvc
