#pragma once

// Independent checks of solver output, built on graph primitives and the decomposition validator.

#include <optional>
#include <string>
#include <vector>

#include "tvc/ear.hpp"
#include "tvc/graph.hpp"
#include "tvc/properties.hpp"
#include "tvc/redundancy.hpp"

namespace tvc {

struct VerifyResult {
    bool ok = true;
    std::string violation;        // first failed check
    bool two_edge_connected = false;  // auxiliary flag for subgraph checks

    explicit operator bool() const { return ok; }
};

namespace detail {

inline VerifyResult failed(std::string why) {
    VerifyResult r;
    r.ok = false;
    r.violation = std::move(why);
    return r;
}

}  // namespace detail

/// H must use only edges of g, span all of g's vertices, and be 2-connected.
inline VerifyResult verify_subgraph(const Graph& g, const std::vector<Edge>& h_edges) {
    for (const Edge& e : h_edges)
        if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || !g.has_edge(e)) return detail::failed("edge " + Graph::to_string(e) + " is not in the graph");
    Graph h;
    try {
        h = Graph(g.vertex_count(), h_edges);
    } catch (const GraphError& e) {
        return detail::failed(e.what());
    }
    VerifyResult r;
    r.two_edge_connected = is_two_edge_connected(h);
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == 0) {
            r.ok = false;
            r.violation = "vertex " + std::to_string(v) + " is not spanned";
            return r;
        }
    if (const auto why = two_connectivity_failure(h); !why.empty()) {
        r.ok = false;
        r.violation = why;
    }
    return r;
}

/// A decomposition of g must be a valid open ear-decomposition satisfying (E1)-(E7); (E1)
/// is checked only with a reference even-ear count. The host must have property (P).
inline VerifyResult verify_decomposition(const Graph& g, const EarDecomposition& ed, std::optional<int> phi_ref = std::nullopt) {
    if (auto v = validate(ed, g)) return detail::failed(v->describe());
    if (auto v = check_all_properties(ed, g, phi_ref)) return detail::failed(v->describe());
    if (auto w = check_property_P(g)) return detail::failed("host lacks property (P): redundant edge " + Graph::to_string(w->f()) + " (" + to_string(*w) + ")");
    VerifyResult r;
    r.two_edge_connected = true;
    return r;
}

}  // namespace tvc
