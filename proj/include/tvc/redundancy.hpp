#pragma once

// Redundant edges of the two-degree-2-vertices pattern, and reduction to property (P).

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tvc/ear.hpp"
#include "tvc/graph.hpp"

namespace tvc {

/// Γ(a) = {c,d}, Γ(b) = {c,e}, and f = {d,e} is an edge. Canonical form has a < b.
struct PatternWitness {
    Vertex a = -1, b = -1, c = -1, d = -1, e = -1;

    Edge f() const { return Edge(d, e); }
    friend auto operator<=>(const PatternWitness&, const PatternWitness&) = default;
};

inline std::string to_string(const PatternWitness& w) {
    return "a=" + std::to_string(w.a) + " b=" + std::to_string(w.b) + " c=" + std::to_string(w.c) + " d=" + std::to_string(w.d) +
           " e=" + std::to_string(w.e);
}

inline bool is_pattern(const Graph& g, const PatternWitness& w) {
    const Vertex vs[] = {w.a, w.b, w.c, w.d, w.e};
    for (Vertex x : vs)
        if (!g.has_vertex(x)) return false;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (vs[i] == vs[j]) return false;
    auto gamma_is = [&](Vertex x, Vertex p, Vertex q) {
        return g.degree(x) == 2 && g.has_edge(x, p) && g.has_edge(x, q);
    };
    return gamma_is(w.a, w.c, w.d) && gamma_is(w.b, w.c, w.e) && g.has_edge(w.d, w.e);
}

/// All witnesses, ordered by (a, b, c, d, e).
inline std::vector<PatternWitness> find_patterns(const Graph& g) {
    std::vector<PatternWitness> out;
    const int n = g.vertex_count();
    for (Vertex c = 0; c < n; ++c) {
        std::vector<Vertex> twos;
        for (Vertex x : g.neighbors(c))
            if (g.degree(x) == 2) twos.push_back(x);
        for (size_t i = 0; i < twos.size(); ++i)
            for (size_t j = i + 1; j < twos.size(); ++j) {
                const Vertex a = twos[i], b = twos[j];
                auto other = [&](Vertex x) {
                    const auto nb = g.neighbors(x);
                    return nb[0] == c ? nb[1] : nb[0];
                };
                PatternWitness w{a, b, c, other(a), other(b)};
                if (is_pattern(g, w)) out.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// f is redundant iff (G - c) - f is connected (for a 2-connected host with the pattern).
inline bool is_redundant(const Graph& g, const PatternWitness& w) {
    if (!is_pattern(g, w)) throw GraphError("invalid pattern witness " + to_string(w));
    std::vector<char> removed(static_cast<size_t>(g.vertex_count()), 0);
    removed[static_cast<size_t>(w.c)] = 1;
    const Edge f = w.f();
    return component_count_without(g, removed, f) == 1;
}

struct Deletion {
    Edge edge;
    PatternWitness witness;
};

inline void write_deletion_log(std::ostream& out, const std::vector<Deletion>& log) {
    for (const auto& d : log)
        out << "del " << d.edge.u << ' ' << d.edge.v << " witness " << d.witness.a << ' ' << d.witness.b << ' ' << d.witness.c << '\n';
}

struct Reduction {
    Graph graph;
    std::vector<Deletion> log;
};

/// Deletes redundant pattern edges until none is left.
/// Pattern edges that are trivial ears of an open ear-decomposition go first; the rest are
/// tested one at a time against the current graph, re-finding patterns after every deletion.
inline Reduction reduce_to_property_P(const Graph& g) {
    if (!is_two_connected(g)) throw GraphError("reduce_to_property_P: graph is not 2-connected (" + two_connectivity_failure(g) + ")");
    Reduction r{g, {}};
    const auto ed = compute_open_ed(g);
    std::vector<Edge> trivial;
    for (const Ear& e : ed.ears)
        if (e.is_trivial()) trivial.push_back(Edge(e.first(), e.last()));
    std::sort(trivial.begin(), trivial.end());
    std::vector<Edge> drop;
    for (const auto& w : find_patterns(g)) {
        const Edge f = w.f();
        if (std::binary_search(trivial.begin(), trivial.end(), f) &&
            std::find_if(r.log.begin(), r.log.end(), [&](const Deletion& d) { return d.edge == f; }) == r.log.end()) {
            r.log.push_back({f, w});
            drop.push_back(f);
        }
    }
    if (!drop.empty()) r.graph = delete_edges(g, drop);
    for (bool again = true; again;) {
        again = false;
        for (const auto& w : find_patterns(r.graph)) {
            if (is_redundant(r.graph, w)) {
                r.log.push_back({w.f(), w});
                r.graph = delete_edge(r.graph, w.f());
                again = true;
                break;
            }
        }
    }
    return r;
}

/// The first pattern whose edge f is redundant, if any.
inline std::optional<PatternWitness> check_property_P(const Graph& g) {
    for (const auto& w : find_patterns(g))
        if (is_redundant(g, w)) return w;
    return std::nullopt;
}

}  // namespace tvc
