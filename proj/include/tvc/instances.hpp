#pragma once

// Graph families: the tight family, the degree-2 lower-bound counterexample, the small
// figure graphs, and random 2-connected graphs. Figure families check their own structure.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvc/bounds.hpp"
#include "tvc/ear.hpp"
#include "tvc/ear_search.hpp"
#include "tvc/graph.hpp"
#include "tvc/properties.hpp"
#include "tvc/redundancy.hpp"

namespace tvc {

/// Raised when a generated instance misses one of its expected properties.
class SelfCheckError : public std::logic_error {
  public:
    SelfCheckError(const std::string& family, const std::string& clause)
        : std::logic_error(family + " self-check failed: " + clause) {}
};

using EdgeClasses = std::map<std::string, std::vector<Edge>>;

struct Instance {
    std::string family;
    Graph graph;
    std::optional<EarDecomposition> reference;  // decomposition shipped with the family
    std::vector<Edge> opt_witness;              // a known optimal 2-connected spanning subgraph
    EdgeClasses classes;                        // red, blue, dashed, solid, ...
};

namespace detail {

inline void self_check(bool ok, const std::string& family, const std::string& clause) {
    if (!ok) throw SelfCheckError(family, clause);
}

inline std::vector<Edge> cycle_edges(const std::vector<Vertex>& order) {
    std::vector<Edge> out;
    for (size_t i = 0; i < order.size(); ++i) out.emplace_back(order[i], order[(i + 1) % order.size()]);
    return out;
}

inline bool is_hamiltonian_cycle(const Graph& g, const std::vector<Edge>& edges) {
    const int n = g.vertex_count();
    if (static_cast<int>(edges.size()) != n) return false;
    for (const Edge& e : edges)
        if (!g.has_edge(e)) return false;
    const Graph c(n, edges);
    for (Vertex v = 0; v < n; ++v)
        if (c.degree(v) != 2) return false;
    return is_connected(c);
}

inline std::vector<Edge> edges_of(const std::vector<Ear>& ears) {
    std::vector<Edge> out;
    for (const Ear& e : ears)
        for (const Edge& f : e.edges()) out.push_back(f);
    return out;
}

inline bool has_adjacent_degree_two(const Graph& g) {
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == 2 && g.degree(e.v) == 2) return true;
    return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Tight family

inline std::int64_t tight_vertex_count(int k) { return 14LL * k + 5; }
inline std::int64_t tight_output_size(int k) { return 20LL * k + 5; }

/// A closed 5-ear, then per block a 3-ear F,p,q,L and a 5-ear F,r1,r2,r3,r4,q; the next block
/// uses F=r1, L=r4. Four pendant 3-ears from the second to the fifth vertex of the closed ear per
/// block, and trivial ears q-d1, d2-r4, r4-e1, e2-r3, r3-f1, f2-r2, r2-g1, g2-r1 joining each
/// block's pendant ears into a Hamiltonian cycle closed by r1-a of the last block.
inline Instance gen_tight(int k) {
    if (k < 1) throw std::invalid_argument("gen_tight: k must be at least 1");
    const std::string fam = "tight(" + std::to_string(k) + ")";
    const int n = static_cast<int>(tight_vertex_count(k));
    const Vertex a = 0, a2 = 1, a3 = 2, a4 = 3, a5 = 4;
    std::vector<Ear> nontrivial{Ear({a, a2, a3, a4, a5, a})};
    std::vector<Ear> pendant;
    std::vector<Edge> trivial;
    std::vector<Vertex> tour{a, a2, a3, a4, a5};
    Vertex F = a5, L = a2;
    for (int i = 0; i < k; ++i) {
        const Vertex b = 5 + 14 * i;
        const Vertex p = b, q = b + 1, r1 = b + 2, r2 = b + 3, r3 = b + 4, r4 = b + 5;
        const Vertex d1 = b + 6, d2 = b + 7, e1 = b + 8, e2 = b + 9, f1 = b + 10, f2 = b + 11, g1 = b + 12, g2 = b + 13;
        nontrivial.push_back(Ear({F, p, q, L}));
        nontrivial.push_back(Ear({F, r1, r2, r3, r4, q}));
        for (auto [x1, x2] : {std::pair{d1, d2}, {e1, e2}, {f1, f2}, {g1, g2}}) pendant.push_back(Ear({a2, x1, x2, a5}));
        for (auto [x, y] : {std::pair{q, d1}, {d2, r4}, {r4, e1}, {e2, r3}, {r3, f1}, {f2, r2}, {r2, g1}, {g2, r1}})
            trivial.emplace_back(x, y);
        for (Vertex v : {p, q, d1, d2, r4, e1, e2, r3, f1, f2, r2, g1, g2, r1}) tour.push_back(v);
        F = r1, L = r4;
    }
    trivial.emplace_back(F, a);

    Instance inst;
    inst.family = "tight";
    EarDecomposition ed;
    ed.base = a;
    ed.ears = nontrivial;
    ed.ears.insert(ed.ears.end(), pendant.begin(), pendant.end());
    for (const Edge& e : trivial) ed.ears.push_back(Ear({e.u, e.v}));
    auto edges = detail::edges_of(ed.ears);
    inst.graph = Graph(n, edges);
    inst.opt_witness = detail::cycle_edges(tour);
    std::sort(inst.opt_witness.begin(), inst.opt_witness.end());
    std::sort(trivial.begin(), trivial.end());
    inst.classes["dotted"] = trivial;
    inst.classes["red"] = detail::edges_of(pendant);

    const Graph& g = inst.graph;
    detail::self_check(g.vertex_count() == 14 * k + 5, fam, "n = 14k+5");
    detail::self_check(g.edge_count() == 28 * k + 6, fam, "28k+6 edges");
    detail::self_check(static_cast<int>(trivial.size()) == 8 * k + 1, fam, "8k+1 trivial ears");
    detail::self_check(is_two_connected(g), fam, "2-connected");
    detail::self_check(!check_property_P(g), fam, "property (P)");
    if (auto v = validate(ed, g)) detail::self_check(false, fam, "reference decomposition valid: " + v->describe());
    detail::self_check(static_cast<int>(ed.nontrivial_edges().size()) == 20 * k + 5, fam, "20k+5 nontrivial edges");
    if (auto v = check_all_properties(ed, g, 0)) detail::self_check(false, fam, "(E1)-(E7) with reference 0: " + v->describe());
    const auto counts = count_three_ears(ed, g);
    detail::self_check(counts.a == 4 * k && counts.e == k && counts.b + counts.c + counts.d == 0, fam, "a = 4k, e = k");
    detail::self_check(detail::is_hamiltonian_cycle(g, inst.opt_witness), fam, "Hamiltonian cycle");
    std::vector<Edge> dotted_in_tour;
    std::set_intersection(trivial.begin(), trivial.end(), inst.opt_witness.begin(), inst.opt_witness.end(),
                          std::back_inserter(dotted_in_tour));
    detail::self_check(dotted_in_tour.size() == trivial.size(), fam, "Hamiltonian cycle uses every trivial ear");
    inst.reference = std::move(ed);
    return inst;
}

// ---------------------------------------------------------------------------
// Degree-2 lower-bound counterexample

/// Three hubs h1,h2,h3 on a triangle and k pentagons p1..p5. Pentagon edge p3-p4 is blue, the
/// other four are red; red p1-h1; blue p3-h and p4-h with h = h3 for the first pentagon and
/// h = h2 for the rest. Triangle and pentagon edges form the dashed 2-factor.
inline Instance gen_vv(int k) {
    if (k < 1) throw std::invalid_argument("gen_vv: k must be at least 1");
    const std::string fam = "vv(" + std::to_string(k) + ")";
    const int n = 5 * k + 3;
    const Vertex h1 = 0, h2 = 1, h3 = 2;
    EdgeClasses cls;
    std::vector<Edge> dashed{Edge(h1, h2), Edge(h2, h3), Edge(h3, h1)};
    for (int i = 0; i < k; ++i) {
        const Vertex p1 = 3 + 5 * i, p2 = p1 + 1, p3 = p1 + 2, p4 = p1 + 3, p5 = p1 + 4;
        const Vertex hub = i == 0 ? h3 : h2;
        for (auto [x, y] : {std::pair{p1, p2}, {p2, p3}, {p4, p5}, {p5, p1}}) {
            cls["red"].emplace_back(x, y);
            dashed.emplace_back(x, y);
        }
        cls["blue"].emplace_back(p3, p4);
        dashed.emplace_back(p3, p4);
        cls["red"].emplace_back(p1, h1);
        cls["blue"].emplace_back(p3, hub);
        cls["blue"].emplace_back(p4, hub);
    }
    std::vector<Edge> all = dashed;
    for (const Edge& e : cls["red"])
        if (std::find(dashed.begin(), dashed.end(), e) == dashed.end()) all.push_back(e);
    for (const Edge& e : cls["blue"])
        if (std::find(dashed.begin(), dashed.end(), e) == dashed.end()) all.push_back(e);
    for (auto& [name, es] : cls) std::sort(es.begin(), es.end());
    std::sort(dashed.begin(), dashed.end());
    cls["dashed"] = dashed;

    Instance inst;
    inst.family = "vv";
    inst.graph = Graph(n, all);
    inst.classes = std::move(cls);
    const Graph& g = inst.graph;
    detail::self_check(g.vertex_count() == 5 * k + 3, fam, "n = 5k+3");
    detail::self_check(g.edge_count() == 8 * k + 3, fam, "8k+3 edges");
    detail::self_check(is_two_connected(g), fam, "2-connected");
    detail::self_check(find_betas(g).empty(), fam, "no beta");
    detail::self_check(!detail::has_adjacent_degree_two(g), fam, "no adjacent degree-2 vertices");
    detail::self_check(l_d2_from_witness(g, inst.classes["dashed"]) == n, fam, "dashed edges form a 2-regular spanning subgraph");
    return inst;
}

/// 7k / (5k+3): the forced edge count over the degree-2 bound.
inline Rational vv_ratio(int k) { return Rational(7 * k, 5 * k + 3); }

// ---------------------------------------------------------------------------
// Small figure graphs

/// 13 vertices: a 5-cycle a1..a5 and four 3-ears a4-b1-b2-a1, a4-c1-c2-b2, a3-d1-d2-a1,
/// a3-e1-e2-d2. Every open decomposition without even ears has a nonpendant 3-ear.
inline Instance gen_fig1(bool full_checks = true) {
    const std::string fam = "fig1";
    std::vector<Edge> edges = detail::cycle_edges({0, 1, 2, 3, 4});
    for (auto [x, y] : {std::pair{3, 5}, {5, 6}, {6, 0}, {3, 7}, {7, 8}, {8, 6}, {2, 9}, {9, 10}, {10, 0}, {2, 11}, {11, 12}, {12, 10}})
        edges.emplace_back(x, y);
    Instance inst;
    inst.family = "fig1";
    inst.graph = Graph(13, edges);
    const Graph& g = inst.graph;
    detail::self_check(is_two_connected(g), fam, "2-connected");
    detail::self_check(!check_property_P(g), fam, "no redundant pattern edge");
    if (full_checks) {
        detail::self_check(phi_exact(g, 13) == 0, fam, "phi = 0");
        detail::self_check(!find_odd_decomposition_with_pendant_three_ears(g, true, 13),
                           fam, "no open odd decomposition with only pendant 3-ears");
    }
    return inst;
}

/// 17 vertices: a closed 5-ear a1..a5 and a chain of six 3-ears a4-b1-b2-a1, b1-c1-c2-a1, ...,
/// f1-g1-g2-a1. Edges a4-b1, c1-d1, e1-f1 are dashed, the other 20 solid.
inline Instance gen_fig8() {
    const std::string fam = "fig8";
    EarDecomposition ed;
    ed.base = 0;
    ed.ears.push_back(Ear({0, 1, 2, 3, 4, 0}));
    Vertex prev = 3;  // a4
    for (int i = 0; i < 6; ++i) {
        const Vertex x1 = 5 + 2 * i, x2 = x1 + 1;
        ed.ears.push_back(Ear({prev, x1, x2, 0}));
        prev = x1;
    }
    Instance inst;
    inst.family = "fig8";
    inst.graph = Graph(17, detail::edges_of(ed.ears));
    const std::vector<Edge> dashed{Edge(3, 5), Edge(7, 9), Edge(11, 13)};
    for (const Edge& e : inst.graph.edges())
        inst.classes[std::find(dashed.begin(), dashed.end(), e) == dashed.end() ? "solid" : "dashed"].push_back(e);
    const Graph& g = inst.graph;
    detail::self_check(g.vertex_count() == 17 && g.edge_count() == 23, fam, "17 vertices, 23 edges");
    detail::self_check(!check_property_P(g), fam, "no redundant pattern edge");
    if (auto v = validate(ed, g)) detail::self_check(false, fam, "decomposition valid: " + v->describe());
    if (auto v = check_all_properties(ed, g, 0)) detail::self_check(false, fam, "(E1)-(E7): " + v->describe());
    detail::self_check(bound_new(ed, g).value == 21, fam, "new bound 21");
    const Graph solid(17, inst.classes["solid"]);
    detail::self_check(solid.edge_count() == 20, fam, "20 solid edges");
    detail::self_check(is_two_edge_connected(solid), fam, "solid subgraph 2-edge-connected");
    detail::self_check(!is_two_connected(solid), fam, "solid subgraph not 2-connected");
    inst.reference = std::move(ed);
    return inst;
}

// ---------------------------------------------------------------------------
// Random instances

struct RandomInstance {
    Graph graph;
    EarDecomposition ed;  // the construction's own open decomposition
};

/// A random cycle, then open ears (lengths biased to 2, 3 and 5) until n vertices are covered,
/// then up to extra_edges random chords as trivial ears. Vertex ids are shuffled.
inline RandomInstance gen_random_2connected_with_ed(int n, int extra_edges, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("gen_random_2connected: n must be at least 3");
    if (extra_edges < 0) throw std::invalid_argument("gen_random_2connected: extra_edges must be nonnegative");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto ear_length = [&]() {
        static constexpr int choices[] = {2, 2, 3, 3, 3, 5, 5, 4, 6, 7};
        return choices[pick(0, 9)];
    };

    std::vector<Vertex> label(static_cast<size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);

    EarDecomposition ed;
    int covered = std::min(n, pick(3, 6));
    {
        std::vector<Vertex> c;
        for (int i = 0; i < covered; ++i) c.push_back(label[static_cast<size_t>(i)]);
        c.push_back(c.front());
        ed.base = c.front();
        ed.ears.push_back(Ear(c));
    }
    std::vector<Edge> edges = ed.ears.front().edges();
    while (covered < n) {
        const int len = std::min(ear_length(), n - covered + 1);
        const int s = pick(0, covered - 1);
        int t = pick(0, covered - 2);
        if (t >= s) ++t;
        std::vector<Vertex> path{label[static_cast<size_t>(s)]};
        for (int i = 0; i < len - 1; ++i) path.push_back(label[static_cast<size_t>(covered++)]);
        path.push_back(label[static_cast<size_t>(t)]);
        Ear ear(path);
        for (const Edge& e : ear.edges()) edges.push_back(e);
        ed.ears.push_back(std::move(ear));
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Edge> absent;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!std::binary_search(sorted.begin(), sorted.end(), Edge(u, v))) absent.emplace_back(u, v);
    std::shuffle(absent.begin(), absent.end(), rng);
    absent.resize(std::min(absent.size(), static_cast<size_t>(extra_edges)));
    for (const Edge& e : absent) {
        edges.push_back(e);
        ed.ears.push_back(Ear({e.u, e.v}));
    }
    return {Graph(n, edges), std::move(ed)};
}

inline Graph gen_random_2connected(int n, int extra_edges, std::uint64_t seed) {
    return gen_random_2connected_with_ed(n, extra_edges, seed).graph;
}

/// A random open ear-decomposition of a 2-connected graph: a random cycle, then ears grown by
/// randomized depth- or breadth-first search through uncovered vertices, then trivial ears.
inline EarDecomposition random_open_ed(const Graph& g, std::uint64_t seed) {
    if (const auto why = two_connectivity_failure(g); !why.empty()) throw GraphError("random_open_ed: graph is not 2-connected (" + why + ")");
    const int n = g.vertex_count();
    std::mt19937_64 rng(seed);
    std::vector<char> covered(static_cast<size_t>(n), 0);

    // Search from `from` through uncovered vertices to a covered vertex other than `avoid`.
    auto find_path = [&](Vertex avoid, Vertex from, bool depth_first) -> std::vector<Vertex> {
        std::vector<Vertex> parent(static_cast<size_t>(n), -2);
        std::vector<Vertex> frontier{from};
        parent[static_cast<size_t>(from)] = -1;
        size_t head = 0;
        while (depth_first ? !frontier.empty() : head < frontier.size()) {
            Vertex x;
            if (depth_first) {
                x = frontier.back();
                frontier.pop_back();
            } else {
                x = frontier[head++];
            }
            std::vector<Vertex> nb(g.neighbors(x).begin(), g.neighbors(x).end());
            std::shuffle(nb.begin(), nb.end(), rng);
            for (Vertex y : nb) {
                if (y == avoid || parent[static_cast<size_t>(y)] != -2) continue;
                parent[static_cast<size_t>(y)] = x;
                if (covered[static_cast<size_t>(y)]) {
                    std::vector<Vertex> path;
                    for (Vertex z = y; z != -1; z = parent[static_cast<size_t>(z)]) path.push_back(z);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                frontier.push_back(y);
            }
        }
        return {};
    };

    EarDecomposition ed;
    ed.base = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    {
        // A cycle through the base: a path from a neighbour back to the base avoiding the edge.
        covered[static_cast<size_t>(ed.base)] = 1;
        const auto nb = g.neighbors(ed.base);
        const Vertex first = nb[std::uniform_int_distribution<size_t>(0, nb.size() - 1)(rng)];
        std::vector<Vertex> parent(static_cast<size_t>(n), -2);
        std::vector<Vertex> stack{first};
        parent[static_cast<size_t>(first)] = -1;
        std::vector<Vertex> cycle;
        const bool depth_first = rng() % 2 == 0;
        size_t head = 0;
        while (cycle.empty()) {
            Vertex x;
            if (depth_first) {
                x = stack.back();
                stack.pop_back();
            } else {
                x = stack[head++];
            }
            std::vector<Vertex> ns(g.neighbors(x).begin(), g.neighbors(x).end());
            std::shuffle(ns.begin(), ns.end(), rng);
            for (Vertex y : ns) {
                if (y == ed.base && x != first) {
                    for (Vertex z = x; z != -1; z = parent[static_cast<size_t>(z)]) cycle.push_back(z);
                    break;
                }
                if (y == ed.base || parent[static_cast<size_t>(y)] != -2) continue;
                parent[static_cast<size_t>(y)] = x;
                stack.push_back(y);
            }
        }
        std::vector<Vertex> vs{ed.base};
        for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) vs.push_back(*it);
        vs.push_back(ed.base);
        for (Vertex v : vs) covered[static_cast<size_t>(v)] = 1;
        ed.ears.push_back(Ear(vs));
    }
    int count = static_cast<int>(ed.ears.front().vertices.size()) - 1;
    while (count < n) {
        std::vector<Edge> exits;
        for (const Edge& e : g.edges())
            if (covered[static_cast<size_t>(e.u)] != covered[static_cast<size_t>(e.v)]) exits.push_back(e);
        const Edge e = exits[std::uniform_int_distribution<size_t>(0, exits.size() - 1)(rng)];
        const Vertex s = covered[static_cast<size_t>(e.u)] ? e.u : e.v;
        auto path = find_path(s, e.other(s), rng() % 2 == 0);
        if (path.empty()) throw std::logic_error("random_open_ed: no ear found in a 2-connected graph");
        path.insert(path.begin(), s);
        for (size_t i = 1; i + 1 < path.size(); ++i) covered[static_cast<size_t>(path[i])] = 1, ++count;
        ed.ears.push_back(Ear(path));
    }
    append_trivial_ears(ed, g);
    if (auto v = validate(ed, g)) throw std::logic_error("random_open_ed produced an invalid decomposition: " + v->describe());
    return ed;
}

}  // namespace tvc
