#pragma once

// Lower bounds on the size of a 2-connected spanning subgraph, the ratio function
// comparing them with the output size, and exhaustive oracles for small graphs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "tvc/ear.hpp"
#include "tvc/ear_search.hpp"
#include "tvc/graph.hpp"
#include "tvc/properties.hpp"

namespace tvc {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---------------------------------------------------------------------------
// The three bounds

struct PhiBound {
    int value = 0;
    bool exact = false;  // only an exact phi gives a valid lower bound
};

inline PhiBound bound_phi(const Graph& g, int phi_value, bool exact) { return {g.vertex_count() - 1 + phi_value, exact}; }

/// Inner vertices of pendant 3-ears, degree-2 inner vertices of 3-ears, and inner
/// vertices of 2-ears that are the first nontrivial ear attached to a 3-ear.
inline std::vector<Vertex> choose_W(const EarDecomposition& ed, const Graph& g) {
    const auto cls = classify(ed, g);
    std::vector<Vertex> W;
    for (int p = 0; p < static_cast<int>(ed.ears.size()); ++p) {
        const Ear& P = ed.ears[static_cast<size_t>(p)];
        if (!is_three_ear(P)) continue;
        for (Vertex t : P.inner())
            if (cls[p].pendant || g.degree(t) == 2) W.push_back(t);
        const int q = cls[p].first_nontrivial;
        if (q >= 0 && ed.ears[static_cast<size_t>(q)].length() == 2) W.push_back(ed.ears[static_cast<size_t>(q)].vertices[1]);
    }
    std::sort(W.begin(), W.end());
    W.erase(std::unique(W.begin(), W.end()), W.end());
    return W;
}

struct GargBound {
    int value = 0;
    int components = 0;  // q_W
    std::vector<Vertex> W;
};

/// |W| plus the number of components of G[W], for a proper subset W.
inline GargBound bound_garg(const Graph& g, const std::vector<Vertex>& W) {
    if (static_cast<int>(W.size()) >= g.vertex_count()) throw std::invalid_argument("W must be a proper subset of the vertices");
    GargBound b;
    b.W = W;
    if (W.empty()) return b;
    const auto sub = induced_subgraph(g, W);
    b.components = static_cast<int>(connected_components(sub.graph).size());
    b.value = static_cast<int>(sub.graph.vertex_count()) + b.components;
    return b;
}

struct NewBound {
    int value = 0;
    int k = 0;
    std::vector<int> ears;  // nonpendant 3-ears whose first attached ear has length 2 or 3
};

inline NewBound bound_new(const EarDecomposition& ed, const Graph& g) {
    const auto counts = count_three_ears(ed, g);
    return {g.vertex_count() - 1 + counts.b + counts.c, counts.b + counts.c, counts.short_first};
}

struct BoundReport {
    PhiBound phi_bound;
    int phi = 0;
    GargBound garg;
    NewBound fresh;
    int combined = 0;  // best valid lower bound
};

inline BoundReport compute_bounds(const EarDecomposition& ed, const Graph& g, int phi_value, bool phi_exact) {
    BoundReport r;
    r.phi = phi_value;
    r.phi_bound = bound_phi(g, phi_value, phi_exact);
    r.garg = bound_garg(g, choose_W(ed, g));
    r.fresh = bound_new(ed, g);
    // An upper estimate of phi is no lower bound; fall back to the trivial bound n.
    const int phi_part = phi_exact ? r.phi_bound.value : g.vertex_count();
    r.combined = std::max({phi_part, r.garg.value, r.fresh.value});
    return r;
}

inline void write_bound_report(std::ostream& out, const BoundReport& r) {
    out << "phi " << r.phi_bound.value << ' ' << (r.phi_bound.exact ? "exact" : "upper") << '\n';
    out << "garg " << r.garg.value << " W";
    for (Vertex v : r.garg.W) out << ' ' << v;
    out << '\n';
    out << "new " << r.fresh.value << " k " << r.fresh.k << '\n';
    out << "combined " << r.combined << '\n';
}

// ---------------------------------------------------------------------------
// Ratio function

/// Upper bound on the output size: 5/4 (n-1) + 3/4 phi + 1/2 (a+b+c+e).
inline Rational star_value(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e, std::int64_t n, std::int64_t phi) {
    return Rational(5, 4) * (n - 1) + Rational(3, 4) * phi + Rational(1, 2) * (a + b + c + e);
}

/// The upper bound divided by the best of the three lower bounds.
inline Rational f_ratio(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e, std::int64_t n, std::int64_t phi) {
    const std::int64_t den = std::max({n - 1 + phi, 3 * a + 4 * b + 2 * c + 2 * d + 2 * e, n - 1 + b + c});
    if (den <= 0) throw std::invalid_argument("f_ratio: denominator must be positive");
    return star_value(a, b, c, e, n, phi) / den;
}

inline bool ratio_feasible(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e, std::int64_t n, std::int64_t phi) {
    return a >= 0 && b >= 0 && c >= 0 && d >= 0 && e >= 0 && phi >= 0 && n >= 2 && 2 * a + 3 * b + 2 * c + 5 * d + 6 * e <= n - 1;
}

struct DualCheck {
    Rational x, y, z;
    std::vector<std::pair<std::string, Rational>> constraints;  // name, left-hand side
    std::vector<Rational> rhs;
    bool feasible = true;
    std::vector<std::string> tight;
};

/// The dual point (2/7, 2/7, 1/14) against the five constraints of the ratio LP.
inline DualCheck check_dual_witness(Rational x = Rational(2, 7), Rational y = Rational(2, 7), Rational z = Rational(1, 14)) {
    DualCheck d{x, y, z, {}, {}, true, {}};
    d.constraints = {{"3y+2z", 3 * y + 2 * z},
                     {"x+4y+3z", x + 4 * y + 3 * z},
                     {"x+2y+2z", x + 2 * y + 2 * z},
                     {"2y+5z", 2 * y + 5 * z},
                     {"2y+6z", 2 * y + 6 * z}};
    d.rhs = {Rational(1), Rational(1), Rational(1), Rational(0), Rational(1)};
    for (size_t i = 0; i < d.constraints.size(); ++i) {
        if (d.constraints[i].second < d.rhs[i]) d.feasible = false;
        if (d.constraints[i].second == d.rhs[i]) d.tight.push_back(d.constraints[i].first);
    }
    return d;
}

/// Dual objective (k-n+1)x + ky + (n-1)z.
inline Rational dual_objective(const DualCheck& d, std::int64_t k, std::int64_t n) {
    return (k - n + 1) * d.x + k * d.y + (n - 1) * d.z;
}

struct RatioSampleReport {
    DualCheck dual;
    Rational attainment;  // f(4,0,0,0,1,15,0)
    std::int64_t samples = 0;
    Rational max_seen{0};
    std::int64_t above = 0;  // samples with f > 10/7
    std::int64_t at_max = 0;
};

/// Dual check, attainment point, and random feasible points compared against 10/7.
inline RatioSampleReport verify_lemma107(std::int64_t samples, std::uint64_t seed) {
    RatioSampleReport r;
    r.dual = check_dual_witness();
    r.attainment = f_ratio(4, 0, 0, 0, 1, 15, 0);
    const Rational cap(10, 7);
    std::mt19937_64 rng(seed);
    auto record = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e, std::int64_t n, std::int64_t phi) {
        const Rational f = f_ratio(a, b, c, d, e, n, phi);
        ++r.samples;
        if (f > r.max_seen) r.max_seen = f;
        if (f > cap) ++r.above;
        if (f == cap) ++r.at_max;
    };
    record(4, 0, 0, 0, 1, 15, 0);
    std::uniform_int_distribution<int> kind(0, 3);
    for (std::int64_t s = 1; s < samples; ++s) {
        const std::int64_t budget = std::uniform_int_distribution<std::int64_t>(1, kind(rng) == 0 ? 40 : 2000)(rng);
        // spend the budget 2a+3b+2c+5d+6e <= n-1 in random order
        std::int64_t left = budget;
        std::int64_t cnt[5] = {0, 0, 0, 0, 0};
        const std::int64_t w[5] = {2, 3, 2, 5, 6};
        const int mode = kind(rng);
        for (int t : {0, 1, 2, 3, 4}) {
            const int i = mode == 3 ? 4 - t : t;
            const std::int64_t most = left / w[i];
            if (most == 0) continue;
            cnt[i] = std::uniform_int_distribution<std::int64_t>(0, most)(rng);
            left -= cnt[i] * w[i];
        }
        const std::int64_t phi = std::uniform_int_distribution<int>(0, 3)(rng) == 0
                                     ? 0
                                     : std::uniform_int_distribution<std::int64_t>(0, budget)(rng);
        record(cnt[0], cnt[1], cnt[2], cnt[3], cnt[4], budget + 1, phi);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Exhaustive oracles

namespace detail {

// Edge-subset search for the fewest edges with a property, by iterative deepening on the size.
class SubsetSearch {
  public:
    SubsetSearch(const Graph& g, bool need_two_connected) : g_(g), two_(need_two_connected) {
        edges_ = g.edges();
        // low-degree vertices first: their edges are the most constrained
        std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) {
            return std::min(g.degree(a.u), g.degree(a.v)) < std::min(g.degree(b.u), g.degree(b.v));
        });
        state_.assign(edges_.size(), 0);
    }

    std::optional<std::vector<Edge>> find(int size) {
        size_ = size;
        inc_deg_.assign(static_cast<size_t>(g_.vertex_count()), 0);
        avail_deg_.assign(static_cast<size_t>(g_.vertex_count()), 0);
        for (Vertex v = 0; v < g_.vertex_count(); ++v) avail_deg_[static_cast<size_t>(v)] = g_.degree(v);
        std::fill(state_.begin(), state_.end(), 0);
        included_ = 0;
        if (recurse(0)) return chosen();
        return std::nullopt;
    }

  private:
    std::vector<Edge> chosen() const {
        std::vector<Edge> out;
        for (size_t i = 0; i < edges_.size(); ++i)
            if (state_[i] == 1) out.push_back(edges_[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool satisfied() const {
        const auto sel = chosen();
        const Graph h(g_.vertex_count(), sel);
        if (two_) return is_two_connected(h);
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) < 2) return false;
        return true;
    }

    bool still_possible(size_t from) const {
        if (!two_) return true;
        std::vector<Edge> keep;
        for (size_t i = 0; i < edges_.size(); ++i)
            if (state_[i] == 1 || i >= from) keep.push_back(edges_[i]);
        return is_two_connected(Graph(g_.vertex_count(), keep));
    }

    bool recurse(size_t i) {
        int deficit = 0;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (avail_deg_[static_cast<size_t>(v)] < 2) return false;
            deficit += std::max(0, 2 - inc_deg_[static_cast<size_t>(v)]);
        }
        if (included_ + (deficit + 1) / 2 > size_) return false;
        if (included_ == size_ || i == edges_.size()) return deficit == 0 && satisfied();
        const Edge e = edges_[i];
        // include
        state_[i] = 1;
        ++included_;
        ++inc_deg_[static_cast<size_t>(e.u)], ++inc_deg_[static_cast<size_t>(e.v)];
        if (recurse(i + 1)) return true;
        --inc_deg_[static_cast<size_t>(e.u)], --inc_deg_[static_cast<size_t>(e.v)];
        --included_;
        // exclude
        state_[i] = 2;
        --avail_deg_[static_cast<size_t>(e.u)], --avail_deg_[static_cast<size_t>(e.v)];
        if (avail_deg_[static_cast<size_t>(e.u)] >= 2 && avail_deg_[static_cast<size_t>(e.v)] >= 2 && still_possible(i + 1) &&
            recurse(i + 1))
            return true;
        ++avail_deg_[static_cast<size_t>(e.u)], ++avail_deg_[static_cast<size_t>(e.v)];
        state_[i] = 0;
        return false;
    }

    const Graph& g_;
    bool two_;
    std::vector<Edge> edges_;
    std::vector<char> state_;  // 0 undecided, 1 in, 2 out
    std::vector<int> inc_deg_, avail_deg_;
    int included_ = 0;
    int size_ = 0;
};

}  // namespace detail

struct OptResult {
    int value = 0;
    std::vector<Edge> witness;
};

inline constexpr int default_opt_limit = 13;

/// Fewest edges of a 2-connected spanning subgraph, by edge-subset branch and bound.
inline OptResult opt_exact(const Graph& g, int limit = default_opt_limit) {
    if (!is_two_connected(g)) throw GraphError("opt_exact: graph is not 2-connected (" + two_connectivity_failure(g) + ")");
    if (g.vertex_count() > limit)
        throw SizeLimitError("opt_exact: " + std::to_string(g.vertex_count()) + " vertices exceeds the limit " + std::to_string(limit));
    int lower = g.vertex_count();
    if (g.vertex_count() <= default_exhaustive_limit) lower = std::max(lower, g.vertex_count() - 1 + phi_exact(g));
    detail::SubsetSearch search(g, true);
    for (int k = lower; k <= g.edge_count(); ++k)
        if (auto w = search.find(k)) return {k, *w};
    throw std::logic_error("opt_exact: the whole graph should qualify");
}

/// Fewest edges of a spanning subgraph with minimum degree 2.
inline OptResult l_d2_exact(const Graph& g, int limit = 16) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2) throw GraphError("l_d2_exact: vertex " + std::to_string(v) + " has degree below 2");
    if (g.vertex_count() > limit)
        throw SizeLimitError("l_d2_exact: " + std::to_string(g.vertex_count()) + " vertices exceeds the limit " + std::to_string(limit));
    detail::SubsetSearch search(g, false);
    for (int k = g.vertex_count(); k <= g.edge_count(); ++k)
        if (auto w = search.find(k)) return {k, *w};
    throw std::logic_error("l_d2_exact: the whole graph should qualify");
}

/// L_D2 = n certified by a 2-regular spanning witness; nullopt if the witness is not one.
inline std::optional<int> l_d2_from_witness(const Graph& g, const std::vector<Edge>& witness) {
    std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
    for (const Edge& e : witness) {
        if (!g.has_edge(e)) return std::nullopt;
        ++deg[static_cast<size_t>(e.u)], ++deg[static_cast<size_t>(e.v)];
    }
    for (int d : deg)
        if (d != 2) return std::nullopt;
    return g.vertex_count();
}

/// A set of at most two vertices that is one of at least three components of G - {s, t}.
struct Beta {
    Vertex s = -1, t = -1;
    std::vector<Vertex> vertices;
};

inline std::vector<Beta> find_betas(const Graph& g) {
    std::vector<Beta> out;
    const int n = g.vertex_count();
    std::vector<char> removed(static_cast<size_t>(n), 0);
    std::vector<int> label;
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = s + 1; t < n; ++t) {
            removed[static_cast<size_t>(s)] = removed[static_cast<size_t>(t)] = 1;
            const int count = detail::label_components(g, label, &removed);
            if (count >= 3) {
                std::vector<std::vector<Vertex>> parts(static_cast<size_t>(count));
                for (Vertex v = 0; v < n; ++v)
                    if (label[static_cast<size_t>(v)] >= 0) parts[static_cast<size_t>(label[static_cast<size_t>(v)])].push_back(v);
                for (auto& p : parts)
                    if (p.size() <= 2) out.push_back({s, t, p});
            }
            removed[static_cast<size_t>(s)] = removed[static_cast<size_t>(t)] = 0;
        }
    return out;
}

// ---------------------------------------------------------------------------
// Edge-deletion certificate for the new bound

struct DeletionCertificate {
    bool ok = true;
    std::string failure;
    std::vector<std::pair<int, std::string>> steps;  // ear, case
    std::vector<Edge> deleted;
};

/// Deletes one edge of H per counted 3-ear (scanning ears in reverse) and checks that H stays connected.
inline DeletionCertificate new_bound_certificate(const EarDecomposition& ed, const Graph& g, const std::vector<Edge>& h_edges) {
    DeletionCertificate cert;
    const auto cls = classify(ed, g);
    std::vector<Edge> h = h_edges;
    std::sort(h.begin(), h.end());
    auto has = [&](Vertex a, Vertex b) { return std::binary_search(h.begin(), h.end(), Edge(a, b)); };
    auto fail = [&](int p, const std::string& why) {
        cert.ok = false;
        cert.failure = "ear " + std::to_string(p) + ": " + why;
        return cert;
    };
    for (int p = static_cast<int>(ed.ears.size()) - 1; p >= 0; --p) {
        const Ear& P = ed.ears[static_cast<size_t>(p)];
        if (!is_three_ear(P) || cls[p].pendant) continue;
        const auto l = label_three_ear(ed, cls, p);
        const Ear Q = ed.ears[static_cast<size_t>(l.q)].from(l.v);
        if (Q.length() != 2 && Q.length() != 3) continue;
        if (Q.last() != l.y) return fail(p, "first attached ear does not end in y");
        std::string label;
        Edge drop;
        if (Q.length() == 2) {
            label = "1";
            drop = Edge(Q.vertices[1], l.v);
        } else {
            const Vertex v2 = Q.vertices[1], w2 = Q.vertices[2];
            if (!cls[l.q].pendant) {
                label = "2";
                drop = Edge(v2, l.v);
            } else if (g.degree(w2) == 2) {
                label = "3.1";
                drop = Edge(v2, l.v);
            } else if (has(l.v, w2) && has(w2, v2) && has(v2, l.y)) {
                label = "3.2.1";
                drop = Edge(w2, v2);
            } else if (has(l.v, v2) && has(v2, w2) && has(w2, l.y)) {
                label = "3.2.2";
                drop = Edge(v2, w2);
            } else if (has(l.v, w2) && has(w2, l.y) && has(l.y, v2) && has(v2, l.v)) {
                label = "3.2.3";
                drop = Edge(l.v, v2);
            } else {
                return fail(p, "H matches none of the expected local shapes");
            }
        }
        if (!has(drop.u, drop.v)) return fail(p, "edge " + Graph::to_string(drop) + " is not in H (case " + label + ")");
        h.erase(std::lower_bound(h.begin(), h.end(), drop));
        if (!is_connected(Graph(g.vertex_count(), h))) return fail(p, "deleting " + Graph::to_string(drop) + " disconnects H (case " + label + ")");
        cert.steps.emplace_back(p, label);
        cert.deleted.push_back(drop);
    }
    return cert;
}

}  // namespace tvc
