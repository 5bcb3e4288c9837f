#pragma once

// Rewrites that establish (E2)-(E7) while keeping the number of even ears.
//
// Each rewrite produces the new list of nontrivial ears, each with a preferred
// position, and assemble() re-sequences them: an ear must come after the ears
// owning its endpoints, otherwise ears keep their preferred order. Edges left
// over become trivial ears.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvc/ear.hpp"
#include "tvc/graph.hpp"
#include "tvc/properties.hpp"

namespace tvc {

class PropertyPViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

struct RewriteRecord {
    std::string lemma;    // E2, E3, E4, E567
    std::string case_id;  // e.g. 3.1, merge, 2.2
    int i = -1, j = -1;
    int trivial_delta = 0;
};

inline std::string to_string(const RewriteRecord& r) {
    std::ostringstream s;
    s << "apply " << r.lemma << " case " << r.case_id << " ears " << r.i << ',' << r.j << " trivial_delta " << r.trivial_delta;
    return s.str();
}

using RewriteLog = std::vector<RewriteRecord>;

/// Called after every rewrite with the decomposition before and after it.
using RewriteObserver = std::function<void(const RewriteRecord&, const EarDecomposition&, const EarDecomposition&)>;

namespace detail {

struct PlacedEar {
    Ear ear;
    double key = 0;  // preferred position
};

inline std::vector<PlacedEar> placed_nontrivial(const EarDecomposition& ed) {
    std::vector<PlacedEar> out;
    for (size_t i = 0; i < ed.ears.size(); ++i)
        if (!ed.ears[i].is_trivial()) out.push_back({ed.ears[i], static_cast<double>(i)});
    return out;
}

inline EarDecomposition assemble(const Graph& g, const EarDecomposition& old, std::vector<PlacedEar> ears) {
    std::erase_if(ears, [](const PlacedEar& p) { return p.ear.length() <= 1; });
    const int n = g.vertex_count();
    const size_t k = ears.size();
    std::vector<int> owner(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < k; ++i) {
        const auto& vs = ears[i].ear.vertices;
        for (size_t t = 1; t + 1 < vs.size(); ++t) {
            if (owner[static_cast<size_t>(vs[t])] != -1) throw std::logic_error("rewrite produced a vertex inner to two ears");
            owner[static_cast<size_t>(vs[t])] = static_cast<int>(i);
        }
    }
    std::vector<std::vector<size_t>> dependents(k);
    std::vector<int> waiting(k, 0);
    for (size_t i = 0; i < k; ++i) {
        const auto [a, b] = ears[i].ear.endpoints();
        for (Vertex p : {a, b}) {
            const int o = owner[static_cast<size_t>(p)];
            if (o < 0 || o == static_cast<int>(i)) continue;
            dependents[static_cast<size_t>(o)].push_back(i);
            ++waiting[i];
        }
    }
    using Item = std::pair<std::pair<int, double>, size_t>;  // (closed first, key), index
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    auto push = [&](size_t i) { ready.push({{ears[i].ear.is_closed() ? 0 : 1, ears[i].key}, i}); };
    for (size_t i = 0; i < k; ++i)
        if (waiting[i] == 0) push(i);
    EarDecomposition out;
    while (!ready.empty()) {
        const size_t i = ready.top().second;
        ready.pop();
        out.ears.push_back(ears[i].ear);
        for (size_t d : dependents[i])
            if (--waiting[d] == 0) push(d);
    }
    if (out.ears.size() != k) throw std::logic_error("rewrite produced cyclic ear dependencies");
    out.base = out.ears.empty() ? old.base : out.ears.front().first();
    std::vector<Edge> used;
    for (const Ear& e : out.ears)
        for (const Edge& f : e.edges()) used.push_back(f);
    std::sort(used.begin(), used.end());
    std::vector<Edge> placed;
    auto take = [&](const Edge& f) {
        if (std::binary_search(used.begin(), used.end(), f)) return;
        if (std::find(placed.begin(), placed.end(), f) != placed.end()) return;
        placed.push_back(f);
        out.ears.push_back(Ear({f.u, f.v}));
    };
    for (const Ear& e : old.ears)
        if (e.is_trivial()) take(Edge(e.first(), e.last()));
    std::vector<Edge> rest;
    for (const Edge& f : g.edges())
        if (!std::binary_search(used.begin(), used.end(), f)) rest.push_back(f);
    for (const Edge& f : rest) take(f);
    if (auto v = validate(out, g)) throw std::logic_error("rewrite produced an invalid decomposition: " + v->describe());
    return out;
}

inline double key_of(const std::vector<PlacedEar>& ears, const Ear& e) {
    for (const auto& p : ears)
        if (p.ear == e) return p.key;
    throw std::logic_error("ear not found");
}

inline void remove_ear(std::vector<PlacedEar>& ears, const Ear& e) {
    std::erase_if(ears, [&](const PlacedEar& p) { return p.ear == e; });
}

inline void replace_ear(std::vector<PlacedEar>& ears, const Ear& e, Ear by) {
    for (auto& p : ears)
        if (p.ear == e) {
            p.ear = std::move(by);
            return;
        }
    throw std::logic_error("ear not found");
}

inline double end_key(const EarDecomposition& ed) { return static_cast<double>(ed.ears.size()) + 1.0; }

inline RewriteRecord finish(EarDecomposition& ed, const Graph& g, std::vector<PlacedEar> ears, RewriteRecord rec,
                            const RewriteObserver& observer) {
    EarDecomposition next = assemble(g, ed, std::move(ears));
    rec.trivial_delta = next.trivial_count() - ed.trivial_count();
    if (observer) observer(rec, ed, next);
    ed = std::move(next);
    return rec;
}

inline Ear path_ear(std::initializer_list<Vertex> vs) { return Ear(std::vector<Vertex>(vs)); }

}  // namespace detail

/// One application of the adjacent-pendant-3-ears rewrite, if (E2) is violated.
/// Requires property (P); throws PropertyPViolation if the excluded configuration shows up.
inline std::optional<RewriteRecord> enforce_E2(EarDecomposition& ed, const Graph& g, const RewriteObserver& observer = {}) {
    const auto cls = classify(ed, g);
    const auto adj = find_adjacent_pendant_three_ears(ed, cls, g);
    if (!adj) return std::nullopt;
    const Ear Pi = ed.ears[static_cast<size_t>(adj->i)], Pj = ed.ears[static_cast<size_t>(adj->j)];
    auto orient = [](const Ear& P, Vertex v) { return P.vertices[1] == v ? P : P.reversed(); };
    const auto a = orient(Pi, adj->vi).vertices;
    const auto b = orient(Pj, adj->vj).vertices;
    Vertex x = a[0], v = a[1], w = a[2], y = a[3];
    Vertex x2 = b[0], v2 = b[1], w2 = b[2], y2 = b[3];
    RewriteRecord rec{"E2", "", adj->i, adj->j, 0};
    Ear P;
    if (y != y2) {
        rec.case_id = "1";
        P = detail::path_ear({y, w, v, v2, w2, y2});
    } else {
        std::string prefix = "3.";
        if (g.degree(w) == 2) {
            if (g.degree(w2) == 2)
                throw PropertyPViolation("adjacent pendant 3-ears " + std::to_string(adj->i) + "," + std::to_string(adj->j) +
                                         " with degree-2 vertices and a common endpoint: edge " + std::to_string(v) + "-" +
                                         std::to_string(v2) + " is redundant");
            std::swap(x, x2), std::swap(v, v2), std::swap(w, w2);
            prefix = "4.";
        }
        const std::vector<Vertex> both{x, v, w, y, x2, v2, w2};
        std::optional<Vertex> z;
        for (Vertex c : g.neighbors(w))
            if (std::find(both.begin(), both.end(), c) == both.end()) { z = c; break; }
        if (z) {
            rec.case_id = prefix + "1";
            P = detail::path_ear({*z, w, v, v2, w2, y});
        } else if (g.has_edge(w, x)) {
            rec.case_id = prefix + "2";
            P = detail::path_ear({x, w, v, v2, w2, y});
        } else if (g.has_edge(w, x2)) {
            rec.case_id = prefix + "3";
            P = detail::path_ear({x2, w, v, v2, w2, y});
        } else if (g.has_edge(w, v2)) {
            rec.case_id = prefix + "4";
            P = detail::path_ear({x, v, w, v2, w2, y});
        } else if (g.has_edge(w, w2)) {
            rec.case_id = prefix + "5";
            P = detail::path_ear({x, v, v2, w2, w, y});
        } else {
            throw std::logic_error("E2 rewrite: no case applies");
        }
    }
    auto ears = detail::placed_nontrivial(ed);
    detail::remove_ear(ears, Pi);
    detail::remove_ear(ears, Pj);
    ears.push_back({std::move(P), detail::end_key(ed)});
    return detail::finish(ed, g, std::move(ears), rec, observer);
}

/// One application of the first-attached-ear rewrite, if (E3) is violated.
inline std::optional<RewriteRecord> enforce_E3(EarDecomposition& ed, const Graph& g, const RewriteObserver& observer = {}) {
    const auto cls = classify(ed, g);
    for (int p = 0; p < static_cast<int>(ed.ears.size()); ++p) {
        const Ear P = ed.ears[static_cast<size_t>(p)];
        if (!is_three_ear(P) || cls[p].pendant) continue;
        const auto l = label_three_ear(ed, cls, p);
        if (holds_E3(ed, l)) continue;
        const Ear Q = ed.ears[static_cast<size_t>(l.q)];
        const Vertex o = Q.other_endpoint(l.v);
        RewriteRecord rec{"E3", "", p, l.q, 0};
        auto ears = detail::placed_nontrivial(ed);
        if (o == l.w) {
            rec.case_id = "vw";
            std::vector<Vertex> vs{l.x};
            const auto qv = Q.from(l.v).vertices;
            vs.insert(vs.end(), qv.begin(), qv.end());
            vs.push_back(l.y);
            detail::replace_ear(ears, P, Ear(std::move(vs)));
            detail::remove_ear(ears, Q);
        } else if (o == l.x) {
            rec.case_id = "xv";
            auto vs = Q.from(l.x).vertices;
            vs.push_back(l.w);
            vs.push_back(l.y);
            detail::replace_ear(ears, P, Ear(std::move(vs)));
            detail::remove_ear(ears, Q);
        } else {
            rec.case_id = "merge";
            auto vs = Q.from(o).vertices;
            vs.push_back(l.w);
            vs.push_back(l.y);
            detail::remove_ear(ears, P);
            detail::replace_ear(ears, Q, Ear(std::move(vs)));
        }
        return detail::finish(ed, g, std::move(ears), rec, observer);
    }
    return std::nullopt;
}

/// One application of the pendant-first-ear rewrite, if (E4) is violated. Requires (E2), (E3).
inline std::optional<RewriteRecord> enforce_E4(EarDecomposition& ed, const Graph& g, const RewriteObserver& observer = {}) {
    const auto cls = classify(ed, g);
    for (int p = 0; p < static_cast<int>(ed.ears.size()); ++p) {
        const Ear P = ed.ears[static_cast<size_t>(p)];
        if (!is_three_ear(P) || cls[p].pendant) continue;
        const auto l = label_three_ear(ed, cls, p);
        if (!holds_E3(ed, l) || evaluate_E4(ed, cls, g, p, l) != E4Status::violated) continue;
        const Ear Q = ed.ears[static_cast<size_t>(l.q)];
        const auto qv = Q.from(l.v).vertices;
        const Vertex v2 = qv[1], w2 = qv[2];
        const Vertex x = l.x, v = l.v, w = l.w, y = l.y;
        RewriteRecord rec{"E4", "", p, l.q, 0};
        Ear Pn;
        std::optional<Vertex> z;
        for (Vertex c : g.neighbors(w2))
            if (c != y && c != v2 && c != v) { z = c; break; }
        if (z) {
            if (*z == w) {
                rec.case_id = "1.1";
                Pn = detail::path_ear({x, v, v2, w2, w, y});
            } else {
                rec.case_id = "1.2";
                Pn = detail::path_ear({y, w, v, v2, w2, *z});
            }
        } else {
            for (Vertex c : g.neighbors(v2))
                if (c != v && c != w2 && c != y) { z = c; break; }
            if (!z) throw std::logic_error("E4 rewrite: no case applies");
            if (*z == w) {
                rec.case_id = "2.1";
                Pn = detail::path_ear({x, v, w, v2, w2, y});
            } else {
                rec.case_id = "2.2";
                Pn = detail::path_ear({y, w, v, w2, v2, *z});
            }
        }
        auto ears = detail::placed_nontrivial(ed);
        detail::replace_ear(ears, P, std::move(Pn));
        detail::remove_ear(ears, Q);
        return detail::finish(ed, g, std::move(ears), rec, observer);
    }
    return std::nullopt;
}

/// Path S grown from w along the first ear R attached at w, then through earlier ears,
/// until it reaches a vertex of the first p+1 ears (or the base).
struct GrownPath {
    std::vector<Vertex> vertices;  // w, ..., end
    int r = -1;                    // index of R
    struct Donor {
        int ear;
        std::vector<Vertex> rest;  // what remains of the donor after S takes its part
    };
    std::vector<Donor> donors;
};

inline GrownPath grow_S(const EarDecomposition& ed, const Graph& g, int p, Vertex w) {
    const auto cls = classify(ed, g);
    std::vector<char> in_x(static_cast<size_t>(g.vertex_count()), 0);
    in_x[static_cast<size_t>(ed.base)] = 1;
    for (int j = 0; j <= p; ++j)
        for (Vertex t : ed.ears[static_cast<size_t>(j)].vertices) in_x[static_cast<size_t>(t)] = 1;
    GrownPath s;
    for (int j = 0; j < static_cast<int>(ed.ears.size()); ++j)
        if (j != p && ed.ears[static_cast<size_t>(j)].has_endpoint(w)) { s.r = j; break; }
    if (s.r < 0) throw std::logic_error("grow_S: no ear ends in w");
    s.vertices = ed.ears[static_cast<size_t>(s.r)].from(w).vertices;
    Vertex a = s.vertices.back();
    int last_owner = s.r;
    while (!in_x[static_cast<size_t>(a)]) {
        const int o = cls.owner[static_cast<size_t>(a)];
        if (o < 0 || o >= last_owner) throw std::logic_error("grow_S: ear index did not decrease");
        last_owner = o;
        const auto& vs = ed.ears[static_cast<size_t>(o)].vertices;
        const size_t pos = static_cast<size_t>(std::find(vs.begin() + 1, vs.end() - 1, a) - vs.begin());
        const size_t to_front = pos, to_back = vs.size() - 1 - pos;
        bool forward;  // walk towards the last vertex
        const bool even_front = to_front % 2 == 0, even_back = to_back % 2 == 0;
        if (even_front != even_back)
            forward = even_back;
        else
            forward = vs.back() < vs.front();
        GrownPath::Donor d{o, {}};
        if (forward) {
            for (size_t t = pos + 1; t < vs.size(); ++t) s.vertices.push_back(vs[t]);
            d.rest.assign(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
        } else {
            for (size_t t = pos; t-- > 0;) s.vertices.push_back(vs[t]);
            d.rest.assign(vs.begin() + static_cast<std::ptrdiff_t>(pos), vs.end());
        }
        s.donors.push_back(std::move(d));
        a = s.vertices.back();
    }
    return s;
}

namespace detail {

// First nonpendant 3-ear violating (E5), (E6) or (E7), with the number of the first violated one.
inline std::optional<std::pair<int, int>> first_E567_violation(const EarDecomposition& ed, const Graph& g) {
    const auto cls = classify(ed, g);
    for (int p = 0; p < static_cast<int>(ed.ears.size()); ++p) {
        if (!is_three_ear(ed.ears[static_cast<size_t>(p)]) || cls[p].pendant) continue;
        const auto l = label_three_ear(ed, cls, p);
        const Ear& Q = ed.ears[static_cast<size_t>(l.q)];
        if (is_pendant_three_ear(ed, cls, l.q) && !only_pendant_three_ears_attached(ed, cls, p)) return std::pair{p, 5};
        if (g.degree(l.w) != 2) return std::pair{p, 6};
        if (Q.length() == 2 && g.degree(Q.vertices[1]) != 2) return std::pair{p, 7};
    }
    return std::nullopt;
}

inline RewriteRecord e567_step1(EarDecomposition& ed, const Graph& g, int p, const RewriteObserver& observer) {
    const auto cls = classify(ed, g);
    const auto attached = nontrivial_attached(ed, cls, p);
    int q2 = -1;
    for (int j : attached)
        if (!is_pendant_three_ear(ed, cls, j)) { q2 = j; break; }
    auto ears = placed_nontrivial(ed);
    const Ear target = ed.ears[static_cast<size_t>(q2)];
    const double after = key_of(ears, target) + 0.5;
    int moved = 0;
    for (int j : attached) {
        if (j > q2) break;
        if (j == q2) continue;
        for (auto& e : ears)
            if (e.ear == ed.ears[static_cast<size_t>(j)]) e.key = after + 1e-6 * ++moved;
    }
    return finish(ed, g, std::move(ears), RewriteRecord{"E567", "1", p, q2, 0}, observer);
}

inline RewriteRecord e567_step2(EarDecomposition& ed, const Graph& g, int p, const std::string& via,
                                  const RewriteObserver& observer) {
    const auto cls = classify(ed, g);
    const auto l = label_three_ear(ed, cls, p);
    const Ear P = ed.ears[static_cast<size_t>(p)];
    const Ear Q = ed.ears[static_cast<size_t>(l.q)];
    const GrownPath S = grow_S(ed, g, p, l.w);
    auto ears = placed_nontrivial(ed);
    const double pkey = key_of(ears, P);
    // donor remainders first, while the old ears are still recognisable
    for (const auto& d : S.donors) replace_ear(ears, ed.ears[static_cast<size_t>(d.ear)], Ear(d.rest));
    const Ear R = ed.ears[static_cast<size_t>(S.r)];
    if (!R.is_trivial()) remove_ear(ears, R);
    const Vertex s = S.vertices.back();
    std::vector<Vertex> vs;
    std::string case_id;
    if (s == l.v) {
        case_id = "2.2";
        vs.push_back(l.x);
        vs.insert(vs.end(), S.vertices.rbegin(), S.vertices.rend());
        vs.push_back(l.y);
    } else if (s == l.y) {
        case_id = "2.3";
        vs = {l.x, l.v};
        vs.insert(vs.end(), S.vertices.begin(), S.vertices.end());
    } else {
        case_id = "2.1";
        vs.assign(S.vertices.rbegin(), S.vertices.rend());
        const auto qv = Q.from(l.v).vertices;
        vs.insert(vs.end(), qv.begin(), qv.end());
        remove_ear(ears, Q);
    }
    remove_ear(ears, P);
    ears.push_back({Ear(std::move(vs)), pkey});
    return finish(ed, g, std::move(ears), RewriteRecord{"E567", via.empty() ? case_id : via + "+" + case_id, p, S.r, 0}, observer);
}

inline RewriteRecord e567_step3(EarDecomposition& ed, const Graph& g, int p, const RewriteObserver& observer) {
    const auto cls = classify(ed, g);
    const auto l = label_three_ear(ed, cls, p);
    const Ear P = ed.ears[static_cast<size_t>(p)];
    const Ear Q = ed.ears[static_cast<size_t>(l.q)];
    const Vertex v2 = Q.vertices[1];
    auto ears = placed_nontrivial(ed);
    replace_ear(ears, P, path_ear({l.x, l.v, v2, l.y}));
    replace_ear(ears, Q, path_ear({l.v, l.w, l.y}));
    EarDecomposition before = ed;
    ed = assemble(g, ed, std::move(ears));
    // P' keeps the position of P
    if (ed.ears[static_cast<size_t>(p)] != path_ear({l.x, l.v, v2, l.y})) throw std::logic_error("step 3 moved the new 3-ear");
    RewriteRecord rec = e567_step2(ed, g, p, "3", {});
    rec.trivial_delta = ed.trivial_count() - before.trivial_count();
    if (observer) observer(rec, before, ed);
    return rec;
}

}  // namespace detail

/// Establishes (E5), (E6), (E7), applying the (E3) rewrite whenever (E3) fails.
/// Throws if more than 2n iterations pass without a new trivial ear.
inline RewriteLog enforce_E567(EarDecomposition& ed, const Graph& g, const RewriteObserver& observer = {}) {
    RewriteLog log;
    const int budget = 2 * g.vertex_count();
    int idle = 0;
    for (;;) {
        while (auto r = enforce_E3(ed, g, observer)) {
            log.push_back(*r);
            idle = 0;
        }
        const auto bad = detail::first_E567_violation(ed, g);
        if (!bad) return log;
        if (++idle > budget) throw std::logic_error("E5-E7 rewrites made no progress within the iteration budget");
        const auto [p, which] = *bad;
        RewriteRecord rec;
        if (which == 5)
            rec = detail::e567_step1(ed, g, p, observer);
        else if (which == 6)
            rec = detail::e567_step2(ed, g, p, "", observer);
        else
            rec = detail::e567_step3(ed, g, p, observer);
        if (rec.trivial_delta > 0) idle = 0;
        if (rec.trivial_delta < 0) throw std::logic_error("E5-E7 rewrite lost a trivial ear");
        log.push_back(rec);
    }
}

}  // namespace tvc
