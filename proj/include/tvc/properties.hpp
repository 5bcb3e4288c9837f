#pragma once

// Structural properties (E1)-(E7) of an open ear-decomposition, and the 3-ear counts a..e.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tvc/ear.hpp"
#include "tvc/graph.hpp"

namespace tvc {

/// Labels of a nonpendant 3-ear P = x,v,w,y whose first attached nontrivial ear Q ends in v.
struct ThreeEarLabels {
    Vertex x = -1, v = -1, w = -1, y = -1;
    int q = -1;  // index of Q
};

inline bool is_three_ear(const Ear& e) { return e.length() == 3; }

/// Orients a nonpendant 3-ear so that v is an endpoint of Q, preferring the second vertex of P.
inline ThreeEarLabels label_three_ear(const EarDecomposition& ed, const Classification& cls, int p) {
    const Ear& P = ed.ears[static_cast<size_t>(p)];
    ThreeEarLabels l;
    l.q = cls[p].first_nontrivial;
    const auto& pv = P.vertices;
    if (l.q < 0) {
        l.x = pv[0], l.v = pv[1], l.w = pv[2], l.y = pv[3];
        return l;
    }
    const Ear& Q = ed.ears[static_cast<size_t>(l.q)];
    if (Q.has_endpoint(pv[1]))
        l.x = pv[0], l.v = pv[1], l.w = pv[2], l.y = pv[3];
    else
        l.x = pv[3], l.v = pv[2], l.w = pv[1], l.y = pv[0];
    return l;
}

inline bool holds_E3(const EarDecomposition& ed, const ThreeEarLabels& l) {
    const Ear& Q = ed.ears[static_cast<size_t>(l.q)];
    return Q.other_endpoint(l.v) == l.y && l.y != l.x;
}

struct PropertyViolation {
    int property = 0;  // 1..7
    int ear = -1;
    int other = -1;    // second ear involved, if any
    std::string detail;

    std::string describe() const {
        std::string s = "(E" + std::to_string(property) + ") violated";
        if (ear >= 0) s += " at ear " + std::to_string(ear);
        if (other >= 0) s += " and ear " + std::to_string(other);
        if (!detail.empty()) s += ": " + detail;
        return s;
    }
};

namespace detail {

inline bool is_pendant_three_ear(const EarDecomposition& ed, const Classification& cls, int i) {
    return i >= 0 && is_three_ear(ed.ears[static_cast<size_t>(i)]) && cls[i].pendant;
}

inline std::vector<int> nontrivial_attached(const EarDecomposition& ed, const Classification& cls, int p) {
    std::vector<int> out;
    for (const auto& at : cls[p].attached)
        if (!ed.ears[static_cast<size_t>(at.ear)].is_trivial() &&
            std::find(out.begin(), out.end(), at.ear) == out.end())
            out.push_back(at.ear);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool only_pendant_three_ears_attached(const EarDecomposition& ed, const Classification& cls, int p) {
    for (int j : nontrivial_attached(ed, cls, p))
        if (!is_pendant_three_ear(ed, cls, j)) return false;
    return true;
}

inline bool neighbourhood_within(const Graph& g, Vertex x, std::initializer_list<Vertex> allowed) {
    for (Vertex y : g.neighbors(x))
        if (std::find(allowed.begin(), allowed.end(), y) == allowed.end()) return false;
    return true;
}

}  // namespace detail

/// A pair of different pendant 3-ears i < j with adjacent inner vertices vi (of i) and vj (of j).
struct PendantAdjacency {
    int i = -1, j = -1;
    Vertex vi = -1, vj = -1;
};

inline std::optional<PendantAdjacency> find_adjacent_pendant_three_ears(const EarDecomposition& ed, const Classification& cls,
                                                                      const Graph& g) {
    std::vector<int> pendant;
    for (int i = 0; i < static_cast<int>(ed.ears.size()); ++i)
        if (!ed.ears[static_cast<size_t>(i)].is_closed() && detail::is_pendant_three_ear(ed, cls, i)) pendant.push_back(i);
    for (size_t a = 0; a < pendant.size(); ++a)
        for (size_t b = a + 1; b < pendant.size(); ++b) {
            const auto& pi = ed.ears[static_cast<size_t>(pendant[a])].vertices;
            const auto& pj = ed.ears[static_cast<size_t>(pendant[b])].vertices;
            for (int s = 1; s <= 2; ++s)
                for (int t = 1; t <= 2; ++t)
                    if (g.has_edge(pi[static_cast<size_t>(s)], pj[static_cast<size_t>(t)]))
                        return PendantAdjacency{pendant[a], pendant[b], pi[static_cast<size_t>(s)], pj[static_cast<size_t>(t)]};
        }
    return std::nullopt;
}

enum class E4Status { not_applicable, holds, violated };

inline E4Status evaluate_E4(const EarDecomposition& ed, const Classification& cls, const Graph& g, int p, const ThreeEarLabels& l) {
    if (!detail::only_pendant_three_ears_attached(ed, cls, p)) return E4Status::not_applicable;
    const Ear Q = ed.ears[static_cast<size_t>(l.q)].from(l.v);
    if (!is_three_ear(Q) || Q.last() != l.y) return E4Status::not_applicable;
    const Vertex v2 = Q.vertices[1], w2 = Q.vertices[2];
    if (g.degree(w2) == 2) return E4Status::holds;
    const bool shape = g.degree(w2) == 3 && detail::neighbourhood_within(g, w2, {l.y, v2, l.v}) &&
                       detail::neighbourhood_within(g, v2, {l.v, w2, l.y});
    return shape ? E4Status::holds : E4Status::violated;
}

/// Checks one property. (E1) needs the reference number of even ears.
inline std::optional<PropertyViolation> check_property(const EarDecomposition& ed, const Graph& g, int which,
                                                       std::optional<int> phi_ref = std::nullopt) {
    if (which == 1) {
        if (auto v = validate(ed, g)) return PropertyViolation{1, v->ear, -1, v->describe()};
        const int even = count_even_ears(ed);
        if (!phi_ref) throw std::invalid_argument("(E1) check needs a reference even-ear count");
        if (even != *phi_ref)
            return PropertyViolation{1, -1, -1, std::to_string(even) + " even ears, reference " + std::to_string(*phi_ref)};
        return std::nullopt;
    }
    const auto cls = classify(ed, g);
    if (which == 2) {
        if (auto adj = find_adjacent_pendant_three_ears(ed, cls, g))
            return PropertyViolation{2, adj->i, adj->j, "edge " + std::to_string(adj->vi) + "-" + std::to_string(adj->vj)};
        return std::nullopt;
    }
    if (which < 3 || which > 7) throw std::invalid_argument("property index must be 1..7");
    for (int p = 0; p < static_cast<int>(ed.ears.size()); ++p) {
        const Ear& P = ed.ears[static_cast<size_t>(p)];
        if (!is_three_ear(P) || cls[p].pendant) continue;
        const auto l = label_three_ear(ed, cls, p);
        const Ear& Q = ed.ears[static_cast<size_t>(l.q)];
        switch (which) {
            case 3:
                if (!holds_E3(ed, l)) return PropertyViolation{3, p, l.q, "Q ends in " + std::to_string(Q.other_endpoint(l.v))};
                break;
            case 4:
                if (holds_E3(ed, l) && evaluate_E4(ed, cls, g, p, l) == E4Status::violated)
                    return PropertyViolation{4, p, l.q, "vertex " + std::to_string(Q.from(l.v).vertices[2])};
                break;
            case 5:
                if (detail::is_pendant_three_ear(ed, cls, l.q) && !detail::only_pendant_three_ears_attached(ed, cls, p))
                    return PropertyViolation{5, p, l.q, "a non-pendant-3-ear is attached"};
                break;
            case 6:
                if (g.degree(l.w) != 2) return PropertyViolation{6, p, -1, "vertex " + std::to_string(l.w) + " has degree " + std::to_string(g.degree(l.w))};
                break;
            case 7:
                if (Q.length() == 2 && g.degree(Q.vertices[1]) != 2)
                    return PropertyViolation{7, p, l.q, "vertex " + std::to_string(Q.vertices[1]) + " has degree " + std::to_string(g.degree(Q.vertices[1]))};
                break;
        }
    }
    return std::nullopt;
}

/// First violated property among (E1)..(E7); (E1) is skipped when no reference is given.
inline std::optional<PropertyViolation> check_all_properties(const EarDecomposition& ed, const Graph& g,
                                                             std::optional<int> phi_ref = std::nullopt) {
    for (int k = phi_ref ? 1 : 2; k <= 7; ++k)
        if (auto v = check_property(ed, g, k, phi_ref)) return v;
    if (!phi_ref)
        if (auto v = validate(ed, g)) return PropertyViolation{1, v->ear, -1, v->describe()};
    return std::nullopt;
}

/// a: pendant 3-ears; b..e: nonpendant 3-ears whose first attached nontrivial ear has length 2, 3, 4, >= 5.
struct EarCounts {
    int a = 0, b = 0, c = 0, d = 0, e = 0;
    int even = 0;
    std::vector<int> short_first;  // the b + c ears (first attached ear of length 2 or 3)

    friend bool operator==(const EarCounts&, const EarCounts&) = default;
};

inline EarCounts count_three_ears(const EarDecomposition& ed, const Graph& g) {
    const auto cls = classify(ed, g);
    EarCounts k;
    k.even = count_even_ears(ed);
    for (int p = 0; p < static_cast<int>(ed.ears.size()); ++p) {
        if (!is_three_ear(ed.ears[static_cast<size_t>(p)])) continue;
        if (cls[p].pendant) {
            ++k.a;
            continue;
        }
        const int len = ed.ears[static_cast<size_t>(cls[p].first_nontrivial)].length();
        if (len == 2) ++k.b, k.short_first.push_back(p);
        else if (len == 3) ++k.c, k.short_first.push_back(p);
        else if (len == 4) ++k.d;
        else ++k.e;
    }
    return k;
}

}  // namespace tvc
