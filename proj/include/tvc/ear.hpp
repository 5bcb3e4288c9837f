#pragma once

// Ear-decompositions: data model, validation, text serialization, construction
// of an open decomposition, and the attachment structure between ears.

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tvc/graph.hpp"

namespace tvc {

enum class EarKind { closed, open, trivial };

inline const char* to_string(EarKind k) {
    switch (k) {
        case EarKind::closed: return "closed";
        case EarKind::open: return "open";
        case EarKind::trivial: return "trivial";
    }
    return "?";
}

/// A path v0..vl (open or trivial) or a circuit with v0 == vl (closed).
struct Ear {
    std::vector<Vertex> vertices;

    Ear() = default;
    explicit Ear(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool is_closed() const { return vertices.size() > 2 && vertices.front() == vertices.back(); }
    bool is_trivial() const { return length() == 1; }
    bool is_even() const { return length() % 2 == 0; }
    EarKind kind() const { return is_closed() ? EarKind::closed : (is_trivial() ? EarKind::trivial : EarKind::open); }

    Vertex first() const { return vertices.front(); }
    Vertex last() const { return vertices.back(); }

    /// Endpoints; a closed ear reports its single endpoint twice.
    std::pair<Vertex, Vertex> endpoints() const { return {vertices.front(), vertices.back()}; }
    bool has_endpoint(Vertex x) const { return vertices.front() == x || vertices.back() == x; }
    Vertex other_endpoint(Vertex x) const { return vertices.front() == x ? vertices.back() : vertices.front(); }

    std::vector<Vertex> inner() const {
        if (vertices.size() <= 2) return {};
        return {vertices.begin() + 1, vertices.end() - 1};
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
        return out;
    }

    /// The same ear read from the other end.
    Ear reversed() const { return Ear(std::vector<Vertex>(vertices.rbegin(), vertices.rend())); }

    /// Orientation starting at `start`, which must be an endpoint.
    Ear from(Vertex start) const { return vertices.front() == start ? *this : reversed(); }

    friend bool operator==(const Ear&, const Ear&) = default;
};

struct EarDecomposition {
    Vertex base = 0;
    std::vector<Ear> ears;

    int nontrivial_count() const {
        return static_cast<int>(std::count_if(ears.begin(), ears.end(), [](const Ear& e) { return !e.is_trivial(); }));
    }
    int trivial_count() const { return static_cast<int>(ears.size()) - nontrivial_count(); }

    /// Edges of all nontrivial ears: the spanning subgraph the decomposition certifies.
    std::vector<Edge> nontrivial_edges() const {
        std::vector<Edge> out;
        for (const Ear& e : ears)
            if (!e.is_trivial())
                for (const Edge& f : e.edges()) out.push_back(f);
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const EarDecomposition&, const EarDecomposition&) = default;
};

inline int count_even_ears(const EarDecomposition& ed) {
    return static_cast<int>(std::count_if(ed.ears.begin(), ed.ears.end(), [](const Ear& e) { return e.is_even(); }));
}

// ---------------------------------------------------------------------------
// Validation

struct EarViolation {
    std::string clause;  // "ear shape", "prefix condition", "open decomposition", "trivial ears last", "edge partition", "vertex coverage"
    int ear = -1;
    std::string detail;

    std::string describe() const {
        return clause + (ear >= 0 ? " (ear " + std::to_string(ear) + ")" : std::string()) +
               (detail.empty() ? std::string() : ": " + detail);
    }
};

struct ValidateOptions {
    bool require_open = true;
    bool require_trivial_last = true;
};

/// Checks every defining condition of an ear-decomposition of g; reports the first violated clause.
inline std::optional<EarViolation> validate(const EarDecomposition& ed, const Graph& g, ValidateOptions opt = {}) {
    const int n = g.vertex_count();
    if (!g.has_vertex(ed.base)) return EarViolation{"vertex coverage", -1, "base vertex out of range"};
    std::vector<char> covered(static_cast<size_t>(n), 0);
    covered[static_cast<size_t>(ed.base)] = 1;
    std::vector<Edge> used;
    used.reserve(g.edges().size());
    bool seen_trivial = false;
    for (size_t i = 0; i < ed.ears.size(); ++i) {
        const Ear& ear = ed.ears[i];
        const int idx = static_cast<int>(i);
        if (ear.vertices.size() < 2) return EarViolation{"ear shape", idx, "fewer than two vertices"};
        for (Vertex x : ear.vertices)
            if (!g.has_vertex(x)) return EarViolation{"ear shape", idx, "vertex " + std::to_string(x) + " out of range"};
        for (const Edge& e : ear.edges())
            if (!g.has_edge(e)) return EarViolation{"ear shape", idx, Graph::to_string(e) + " is not a graph edge"};
        const bool closed = ear.vertices.front() == ear.vertices.back();
        if (closed && ear.vertices.size() < 4) return EarViolation{"ear shape", idx, "closed ear shorter than 3"};
        {
            std::vector<Vertex> body(ear.vertices.begin(), closed ? ear.vertices.end() - 1 : ear.vertices.end());
            std::sort(body.begin(), body.end());
            if (std::adjacent_find(body.begin(), body.end()) != body.end())
                return EarViolation{"ear shape", idx, "repeated vertex"};
        }
        if (closed && i > 0 && opt.require_open) return EarViolation{"open decomposition", idx, "closed ear after the first"};
        if (i == 0 && !closed) return EarViolation{"prefix condition", idx, "first ear must be a circuit through the base"};
        if (ear.is_trivial()) {
            seen_trivial = true;
        } else if (seen_trivial && opt.require_trivial_last) {
            return EarViolation{"trivial ears last", idx, "nontrivial ear after a trivial ear"};
        }
        const Vertex a = ear.vertices.front(), b = ear.vertices.back();
        if (!covered[static_cast<size_t>(a)] || !covered[static_cast<size_t>(b)])
            return EarViolation{"prefix condition", idx, "endpoint not previously covered"};
        for (size_t k = 1; k + 1 < ear.vertices.size(); ++k)
            if (covered[static_cast<size_t>(ear.vertices[k])])
                return EarViolation{"prefix condition", idx,
                                    "inner vertex " + std::to_string(ear.vertices[k]) + " already covered"};
        for (size_t k = 1; k + 1 < ear.vertices.size(); ++k) covered[static_cast<size_t>(ear.vertices[k])] = 1;
        for (const Edge& e : ear.edges()) used.push_back(e);
    }
    std::sort(used.begin(), used.end());
    if (auto it = std::adjacent_find(used.begin(), used.end()); it != used.end())
        return EarViolation{"edge partition", -1, Graph::to_string(*it) + " lies in two ears"};
    if (used.size() != g.edges().size()) {
        for (const Edge& e : g.edges())
            if (!std::binary_search(used.begin(), used.end(), e))
                return EarViolation{"edge partition", -1, Graph::to_string(e) + " lies in no ear"};
    }
    for (Vertex v = 0; v < n; ++v)
        if (!covered[static_cast<size_t>(v)]) return EarViolation{"vertex coverage", -1, "vertex " + std::to_string(v) + " uncovered"};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Serialization: "base <v>" then "ear <kind> <v0> ... <vl>" per ear.

inline void write_decomposition(std::ostream& out, const EarDecomposition& ed) {
    out << "base " << ed.base << '\n';
    for (const Ear& e : ed.ears) {
        out << "ear " << to_string(e.kind());
        for (Vertex v : e.vertices) out << ' ' << v;
        out << '\n';
    }
}

inline std::string to_text(const EarDecomposition& ed) {
    std::ostringstream os;
    write_decomposition(os, ed);
    return os.str();
}

inline EarDecomposition read_decomposition(std::istream& in) {
    EarDecomposition ed;
    bool have_base = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == 'c') continue;
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (tag == "base") {
            if (!(ls >> ed.base)) throw ParseError(where + "expected 'base <v>'");
            have_base = true;
        } else if (tag == "ear") {
            std::string kind;
            if (!(ls >> kind)) throw ParseError(where + "missing ear kind");
            Ear ear;
            Vertex v = 0;
            while (ls >> v) ear.vertices.push_back(v);
            if (ear.vertices.size() < 2) throw ParseError(where + "ear needs at least two vertices");
            if (kind != to_string(ear.kind())) throw ParseError(where + "kind '" + kind + "' does not match vertex list");
            ed.ears.push_back(std::move(ear));
        } else {
            throw ParseError(where + "unknown tag '" + tag + "'");
        }
    }
    if (!have_base) throw ParseError("missing 'base' line");
    return ed;
}

inline EarDecomposition parse_decomposition(const std::string& text) {
    std::istringstream is(text);
    return read_decomposition(is);
}

// ---------------------------------------------------------------------------
// Construction

/// Appends every edge not used by a nontrivial ear as a trivial ear, in edge order.
inline void append_trivial_ears(EarDecomposition& ed, const Graph& g) {
    std::vector<Edge> used;
    for (const Ear& e : ed.ears)
        for (const Edge& f : e.edges()) used.push_back(f);
    std::sort(used.begin(), used.end());
    for (const Edge& e : g.edges())
        if (!std::binary_search(used.begin(), used.end(), e)) ed.ears.push_back(Ear({e.u, e.v}));
}

/// Open ear-decomposition via DFS chain decomposition. Throws GraphError unless g is 2-connected.
inline EarDecomposition compute_open_ed(const Graph& g) {
    if (const auto why = two_connectivity_failure(g); !why.empty())
        throw GraphError("compute_open_ed: graph is not 2-connected (" + why + ")");
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<size_t>(n), -1), order;
    std::vector<size_t> next(static_cast<size_t>(n), 0);
    std::vector<Vertex> stack{0};
    disc[0] = 0;
    order.push_back(0);
    while (!stack.empty()) {
        const Vertex x = stack.back();
        const auto nb = g.neighbors(x);
        if (next[static_cast<size_t>(x)] == nb.size()) {
            stack.pop_back();
            continue;
        }
        const Vertex y = nb[next[static_cast<size_t>(x)]++];
        if (disc[static_cast<size_t>(y)] != -1) continue;
        disc[static_cast<size_t>(y)] = static_cast<int>(order.size());
        parent[static_cast<size_t>(y)] = x;
        order.push_back(y);
        stack.push_back(y);
    }
    // Chains: for each vertex in preorder, each back edge to a descendant, walked up the tree
    // until an already visited vertex.
    std::vector<char> visited(static_cast<size_t>(n), 0);
    EarDecomposition ed;
    ed.base = 0;
    std::vector<Ear> trivial;
    for (Vertex v : order) {
        for (Vertex w : g.neighbors(v)) {
            if (parent[static_cast<size_t>(w)] == v || disc[static_cast<size_t>(w)] <= disc[static_cast<size_t>(v)]) continue;
            visited[static_cast<size_t>(v)] = 1;
            Ear chain({v});
            Vertex cur = w;
            while (!visited[static_cast<size_t>(cur)]) {
                visited[static_cast<size_t>(cur)] = 1;
                chain.vertices.push_back(cur);
                cur = parent[static_cast<size_t>(cur)];
            }
            chain.vertices.push_back(cur);
            if (chain.is_trivial())
                trivial.push_back(std::move(chain));
            else
                ed.ears.push_back(std::move(chain));
        }
    }
    for (auto& t : trivial) ed.ears.push_back(std::move(t));
    return ed;
}

// ---------------------------------------------------------------------------
// Attachment structure

struct Attachment {
    int ear = -1;     // index of the attached ear
    Vertex at = -1;   // vertex of the host's interior it is attached at
};

struct EarInfo {
    bool pendant = true;
    int first_nontrivial = -1;  // smallest-index nontrivial ear attached to this one
    std::vector<Attachment> attached;
};

struct Classification {
    std::vector<int> owner;  // vertex -> ear having it as an inner vertex; -1 for the base
    std::vector<EarInfo> ears;

    const EarInfo& operator[](int i) const { return ears[static_cast<size_t>(i)]; }
};

/// Pendant flags, attachments (in ear order) and first attached nontrivial ear of every ear.
inline Classification classify(const EarDecomposition& ed, int vertex_count) {
    Classification c;
    c.owner.assign(static_cast<size_t>(vertex_count), -1);
    c.ears.resize(ed.ears.size());
    for (size_t i = 0; i < ed.ears.size(); ++i) {
        const auto& vs = ed.ears[i].vertices;
        for (size_t k = 1; k + 1 < vs.size(); ++k) c.owner[static_cast<size_t>(vs[k])] = static_cast<int>(i);
    }
    for (size_t j = 0; j < ed.ears.size(); ++j) {
        const Ear& ear = ed.ears[j];
        const auto [a, b] = ear.endpoints();
        for (Vertex p : {a, b}) {
            if (p == b && a == b) break;
            const int host = c.owner[static_cast<size_t>(p)];
            if (host < 0 || host == static_cast<int>(j)) continue;
            EarInfo& info = c.ears[static_cast<size_t>(host)];
            info.attached.push_back({static_cast<int>(j), p});
            if (!ear.is_trivial()) {
                info.pendant = false;
                if (info.first_nontrivial == -1) info.first_nontrivial = static_cast<int>(j);
            }
        }
    }
    return c;
}

inline Classification classify(const EarDecomposition& ed, const Graph& g) { return classify(ed, g.vertex_count()); }

}  // namespace tvc
