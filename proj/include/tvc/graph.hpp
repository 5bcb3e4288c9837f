#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1, plus the connectivity
// primitives everything else is built on.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tvc {

using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool has(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Immutable simple graph. Adjacency lists are kept sorted so every scan is
/// deterministic and ties resolve to the smallest vertex id.
class Graph {
  public:
    Graph() = default;

    Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), adj_(static_cast<size_t>(vertex_count)) {
        if (vertex_count < 0) throw GraphError("negative vertex count");
        for (const Edge& e : edges) {
            if (e.u < 0 || e.v >= n_) throw GraphError("edge endpoint out of range: " + to_string(e));
            if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw GraphError("parallel edge " + to_string(*std::adjacent_find(edges.begin(), edges.end())));
        edges_ = std::move(edges);
        for (const Edge& e : edges_) {
            adj_[static_cast<size_t>(e.u)].push_back(e.v);
            adj_[static_cast<size_t>(e.v)].push_back(e.u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(static_cast<size_t>(v)).size()); }

    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
    bool has_edge(Vertex a, Vertex b) const {
        if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
        const auto& l = adj_[static_cast<size_t>(a)];
        return std::binary_search(l.begin(), l.end(), b);
    }
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    static std::string to_string(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

  private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

/// A derived graph together with the vertex translation back to its parent.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;    // new id -> parent id
    std::vector<Vertex> from_parent;  // parent id -> new id, or -1 if dropped
};

/// Edge set of a spanning subgraph; membership in the parent is checked once at construction.
class EdgeSubset {
  public:
    EdgeSubset() = default;
    EdgeSubset(const Graph& parent, std::vector<Edge> members) : n_(parent.vertex_count()) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (const Edge& e : members)
            if (!parent.has_edge(e)) throw GraphError("edge " + Graph::to_string(e) + " is not in the parent graph");
        members_ = std::move(members);
    }

    int vertex_count() const { return n_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<Edge>& edges() const { return members_; }
    bool contains(const Edge& e) const { return std::binary_search(members_.begin(), members_.end(), e); }

    /// The spanning subgraph (same vertex set as the parent).
    Graph as_graph() const { return Graph(n_, members_); }

  private:
    int n_ = 0;
    std::vector<Edge> members_;
};

// ---------------------------------------------------------------------------
// Connectivity

namespace detail {

// BFS labelling; `removed` vertices are skipped and get label -1.
inline int label_components(const Graph& g, std::vector<int>& label, const std::vector<char>* removed = nullptr,
                            std::optional<Edge> skip_edge = std::nullopt) {
    const int n = g.vertex_count();
    label.assign(static_cast<size_t>(n), -1);
    std::vector<Vertex> queue;
    queue.reserve(static_cast<size_t>(n));
    int count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (label[static_cast<size_t>(s)] != -1) continue;
        if (removed && (*removed)[static_cast<size_t>(s)]) continue;
        label[static_cast<size_t>(s)] = count;
        queue.clear();
        queue.push_back(s);
        for (size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            for (Vertex y : g.neighbors(x)) {
                if (label[static_cast<size_t>(y)] != -1) continue;
                if (removed && (*removed)[static_cast<size_t>(y)]) continue;
                if (skip_edge && Edge(x, y) == *skip_edge) continue;
                label[static_cast<size_t>(y)] = count;
                queue.push_back(y);
            }
        }
        ++count;
    }
    return count;
}

}  // namespace detail

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<int> label;
    const int count = detail::label_components(g, label);
    std::vector<std::vector<Vertex>> parts(static_cast<size_t>(count));
    for (Vertex v = 0; v < g.vertex_count(); ++v) parts[static_cast<size_t>(label[static_cast<size_t>(v)])].push_back(v);
    return parts;
}

inline bool is_connected(const Graph& g) {
    std::vector<int> label;
    return detail::label_components(g, label) <= 1;
}

/// Number of components after deleting the marked vertices and, optionally, one edge.
inline int component_count_without(const Graph& g, const std::vector<char>& removed,
                                   std::optional<Edge> skip_edge = std::nullopt) {
    std::vector<int> label;
    return detail::label_components(g, label, &removed, skip_edge);
}

namespace detail {

// Iterative lowpoint DFS. Fills is_cut for articulation points and collects bridges.
inline void lowpoint_scan(const Graph& g, std::vector<char>& is_cut, std::vector<Edge>* bridges) {
    const int n = g.vertex_count();
    is_cut.assign(static_cast<size_t>(n), 0);
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0), parent(static_cast<size_t>(n), -1);
    std::vector<size_t> next(static_cast<size_t>(n), 0);
    int timer = 0;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)] != -1) continue;
        int root_children = 0;
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            const auto nb = g.neighbors(x);
            if (next[static_cast<size_t>(x)] < nb.size()) {
                const Vertex y = nb[next[static_cast<size_t>(x)]++];
                if (disc[static_cast<size_t>(y)] == -1) {
                    parent[static_cast<size_t>(y)] = x;
                    disc[static_cast<size_t>(y)] = low[static_cast<size_t>(y)] = timer++;
                    if (x == root) ++root_children;
                    stack.push_back(y);
                } else if (y != parent[static_cast<size_t>(x)]) {
                    low[static_cast<size_t>(x)] = std::min(low[static_cast<size_t>(x)], disc[static_cast<size_t>(y)]);
                }
                continue;
            }
            stack.pop_back();
            const Vertex p = parent[static_cast<size_t>(x)];
            if (p == -1) continue;
            low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(x)]);
            if (p != root && low[static_cast<size_t>(x)] >= disc[static_cast<size_t>(p)]) is_cut[static_cast<size_t>(p)] = 1;
            if (bridges && low[static_cast<size_t>(x)] > disc[static_cast<size_t>(p)]) bridges->push_back(Edge(p, x));
        }
        if (root_children > 1) is_cut[static_cast<size_t>(root)] = 1;
    }
}

}  // namespace detail

/// Vertices whose removal disconnects g. Requires g connected.
inline std::vector<Vertex> cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw GraphError("cut_vertices: graph is disconnected");
    std::vector<char> is_cut;
    detail::lowpoint_scan(g, is_cut, nullptr);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (is_cut[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

inline std::vector<Edge> bridges(const Graph& g) {
    std::vector<char> is_cut;
    std::vector<Edge> out;
    detail::lowpoint_scan(g, is_cut, &out);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    std::vector<char> is_cut;
    detail::lowpoint_scan(g, is_cut, nullptr);
    return std::none_of(is_cut.begin(), is_cut.end(), [](char c) { return c != 0; });
}

inline bool is_two_edge_connected(const Graph& g) {
    return g.vertex_count() >= 2 && is_connected(g) && bridges(g).empty();
}

/// Why a graph fails to be 2-connected, for error messages. Empty if it is 2-connected.
inline std::string two_connectivity_failure(const Graph& g) {
    if (g.vertex_count() < 3) return "fewer than 3 vertices";
    const auto parts = connected_components(g);
    if (parts.size() > 1)
        return "disconnected: vertices " + std::to_string(parts[0].front()) + " and " + std::to_string(parts[1].front()) +
               " lie in different components";
    const auto cuts = cut_vertices(g);
    if (!cuts.empty()) return "cut vertex " + std::to_string(cuts.front());
    return {};
}

// ---------------------------------------------------------------------------
// Derived graphs

inline Subgraph induced_subgraph(const Graph& g, std::vector<Vertex> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    Subgraph out;
    out.from_parent.assign(static_cast<size_t>(g.vertex_count()), -1);
    for (Vertex v : keep) {
        if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
        out.from_parent[static_cast<size_t>(v)] = static_cast<Vertex>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const Vertex a = out.from_parent[static_cast<size_t>(e.u)], b = out.from_parent[static_cast<size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    out.graph = Graph(static_cast<int>(keep.size()), std::move(edges));
    return out;
}

inline Subgraph delete_vertex(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
    std::vector<Vertex> keep;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (x != v) keep.push_back(x);
    return induced_subgraph(g, std::move(keep));
}

/// Same vertex set, one edge fewer (identity vertex map).
inline Graph delete_edge(const Graph& g, const Edge& e) {
    if (!g.has_edge(e)) throw GraphError("unknown edge " + Graph::to_string(e));
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& f : g.edges())
        if (f != e) edges.push_back(f);
    return Graph(g.vertex_count(), std::move(edges));
}

inline Graph delete_edges(const Graph& g, const std::vector<Edge>& drop) {
    std::vector<Edge> sorted = drop;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Edge> edges;
    for (const Edge& f : g.edges())
        if (!std::binary_search(sorted.begin(), sorted.end(), f)) edges.push_back(f);
    return Graph(g.vertex_count(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Edge-list text format:  "p 2vc <n> <m>" then m lines "e <u> <v>"; lines starting with 'c' are comments.

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1, m = -1, line_no = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == 'c') continue;
        if (tag == "p") {
            std::string fmt;
            if (n != -1) throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
            if (!(ls >> fmt >> n >> m) || fmt != "2vc" || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(line_no) + ": expected 'p 2vc <n> <m>'");
        } else if (tag == "e") {
            if (n == -1) throw ParseError("line " + std::to_string(line_no) + ": edge before header");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range");
            if (u == v) throw ParseError("line " + std::to_string(line_no) + ": loop");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown line tag '" + tag + "'");
        }
    }
    if (n == -1) throw ParseError("missing 'p 2vc' header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    try {
        return Graph(n, std::move(edges));
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p 2vc " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

}  // namespace tvc
