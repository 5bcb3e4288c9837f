#pragma once

// Open ear-decompositions with few even ears.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "tvc/ear.hpp"
#include "tvc/ear_search.hpp"
#include "tvc/graph.hpp"

namespace tvc {

enum class Backend { exact, heuristic };

inline const char* to_string(Backend b) { return b == Backend::exact ? "exact" : "heuristic"; }

inline Backend parse_backend(const std::string& s) {
    if (s == "exact") return Backend::exact;
    if (s == "heuristic") return Backend::heuristic;
    throw std::invalid_argument("unknown backend '" + s + "' (expected exact or heuristic)");
}

struct HeuristicOptions {
    int restarts = 6;
    int window = 8;       // vertex budget of one re-optimised window of consecutive ears
    int passes = 2;
    std::uint64_t seed = 1;
};

struct EvenEarResult {
    EarDecomposition ed;
    int even = 0;
    bool exact = false;  // even == phi(G)
};

namespace detail {

// Shortest cycle through r, odd ones preferred. Two BFS branches of r joined by a cross edge.
inline Ear initial_cycle(const Graph& g, Vertex r) {
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<size_t>(n), -1), branch(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n), -1);
    std::vector<Vertex> queue{r};
    dist[static_cast<size_t>(r)] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
        const Vertex a = queue[h];
        for (Vertex b : g.neighbors(a)) {
            if (dist[static_cast<size_t>(b)] != -1) continue;
            dist[static_cast<size_t>(b)] = dist[static_cast<size_t>(a)] + 1;
            parent[static_cast<size_t>(b)] = a;
            branch[static_cast<size_t>(b)] = a == r ? b : branch[static_cast<size_t>(a)];
            queue.push_back(b);
        }
    }
    Edge best{-1, -1};
    int best_len = 0;
    bool best_odd = false;
    for (const Edge& e : g.edges()) {
        Vertex a = e.u, b = e.v;
        if (a == r || b == r) {
            const Vertex o = a == r ? b : a;
            if (parent[static_cast<size_t>(o)] == r) continue;
            // cross edge back to the root closes a cycle through branch(o)
        } else if (branch[static_cast<size_t>(a)] == branch[static_cast<size_t>(b)]) {
            continue;
        }
        const int len = dist[static_cast<size_t>(a)] + dist[static_cast<size_t>(b)] + 1;
        const bool odd = len % 2 == 1;
        if (best.u == -1 || (odd && !best_odd) || (odd == best_odd && len < best_len)) {
            best = e;
            best_len = len;
            best_odd = odd;
        }
    }
    if (best.u == -1) throw GraphError("no cycle through vertex " + std::to_string(r));
    auto climb = [&](Vertex x) {
        std::vector<Vertex> p;
        for (; x != r; x = parent[static_cast<size_t>(x)]) p.push_back(x);
        return p;
    };
    std::vector<Vertex> vs{r};
    auto left = climb(best.u), right = climb(best.v);
    vs.insert(vs.end(), left.rbegin(), left.rend());
    vs.insert(vs.end(), right.begin(), right.end());
    vs.push_back(r);
    return Ear(std::move(vs));
}

// Greedy open ear-decomposition: each step grows one ear out of a frontier vertex,
// choosing among BFS-shortest ears with odd length preferred.
inline EarDecomposition greedy_odd_ears(const Graph& g, std::mt19937_64* rng) {
    const int n = g.vertex_count();
    EarDecomposition ed;
    ed.base = 0;
    ed.ears.push_back(initial_cycle(g, 0));
    std::vector<char> covered(static_cast<size_t>(n), 0);
    int covered_count = 0;
    for (Vertex x : ed.ears.front().vertices)
        if (!covered[static_cast<size_t>(x)]) covered[static_cast<size_t>(x)] = 1, ++covered_count;
    std::vector<int> dist(static_cast<size_t>(n)), parent(static_cast<size_t>(n));
    while (covered_count < n) {
        std::vector<Vertex> frontier;
        for (Vertex u = 0; u < n; ++u) {
            if (covered[static_cast<size_t>(u)]) continue;
            for (Vertex c : g.neighbors(u))
                if (covered[static_cast<size_t>(c)]) { frontier.push_back(u); break; }
        }
        const Vertex u = rng ? frontier[std::uniform_int_distribution<size_t>(0, frontier.size() - 1)(*rng)] : frontier.front();
        std::fill(dist.begin(), dist.end(), -1);
        std::vector<Vertex> queue{u};
        dist[static_cast<size_t>(u)] = 0;
        parent[static_cast<size_t>(u)] = -1;
        for (size_t h = 0; h < queue.size(); ++h) {
            const Vertex a = queue[h];
            for (Vertex b : g.neighbors(a)) {
                if (covered[static_cast<size_t>(b)] || dist[static_cast<size_t>(b)] != -1) continue;
                dist[static_cast<size_t>(b)] = dist[static_cast<size_t>(a)] + 1;
                parent[static_cast<size_t>(b)] = a;
                queue.push_back(b);
            }
        }
        std::vector<Vertex> starts;
        for (Vertex c : g.neighbors(u))
            if (covered[static_cast<size_t>(c)]) starts.push_back(c);
        struct Option {
            Vertex z, c, c2;
            int len;
        };
        std::vector<Option> options;
        for (Vertex z : queue) {
            for (Vertex c2 : g.neighbors(z)) {
                if (!covered[static_cast<size_t>(c2)]) continue;
                for (Vertex c : starts)
                    if (c != c2) {
                        options.push_back({z, c, c2, dist[static_cast<size_t>(z)] + 2});
                        break;
                    }
            }
        }
        if (options.empty()) throw GraphError("graph is not 2-connected (no ear leaves vertex " + std::to_string(u) + ")");
        const bool any_odd = std::any_of(options.begin(), options.end(), [](const Option& o) { return o.len % 2 == 1; });
        std::erase_if(options, [&](const Option& o) { return any_odd != (o.len % 2 == 1); });
        const int shortest = std::min_element(options.begin(), options.end(), [](const Option& a, const Option& b) { return a.len < b.len; })->len;
        if (!rng) std::erase_if(options, [&](const Option& o) { return o.len != shortest; });
        const Option pick = rng ? options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(*rng)] : options.front();
        std::vector<Vertex> path;
        for (Vertex x = pick.z; x != -1; x = parent[static_cast<size_t>(x)]) path.push_back(x);
        std::vector<Vertex> vs{pick.c};
        vs.insert(vs.end(), path.rbegin(), path.rend());
        vs.push_back(pick.c2);
        for (Vertex x : path) covered[static_cast<size_t>(x)] = 1, ++covered_count;
        ed.ears.emplace_back(std::move(vs));
    }
    append_trivial_ears(ed, g);
    return ed;
}

// Re-solves runs of consecutive nontrivial ears exactly. The set of covered
// vertices after a run does not depend on how the run is routed, so later ears stay valid.
inline bool improve_windows(EarDecomposition& ed, const Graph& g, int budget) {
    bool changed = false;
    std::vector<Ear> nontrivial;
    for (const Ear& e : ed.ears)
        if (!e.is_trivial()) nontrivial.push_back(e);
    std::vector<char> covered(static_cast<size_t>(g.vertex_count()), 0);
    covered[static_cast<size_t>(ed.base)] = 1;
    size_t i = 0;
    while (i < nontrivial.size()) {
        EarWindow w;
        w.starts_decomposition = i == 0;
        size_t j = i;
        std::vector<Vertex> verts;
        EarCost current{};
        while (j < nontrivial.size()) {
            auto add = j == 0 ? nontrivial[0].vertices : nontrivial[j].inner();
            if (j == 0) add.pop_back();
            if (j > i && static_cast<int>(verts.size() + add.size()) > budget) break;
            verts.insert(verts.end(), add.begin(), add.end());
            current.even += nontrivial[j].is_even() ? 1 : 0;
            current.ears += 1;
            ++j;
        }
        if (static_cast<int>(verts.size()) <= max_window_size && j - i > 1) {
            w.vertices = verts;
            w.covered = covered;
            if (auto plan = plan_ears(g, w, EarObjective::fewest_even); plan && plan->cost < current) {
                nontrivial.erase(nontrivial.begin() + static_cast<std::ptrdiff_t>(i), nontrivial.begin() + static_cast<std::ptrdiff_t>(j));
                nontrivial.insert(nontrivial.begin() + static_cast<std::ptrdiff_t>(i), plan->ears.begin(), plan->ears.end());
                j = i + plan->ears.size();
                changed = true;
            }
        }
        // advance by half a window so consecutive windows overlap
        const size_t step = std::max<size_t>(1, (j - i) / 2);
        for (size_t k = i; k < i + step; ++k)
            for (Vertex x : nontrivial[k].vertices) covered[static_cast<size_t>(x)] = 1;
        if (j >= nontrivial.size()) break;
        i += step;
    }
    if (changed) {
        ed.ears = std::move(nontrivial);
        ed.base = ed.ears.front().first();
        append_trivial_ears(ed, g);
    }
    return changed;
}

}  // namespace detail

/// Heuristic: greedy odd-preferring construction with seeded restarts, then exact window re-optimisation.
inline EarDecomposition heuristic_min_even_open_ed(const Graph& g, const HeuristicOptions& opt = {}) {
    if (!is_two_connected(g)) throw GraphError("graph is not 2-connected (" + two_connectivity_failure(g) + ")");
    std::mt19937_64 rng(opt.seed);
    EarDecomposition best;
    auto score = [](const EarDecomposition& ed) { return EarCost{count_even_ears(ed), ed.nontrivial_count()}; };
    for (int r = 0; r <= opt.restarts; ++r) {
        auto ed = detail::greedy_odd_ears(g, r == 0 ? nullptr : &rng);
        for (int p = 0; p < opt.passes && score(ed).even > 0; ++p)
            if (!detail::improve_windows(ed, g, opt.window)) break;
        if (best.ears.empty() || score(ed) < score(best)) best = std::move(ed);
        if (score(best).even == 0) break;
    }
    return best;
}

/// Open ear-decomposition with few even ears; the exact backend reaches phi(G).
inline EvenEarResult minimize_even_ears(const Graph& g, Backend backend, int limit = default_exhaustive_limit,
                                        const HeuristicOptions& opt = {}) {
    EvenEarResult r;
    if (backend == Backend::exact) {
        r.ed = exact_min_even_open_ed(g, limit);
        r.exact = true;
    } else {
        r.ed = heuristic_min_even_open_ed(g, opt);
        r.exact = false;
    }
    r.even = count_even_ears(r.ed);
    if (!r.exact && r.even == 0) r.exact = true;
    return r;
}

}  // namespace tvc
