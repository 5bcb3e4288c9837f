#pragma once

// Exhaustive ear search over covered-vertex subsets.
//
// A nontrivial ear always has at least one new inner vertex at each of its
// edges, so it can never reuse an edge of an earlier nontrivial ear. The only
// state a sequence of nontrivial ears leaves behind is therefore the set of
// covered vertices, and an ear with inner set I has length |I|+1 no matter how
// it is routed. Minimising even ears or ear count is a shortest-path problem
// on the subset lattice; leftover edges become trivial ears at the end.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tvc/ear.hpp"
#include "tvc/graph.hpp"

namespace tvc {

class SizeLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Lexicographic cost of a set of ears.
struct EarCost {
    int even = 0;
    int ears = 0;
    friend auto operator<=>(const EarCost&, const EarCost&) = default;
};

enum class EarObjective {
    fewest_even,  // fewest even ears, then fewest ears
    fewest_ears,  // fewest ears (= fewest nontrivial edges)
};

/// A set of vertices to be covered by new ears, on top of vertices already covered.
struct EarWindow {
    std::vector<Vertex> vertices;     // all become covered; at most max_window_size
    std::vector<char> covered;        // per graph vertex: covered before the window (may be empty)
    bool starts_decomposition = false;  // first ear is a circuit inside `vertices`
    bool allow_closed = false;          // later ears may be circuits (non-open decompositions)
};

struct EarPlan {
    std::vector<Ear> ears;
    EarCost cost;
};

inline constexpr int max_window_size = 16;

namespace detail {

inline int popcount(std::uint32_t x) { return std::popcount(x); }
inline int lowest(std::uint32_t x) { return std::countr_zero(x); }

class SubsetEarSearch {
  public:
    SubsetEarSearch(const Graph& g, const EarWindow& w) : g_(g), w_(w), k_(static_cast<int>(w.vertices.size())) {
        if (k_ > max_window_size) throw SizeLimitError("ear search window of " + std::to_string(k_) + " vertices exceeds " + std::to_string(max_window_size));
        local_.assign(static_cast<size_t>(g.vertex_count()), -1);
        for (int i = 0; i < k_; ++i) local_[static_cast<size_t>(w.vertices[static_cast<size_t>(i)])] = i;
        ladj_.assign(static_cast<size_t>(k_), 0);
        outer_.resize(static_cast<size_t>(k_));
        for (int i = 0; i < k_; ++i) {
            for (Vertex y : g.neighbors(w.vertices[static_cast<size_t>(i)])) {
                const int ly = local_[static_cast<size_t>(y)];
                if (ly >= 0)
                    ladj_[static_cast<size_t>(i)] |= 1u << ly;
                else if (!w.covered.empty() && w.covered[static_cast<size_t>(y)])
                    outer_[static_cast<size_t>(i)].push_back(y);
            }
        }
        outer_union_.assign(static_cast<size_t>(k_ * k_), 0);
        outer_common_.assign(static_cast<size_t>(k_ * k_), 0);
        for (int s = 0; s < k_; ++s)
            for (int t = 0; t < k_; ++t) {
                const auto& a = outer_[static_cast<size_t>(s)];
                const auto& b = outer_[static_cast<size_t>(t)];
                int common = 0;
                for (size_t i = 0, j = 0; i < a.size() && j < b.size();) {
                    if (a[i] == b[j]) { ++common; ++i; ++j; }
                    else if (a[i] < b[j]) ++i;
                    else ++j;
                }
                outer_common_[static_cast<size_t>(s * k_ + t)] = common;
                outer_union_[static_cast<size_t>(s * k_ + t)] = static_cast<int>(a.size() + b.size()) - common;
            }
        build_path_table();
    }

    std::optional<EarPlan> solve(EarObjective objective) {
        const std::uint32_t full = k_ == 32 ? ~0u : ((1u << k_) - 1);
        const EarCost inf{1 << 29, 1 << 29};
        std::vector<EarCost> best(static_cast<size_t>(full) + 1, inf);
        std::vector<Step> how(static_cast<size_t>(full) + 1);
        auto weigh = [&](int inner_count) {
            const int even = inner_count % 2 == 1 ? 1 : 0;
            return objective == EarObjective::fewest_even ? EarCost{even, 1} : EarCost{0, 1};
        };
        if (w_.starts_decomposition) {
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                if (popcount(mask) < 3) continue;
                const int s = lowest(mask);
                if (ends(s, mask) & ladj_[static_cast<size_t>(s)] & ~(1u << s)) {
                    best[mask] = weigh(popcount(mask) - 1);
                    how[mask] = Step{0, s, -1, Step::cycle};
                }
            }
        } else {
            best[0] = EarCost{0, 0};
        }
        for (std::uint32_t c = 0; c < full; ++c) {
            if (best[c] == inf) continue;
            const std::uint32_t rest = full & ~c;
            for (std::uint32_t inner = rest; inner; inner = (inner - 1) & rest) {
                const EarCost step = weigh(popcount(inner));
                const EarCost cand{best[c].even + step.even, best[c].ears + step.ears};
                if (!(cand < best[c | inner])) continue;
                Step st;
                if (!find_ear(c, c, inner, st)) continue;
                st.prev = c;
                best[c | inner] = cand;
                how[c | inner] = st;
            }
        }
        if (best[full] == inf) return std::nullopt;
        EarPlan plan;
        plan.cost = best[full];
        std::vector<std::pair<std::uint32_t, Step>> chain;
        for (std::uint32_t cur = full;;) {
            const Step& st = how[cur];
            chain.emplace_back(cur, st);
            if (st.kind == Step::cycle || cur == 0) break;
            cur = st.prev;
            if (cur == 0) break;
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) plan.ears.push_back(realize(it->first, it->second));
        return plan;
    }

    /// Searches for a decomposition whose ears are all odd and whose 3-ears are all pendant.
    /// Only meaningful for whole-graph windows.
    std::optional<std::vector<Ear>> odd_with_pendant_three_ears() {
        const std::uint32_t full = (1u << k_) - 1;
        std::unordered_map<std::uint64_t, std::pair<std::uint64_t, Step>> parent;
        std::vector<std::uint64_t> stack;
        auto key = [](std::uint32_t c, std::uint32_t t) { return (static_cast<std::uint64_t>(c) << 32) | t; };
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            const int size = popcount(mask);
            if (size < 3 || size % 2 == 0) continue;
            const int s = lowest(mask);
            if (!(ends(s, mask) & ladj_[static_cast<size_t>(s)] & ~(1u << s))) continue;
            // The base of a closed 3-ear decides which two vertices are inner.
            for (std::uint32_t bits = size == 3 ? mask : (1u << s); bits; bits &= bits - 1) {
                const int base = lowest(bits);
                const std::uint32_t t = size == 3 ? (mask & ~(1u << base)) : 0u;
                const auto k = key(mask, t);
                if (parent.count(k)) continue;
                parent[k] = {~0ull, Step{0, base, -1, Step::cycle}};
                stack.push_back(k);
            }
        }
        while (!stack.empty()) {
            const auto k = stack.back();
            stack.pop_back();
            const std::uint32_t c = static_cast<std::uint32_t>(k >> 32), t = static_cast<std::uint32_t>(k);
            if (c == full) {
                std::vector<std::pair<std::uint32_t, Step>> chain;
                for (auto cur = k;;) {
                    const auto& [prev, st] = parent.at(cur);
                    chain.emplace_back(static_cast<std::uint32_t>(cur >> 32), st);
                    if (prev == ~0ull) break;
                    cur = prev;
                }
                std::vector<Ear> ears;
                for (auto it = chain.rbegin(); it != chain.rend(); ++it) ears.push_back(realize(it->first, it->second));
                return ears;
            }
            const std::uint32_t rest = full & ~c;
            for (std::uint32_t inner = rest; inner; inner = (inner - 1) & rest) {
                if (popcount(inner) % 2 == 1) continue;
                Step st;
                if (!find_ear(c, c & ~t, inner, st)) continue;
                st.prev = c;
                const auto nk = key(c | inner, popcount(inner) == 2 ? (t | inner) : t);
                if (parent.count(nk)) continue;
                parent[nk] = {k, st};
                stack.push_back(nk);
            }
        }
        return std::nullopt;
    }

  private:
    struct Step {
        enum Kind : std::uint8_t { open, closed, cycle };
        std::uint32_t prev = 0;
        int s = -1, t = -1;
        Kind kind = open;
        std::uint32_t avail = 0;  // local vertices allowed as endpoints
    };

    std::uint32_t& ends(int s, std::uint32_t mask) { return ends_[(static_cast<size_t>(s) << k_) + mask]; }

    void build_path_table() {
        ends_.assign(static_cast<size_t>(k_) << k_, 0);
        const std::uint32_t full = (1u << k_) - 1;
        for (int s = 0; s < k_; ++s) {
            ends(s, 1u << s) = 1u << s;
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                if (!(mask & (1u << s))) continue;
                const std::uint32_t e = ends(s, mask);
                for (std::uint32_t bits = e; bits; bits &= bits - 1) {
                    const int t = lowest(bits);
                    for (std::uint32_t ext = ladj_[static_cast<size_t>(t)] & ~mask; ext; ext &= ext - 1) {
                        const int y = lowest(ext);
                        ends(s, mask | (1u << y)) |= 1u << y;
                    }
                }
            }
        }
    }

    // Is there an ear with inner set `inner` whose endpoints lie in avail (local) or outside covered vertices?
    bool find_ear(std::uint32_t covered, std::uint32_t avail, std::uint32_t inner, Step& st) {
        (void)covered;
        auto count_at = [&](int s) { return popcount(ladj_[static_cast<size_t>(s)] & avail) + static_cast<int>(outer_[static_cast<size_t>(s)].size()); };
        if (popcount(inner) == 1) {
            const int s = lowest(inner);
            if (count_at(s) >= 2) {
                st = Step{0, s, s, Step::open, avail};
                return true;
            }
            return false;
        }
        bool found_closed = false;
        Step closed_step;
        for (std::uint32_t sb = inner; sb; sb &= sb - 1) {
            const int s = lowest(sb);
            const int cs = count_at(s);
            for (std::uint32_t tb = ends(s, inner) & ~((2u << s) - 1); tb; tb &= tb - 1) {
                const int t = lowest(tb);
                const int ct = count_at(t);
                const std::uint32_t ls = ladj_[static_cast<size_t>(s)], lt = ladj_[static_cast<size_t>(t)];
                if (cs >= 1 && ct >= 1 &&
                    popcount((ls | lt) & avail) + outer_union_[static_cast<size_t>(s * k_ + t)] >= 2) {
                    st = Step{0, s, t, Step::open, avail};
                    return true;
                }
                if (w_.allow_closed && !found_closed &&
                    popcount(ls & lt & avail) + outer_common_[static_cast<size_t>(s * k_ + t)] >= 1) {
                    found_closed = true;
                    closed_step = Step{0, s, t, Step::closed, avail};
                }
            }
        }
        if (found_closed) st = closed_step;
        return found_closed;
    }

    std::vector<Vertex> local_path(int s, int t, std::uint32_t mask) {
        std::vector<int> rev{t};
        int cur = t;
        std::uint32_t m = mask;
        while (m != (1u << s)) {
            const std::uint32_t prevm = m & ~(1u << cur);
            const std::uint32_t cand = ends(s, prevm) & ladj_[static_cast<size_t>(cur)];
            const int p = lowest(cand);
            rev.push_back(p);
            cur = p;
            m = prevm;
        }
        std::vector<Vertex> out;
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) out.push_back(w_.vertices[static_cast<size_t>(*it)]);
        return out;
    }

    std::vector<Vertex> endpoint_candidates(int s, std::uint32_t avail) const {
        std::vector<Vertex> out = outer_[static_cast<size_t>(s)];
        for (std::uint32_t b = ladj_[static_cast<size_t>(s)] & avail; b; b &= b - 1)
            out.push_back(w_.vertices[static_cast<size_t>(lowest(b))]);
        std::sort(out.begin(), out.end());
        return out;
    }

    Ear realize(std::uint32_t mask_after, const Step& st) {
        if (st.kind == Step::cycle) {
            const std::uint32_t mask = mask_after;
            const int s = st.s;
            // smallest neighbour of s that can close a Hamiltonian path of the mask
            std::uint32_t closers = ends(s, mask) & ladj_[static_cast<size_t>(s)] & ~(1u << s);
            const int t = lowest(closers);
            auto path = local_path(s, t, mask);
            path.push_back(path.front());
            return Ear(std::move(path));
        }
        const std::uint32_t inner = mask_after & ~st.prev;
        auto path = local_path(st.s, st.t, inner);
        const auto cs = endpoint_candidates(st.s, st.avail);
        const auto ct = endpoint_candidates(st.t, st.avail);
        Vertex u = -1, v = -1;
        if (st.kind == Step::closed) {
            for (Vertex a : cs)
                if (std::binary_search(ct.begin(), ct.end(), a)) { u = v = a; break; }
        } else {
            for (Vertex a : cs) {
                for (Vertex b : ct)
                    if (a != b) { u = a; v = b; break; }
                if (u != -1) break;
            }
        }
        std::vector<Vertex> vs{u};
        vs.insert(vs.end(), path.begin(), path.end());
        vs.push_back(v);
        return Ear(std::move(vs));
    }

    const Graph& g_;
    const EarWindow& w_;
    int k_;
    std::vector<int> local_;
    std::vector<std::uint32_t> ladj_;
    std::vector<std::vector<Vertex>> outer_;
    std::vector<int> outer_union_, outer_common_;
    std::vector<std::uint32_t> ends_;
};

}  // namespace detail

/// Optimal ears covering a window, or nullopt if no ear sequence covers it.
inline std::optional<EarPlan> plan_ears(const Graph& g, const EarWindow& window, EarObjective objective) {
    detail::SubsetEarSearch search(g, window);
    return search.solve(objective);
}

inline EarWindow whole_graph_window(const Graph& g, bool allow_closed) {
    EarWindow w;
    for (Vertex v = 0; v < g.vertex_count(); ++v) w.vertices.push_back(v);
    w.starts_decomposition = true;
    w.allow_closed = allow_closed;
    return w;
}

namespace detail {
inline void require_exhaustive(const Graph& g, int limit, const char* what) {
    if (!is_two_connected(g)) throw GraphError(std::string(what) + ": graph is not 2-connected (" + two_connectivity_failure(g) + ")");
    if (g.vertex_count() > limit || g.vertex_count() > max_window_size)
        throw SizeLimitError(std::string(what) + ": " + std::to_string(g.vertex_count()) + " vertices exceeds the exhaustive limit " +
                             std::to_string(std::min(limit, max_window_size)));
}
}  // namespace detail

inline constexpr int default_exhaustive_limit = 12;

/// Minimum number of even ears over all ear-decompositions (closed ears allowed anywhere).
inline int phi_exact(const Graph& g, int limit = default_exhaustive_limit) {
    detail::require_exhaustive(g, limit, "phi_exact");
    const auto plan = plan_ears(g, whole_graph_window(g, true), EarObjective::fewest_even);
    if (!plan) throw GraphError("phi_exact: no ear-decomposition found");
    return plan->cost.even;
}

/// Open ear-decomposition with the fewest even ears (ties: fewest ears), trivial ears appended.
inline EarDecomposition exact_min_even_open_ed(const Graph& g, int limit = default_exhaustive_limit) {
    detail::require_exhaustive(g, limit, "exact even-ear minimisation");
    auto plan = plan_ears(g, whole_graph_window(g, false), EarObjective::fewest_even);
    if (!plan) throw GraphError("no open ear-decomposition found");
    EarDecomposition ed;
    ed.base = plan->ears.front().first();
    ed.ears = std::move(plan->ears);
    append_trivial_ears(ed, g);
    return ed;
}

/// Minimum size of a 2-connected spanning subgraph computed as n-1 plus the fewest
/// nontrivial ears of an open decomposition. A second route to the optimum, used to
/// cross-check the edge-subset search.
inline int opt_via_ears(const Graph& g, int limit = default_exhaustive_limit) {
    detail::require_exhaustive(g, limit, "opt_via_ears");
    const auto plan = plan_ears(g, whole_graph_window(g, false), EarObjective::fewest_ears);
    if (!plan) throw GraphError("no open ear-decomposition found");
    return g.vertex_count() - 1 + plan->cost.ears;
}

/// A decomposition with only odd ears in which every 3-ear is pendant, if one exists.
/// With open_only, every ear after the first must be open.
inline std::optional<EarDecomposition> find_odd_decomposition_with_pendant_three_ears(const Graph& g, bool open_only = true,
                                                                                      int limit = max_window_size) {
    detail::require_exhaustive(g, limit, "pendant 3-ear search");
    const auto window = whole_graph_window(g, !open_only);
    detail::SubsetEarSearch search(g, window);
    auto ears = search.odd_with_pendant_three_ears();
    if (!ears) return std::nullopt;
    EarDecomposition ed;
    ed.base = ears->front().first();
    ed.ears = std::move(*ears);
    append_trivial_ears(ed, g);
    return ed;
}

}  // namespace tvc
