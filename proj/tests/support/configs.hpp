#pragma once

// Starting decompositions for the rewrite property tests: a random 2-connected host with its
// construction decomposition, optionally with a planted gadget that triggers a chosen rewrite case.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tvc/instances.hpp"
#include "tvc/redundancy.hpp"

namespace tvc::testing {

enum class Gadget { none, e2_split, e2_shared, e4 };

struct Config {
    Graph graph;
    EarDecomposition ed;
    std::string gadget;  // planted case, empty for plain random starts
};

struct GadgetSpec {
    Gadget kind = Gadget::none;
    int variant = 0;            // e2_shared: chord 1..5; e4: 11, 12, 21, 22
    bool chord_on_first = true;  // e2_shared: the chord sits on the earlier pendant ear
};

namespace detail {

inline Vertex pick_other(std::mt19937_64& rng, int n, std::initializer_list<Vertex> avoid) {
    for (;;) {
        const Vertex c = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
        if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) return c;
    }
}

}  // namespace detail

/// Builds a configuration; returns nullopt when the host fails property (P).
inline std::optional<Config> make_config(std::uint64_t seed, const GadgetSpec& spec) {
    std::mt19937_64 rng(seed);
    const int base_n = std::uniform_int_distribution<int>(5, 12)(rng);
    const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
    auto base = gen_random_2connected_with_ed(base_n, extra, rng());
    std::vector<Ear> nontrivial, trivial;
    for (auto& e : base.ed.ears) (e.is_trivial() ? trivial : nontrivial).push_back(e);
    std::vector<Edge> edges = base.graph.edges();
    int n = base_n;
    auto fresh = [&]() { return n++; };
    auto add_ear = [&](std::vector<Vertex> vs) {
        Ear e(std::move(vs));
        for (const Edge& f : e.edges()) edges.push_back(f);
        nontrivial.push_back(std::move(e));
    };
    auto add_chord = [&](Vertex a, Vertex b) {
        edges.emplace_back(a, b);
        trivial.push_back(Ear({a, b}));
    };
    std::string label;
    switch (spec.kind) {
        case Gadget::none:
            break;
        case Gadget::e2_split: {
            const Vertex x = detail::pick_other(rng, base_n, {}), y = detail::pick_other(rng, base_n, {x});
            const Vertex x2 = detail::pick_other(rng, base_n, {}), y2 = detail::pick_other(rng, base_n, {x2, y});
            const Vertex v = fresh(), w = fresh(), v2 = fresh(), w2 = fresh();
            add_ear({x, v, w, y});
            add_ear({x2, v2, w2, y2});
            add_chord(v, v2);
            label = "E2 1";
            break;
        }
        case Gadget::e2_shared: {
            const Vertex y = detail::pick_other(rng, base_n, {}), x = detail::pick_other(rng, base_n, {y});
            const Vertex x2 = detail::pick_other(rng, base_n, {x, y});
            const Vertex v = fresh(), w = fresh(), v2 = fresh(), w2 = fresh();
            add_ear({x, v, w, y});
            add_ear({x2, v2, w2, y});
            add_chord(v, v2);
            // The chord at w of the ear chosen to carry it; seen from the other ear when it is second.
            const Vertex cw = spec.chord_on_first ? w : w2, cx = spec.chord_on_first ? x : x2;
            const Vertex ox = spec.chord_on_first ? x2 : x, ov = spec.chord_on_first ? v2 : v, ow = spec.chord_on_first ? w2 : w;
            switch (spec.variant) {
                case 1: add_chord(cw, detail::pick_other(rng, base_n, {x, x2, y})); break;
                case 2: add_chord(cw, cx); break;
                case 3: add_chord(cw, ox); break;
                case 4: add_chord(cw, ov); break;
                default: add_chord(cw, ow); break;
            }
            label = std::string("E2 ") + (spec.chord_on_first ? "3." : "4.") + std::to_string(spec.variant);
            break;
        }
        case Gadget::e4: {
            const Vertex x = detail::pick_other(rng, base_n, {}), y = detail::pick_other(rng, base_n, {x});
            const Vertex v = fresh(), w = fresh(), v2 = fresh(), w2 = fresh();
            add_ear({x, v, w, y});
            add_ear({v, v2, w2, y});
            switch (spec.variant) {
                case 11: add_chord(w2, w); break;
                case 12:
                    // v2 needs a third neighbour too, or {y, w2} is a redundant pattern edge.
                    add_chord(w2, detail::pick_other(rng, base_n, {y}));
                    add_chord(v2, detail::pick_other(rng, base_n, {}));
                    break;
                case 21: add_chord(w2, v), add_chord(v2, w); break;
                default: add_chord(w2, v), add_chord(v2, detail::pick_other(rng, base_n, {y})); break;
            }
            label = "E4 " + std::to_string(spec.variant / 10) + "." + std::to_string(spec.variant % 10);
            break;
        }
    }
    Config c;
    c.graph = Graph(n, edges);
    c.ed.base = base.ed.base;
    c.ed.ears = std::move(nontrivial);
    c.ed.ears.insert(c.ed.ears.end(), trivial.begin(), trivial.end());
    c.gadget = label;
    if (check_property_P(c.graph)) return std::nullopt;
    return c;
}

/// The i-th gadget in a fixed rotation over all planted cases and plain random starts.
inline GadgetSpec gadget_rotation(int i) {
    static const std::vector<GadgetSpec> specs = [] {
        std::vector<GadgetSpec> s{{Gadget::none, 0, true}, {Gadget::e2_split, 0, true}};
        for (int v = 1; v <= 5; ++v) s.push_back({Gadget::e2_shared, v, true}), s.push_back({Gadget::e2_shared, v, false});
        for (int v : {11, 12, 21, 22}) s.push_back({Gadget::e4, v, true});
        return s;
    }();
    return specs[static_cast<size_t>(i) % specs.size()];
}

}  // namespace tvc::testing
