// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "support/rewrite_suite.hpp"
#include "tvc/tvc.hpp"

using namespace tvc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::ostringstream detail;  // summary on success, first problem on failure

    void fail(const std::string& why) {
        if (ok) detail.str(why);
        ok = false;
    }
};

// The desk-scale corpus: seeds 1..500, n in 3..9.
Graph corpus_graph(std::uint64_t seed) { return gen_random_2connected(3 + static_cast<int>(seed % 7), static_cast<int>(seed % 4), seed); }

void tight_family(Outcome& o) {
    double worst = 0;
    for (int k = 1; k <= 5; ++k) {
        const auto t0 = Clock::now();
        const auto t = gen_tight(k);
        SolveOptions seeded;
        seeded.start = t.reference;
        const auto a = solve(t.graph, seeded);
        const auto b = solve(t.graph);
        const std::string at = "k=" + std::to_string(k) + ": ";
        if (!verify_subgraph(t.graph, a.output) || !verify_subgraph(t.graph, b.output)) o.fail(at + "output does not verify");
        if (static_cast<int>(a.output.size()) != 20 * k + 5) o.fail(at + "seeded output has " + std::to_string(a.output.size()) + " edges");
        if (static_cast<int>(b.output.size()) > 20 * k + 5) o.fail(at + "scratch output has " + std::to_string(b.output.size()) + " edges");
        if (static_cast<int>(t.opt_witness.size()) != 14 * k + 5 || !verify_subgraph(t.graph, t.opt_witness)) o.fail(at + "bad tour");
        const Rational measured(static_cast<std::int64_t>(a.output.size()), static_cast<std::int64_t>(t.opt_witness.size()));
        if (measured != Rational(20 * k + 5, 14 * k + 5)) o.fail(at + "ratio " + to_string(measured));
        worst = std::max(worst, seconds_since(t0));
    }
    if (worst >= 5) o.fail("slowest instance took " + std::to_string(worst) + " s");
    if (o.ok) o.detail << "k=1..5 seeded 20k+5, scratch <= 20k+5, ratio (20k+5)/(14k+5), slowest " << worst << " s";
}

void ratio_guarantee(Outcome& o) {
    const auto t0 = Clock::now();
    Rational worst(0);
    for (std::uint64_t s = 1; s <= 500; ++s) {
        const Graph g = corpus_graph(s);
        SolveOptions so;
        so.backend = Backend::exact;
        const auto r = solve(g, so);
        const int opt = opt_exact(g).value;
        const Rational size(static_cast<std::int64_t>(r.output.size()));
        const std::string at = "seed " + std::to_string(s) + ": ";
        if (!verify_subgraph(g, r.output)) o.fail(at + "output does not verify");
        if (!r.run.phi_exact) o.fail(at + "even-ear reference not exact");
        if (size > Rational(10, 7) * opt) o.fail(at + "|E(H)| above 10/7 opt");
        if (r.star < size) o.fail(at + "star below |E(H)|");
        if (r.star > Rational(10, 7) * r.bounds.combined) o.fail(at + "star above 10/7 of the lower bound");
        if (r.bounds.combined > opt) o.fail(at + "lower bound above opt");
        worst = std::max(worst, size / opt);
    }
    const double secs = seconds_since(t0);
    if (secs >= 600) o.fail("took " + std::to_string(secs) + " s");
    if (o.ok) o.detail << "500 graphs, worst |E(H)|/opt " << to_string(worst) << ", " << secs << " s";
}

void bound_soundness(Outcome& o) {
    int checked = 0;
    for (std::uint64_t s = 1; s <= 500; ++s) {
        const Graph g = corpus_graph(s);
        SolveOptions so;
        so.backend = Backend::exact;
        const auto r = solve(g, so);
        const Graph& h = r.reduction.graph;
        const int opt = opt_exact(g).value;
        if (opt_exact(h).value != opt) o.fail("seed " + std::to_string(s) + ": reduction changed opt");
        const int phi = bound_phi(g, phi_exact(g), true).value;
        const int garg = bound_garg(h, choose_W(r.run.ed, h)).value;
        const int fresh = bound_new(r.run.ed, h).value;
        if (phi > opt) o.fail("seed " + std::to_string(s) + ": bound_phi " + std::to_string(phi) + " > " + std::to_string(opt));
        if (garg > opt) o.fail("seed " + std::to_string(s) + ": bound_garg " + std::to_string(garg) + " > " + std::to_string(opt));
        if (fresh > opt) o.fail("seed " + std::to_string(s) + ": bound_new " + std::to_string(fresh) + " > " + std::to_string(opt));
        ++checked;
    }
    if (o.ok) o.detail << checked << " graphs, three bounds each, zero violations";
}

void ratio_certificate(Outcome& o) {
    const auto t0 = Clock::now();
    const auto d = check_dual_witness();
    if (!d.feasible) o.fail("dual witness infeasible");
    if (d.tight != std::vector<std::string>{"3y+2z", "x+2y+2z", "2y+6z"}) o.fail("unexpected tight constraints");
    if (f_ratio(4, 0, 0, 0, 1, 15, 0) != Rational(10, 7)) o.fail("f(4,0,0,0,1,15,0) != 10/7");
    const auto r = verify_lemma107(1000000, 1);
    if (r.above != 0) o.fail(std::to_string(r.above) + " samples above 10/7");
    const double secs = seconds_since(t0);
    if (secs >= 60) o.fail("took " + std::to_string(secs) + " s");
    if (o.ok) o.detail << "dual feasible, 3 tight, f=10/7, 10^6 samples max " << to_string(r.max_seen) << ", " << secs << " s";
}

void rewrite_properties(Outcome& o) {
    const auto st = testing::run_rewrite_suite(1, 14000);
    if (!st.failures.empty()) o.fail(st.failures.front());
    if (st.configurations < 10000) o.fail("only " + std::to_string(st.configurations) + " violating configurations");
    if (st.max_idle_slack > 0) o.fail("E5-E7 rewrites exceeded n-1 idle steps");
    for (const auto& c : testing::required_cases())
        if (!st.cases.count(c)) o.fail("case never exercised: " + c);
    if (o.ok)
        o.detail << st.configurations << " configurations, " << st.applications << " applications, " << st.exact_starts
                 << " minimal starts, all " << testing::required_cases().size() << " cases covered";
}

void redundancy(Outcome& o) {
    int hosts = 0, patterns = 0, redundant = 0;
    for (std::uint64_t s = 1; hosts < 200 && s <= 5000; ++s) {
        const int n = 7 + static_cast<int>(s % 3);
        const Graph g = testing::host_with_pattern(n, static_cast<int>(s % 3), s);
        const auto ps = find_patterns(g);
        if (ps.empty()) continue;
        ++hosts;
        const int opt = *testing::naive_opt(g);
        for (const auto& p : ps) {
            const Graph gf = delete_edge(g, p.f());
            const bool oracle = testing::naive_two_connected(n, gf.edges()) && *testing::naive_opt(gf) == opt;
            if (is_redundant(g, p) != oracle) o.fail("seed " + std::to_string(s) + ": disagreement on " + to_string(p));
            ++patterns;
            redundant += oracle;
        }
        const auto red = reduce_to_property_P(g);
        if (opt_exact(red.graph).value != opt) o.fail("seed " + std::to_string(s) + ": reduction changed opt");
        if (check_property_P(red.graph)) o.fail("seed " + std::to_string(s) + ": reduction left a redundant pattern");
    }
    if (hosts < 200) o.fail("only " + std::to_string(hosts) + " pattern hosts");
    const auto f = gen_fig1(false);
    if (!reduce_to_property_P(f.graph).log.empty()) o.fail("fig1 graph is not a fixed point");
    if (o.ok) o.detail << hosts << " hosts, " << patterns << " patterns (" << redundant << " redundant), fig1 fixed";
}

void vv_family(Outcome& o) {
    for (int k = 1; k <= 13; ++k) {
        try {
            const auto v = gen_vv(k);
            if (l_d2_from_witness(v.graph, v.classes.at("dashed")) != 5 * k + 3) o.fail("k=" + std::to_string(k) + ": L_D2 witness");
        } catch (const std::exception& e) {
            o.fail("k=" + std::to_string(k) + ": " + e.what());
        }
    }
    const int opt2 = opt_exact(gen_vv(2).graph).value;
    if (opt2 < 14) o.fail("opt(vv(2)) = " + std::to_string(opt2));
    for (int k = 1; k <= 20; ++k)
        if ((vv_ratio(k) > Rational(4, 3)) != (k > 12)) o.fail("symbolic check fails at k=" + std::to_string(k));
    if (o.ok) o.detail << "k=1..13 self-checks pass, opt(vv(2)) = " << opt2 << ", 7k/(5k+3) > 4/3 iff k > 12 on 1..20";
}

void fig8_scope(Outcome& o) {
    const auto f = gen_fig8();
    const int nb = bound_new(*f.reference, f.graph).value;
    const auto& solid = f.classes.at("solid");
    const auto v = verify_subgraph(f.graph, solid);
    if (nb != 21) o.fail("new bound " + std::to_string(nb));
    if (solid.size() != 20) o.fail("solid subgraph has " + std::to_string(solid.size()) + " edges");
    if (!v.two_edge_connected) o.fail("solid subgraph not 2-edge-connected");
    if (v.ok) o.fail("solid subgraph is 2-connected");
    if (o.ok) o.detail << "new bound 21, solid 20 edges: 2-edge-connected, not 2-connected (" << v.violation << ")";
}

void scaling(Outcome& o) {
    const std::vector<int> sizes{100, 200, 400};
    std::vector<double> medians;
    for (int n : sizes) {
        std::vector<double> times;
        for (std::uint64_t s = 1; s <= 5; ++s) {
            const Graph g = gen_random_2connected(n, n / 4, 1000 * static_cast<std::uint64_t>(n) + s);
            const auto t0 = Clock::now();
            const auto r = solve(g);
            times.push_back(seconds_since(t0));
            if (!verify_subgraph(g, r.output)) o.fail("n=" + std::to_string(n) + ": output does not verify");
        }
        std::nth_element(times.begin(), times.begin() + 2, times.end());
        medians.push_back(times[2]);
    }
    for (size_t i = 1; i < sizes.size(); ++i) {
        const double growth = medians[i] / medians[i - 1];
        const double cubic = std::pow(static_cast<double>(sizes[i]) / sizes[i - 1], 3);
        if (growth > 2 * cubic)
            o.fail("n " + std::to_string(sizes[i - 1]) + " -> " + std::to_string(sizes[i]) + " grew " + std::to_string(growth) + "x");
    }
    if (o.ok) {
        o.detail << "median s at n=100,200,400:";
        for (double m : medians) o.detail << ' ' << m;
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"tight family reproduction", tight_family},
        {"ratio guarantee at desk scale", ratio_guarantee},
        {"lower-bound soundness", bound_soundness},
        {"ratio certificate", ratio_certificate},
        {"rewrite properties and case coverage", rewrite_properties},
        {"redundancy correctness", redundancy},
        {"Vempala-Vetta counterexample family", vv_family},
        {"2EC scope of the new bound", fig8_scope},
        {"empirical cubic scaling", scaling},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail.str() << std::endl;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<size_t>(failed) << '/' << criteria.size() << std::endl;
    return failed ? 1 : 0;
}
