#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "tvc/instances.hpp"
#include "tvc/report.hpp"
#include "tvc/solve.hpp"
#include "tvc/verify.hpp"

using namespace tvc;

TEST(Solve, Triangle) {
    const Graph g(3, {Edge(0, 1), Edge(1, 2), Edge(0, 2)});
    const auto r = solve(g);
    EXPECT_EQ(r.output.size(), 3u);
    EXPECT_EQ(r.ratio_bound, Rational(1));
    EXPECT_TRUE(verify_subgraph(g, r.output));
}

TEST(Solve, RejectsGraphsThatAreNotTwoConnected) {
    const Graph path(3, {Edge(0, 1), Edge(1, 2)});
    EXPECT_THROW(solve(path), GraphError);
}

TEST(Solve, TightFamily) {
    for (int k = 1; k <= 4; ++k) {
        const auto t = gen_tight(k);
        SolveOptions seeded;
        seeded.start = t.reference;
        const auto r = solve(t.graph, seeded);
        EXPECT_EQ(static_cast<int>(r.output.size()), 20 * k + 5);
        EXPECT_TRUE(r.run.log.empty());
        EXPECT_TRUE(verify_subgraph(t.graph, r.output));
        EXPECT_LE(static_cast<int>(solve(t.graph).output.size()), 20 * k + 5);
    }
}

TEST(Solve, OutputsVerifyAndRespectTheChain) {
    for (std::uint64_t s = 1; s <= 120; ++s) {
        const Graph g = gen_random_2connected(5 + static_cast<int>(s % 5), static_cast<int>(s % 4), s);
        SolveOptions o;
        o.backend = Backend::exact;
        const auto r = solve(g, o);
        EXPECT_TRUE(verify_subgraph(g, r.output)) << "seed " << s;
        const auto d = verify_decomposition(r.reduction.graph, r.run.ed, r.run.phi_ref);
        EXPECT_TRUE(d) << "seed " << s << ": " << d.violation;
        const int opt = *tvc::testing::naive_opt(g);
        const Rational size(static_cast<std::int64_t>(r.output.size()));
        EXPECT_LE(size, r.star);
        EXPECT_LE(r.star, Rational(10, 7) * r.bounds.combined);
        EXPECT_LE(r.bounds.combined, opt);
        EXPECT_LE(size * 7, Rational(10) * opt) << "seed " << s;
    }
}

TEST(Solve, VerifyCatchesAMissingEdge) {
    const auto t = gen_tight(1);
    SolveOptions seeded;
    seeded.start = t.reference;
    auto out = solve(t.graph, seeded).output;
    out.pop_back();
    const auto v = verify_subgraph(t.graph, out);
    EXPECT_FALSE(v);
    EXPECT_FALSE(v.violation.empty());
    for (Vertex u = 1; u < t.graph.vertex_count(); ++u)
        if (!t.graph.has_edge(Edge(0, u))) {
            out.emplace_back(0, u);
            EXPECT_FALSE(verify_subgraph(t.graph, out));
            break;
        }
}

TEST(Solve, FigureEightSolidEdgesAreOnlyTwoEdgeConnected) {
    const auto f = gen_fig8();
    const auto v = verify_subgraph(f.graph, f.classes.at("solid"));
    EXPECT_FALSE(v.ok);
    EXPECT_TRUE(v.two_edge_connected);
}

TEST(Solve, DecompositionVerifierRejectsViolations) {
    const auto t = gen_tight(1);
    EXPECT_TRUE(verify_decomposition(t.graph, *t.reference, 0));
    EXPECT_FALSE(verify_decomposition(t.graph, *t.reference, -1));
    auto broken = *t.reference;
    broken.ears.pop_back();
    EXPECT_FALSE(verify_decomposition(t.graph, broken));
}

TEST(Solve, StartNeedsPropertyP) {
    // a pattern host loses edges in the reduction, so a supplied start is refused
    for (std::uint64_t s = 1; s <= 50; ++s) {
        const Graph g = tvc::testing::host_with_pattern(8, 2, s);
        const auto red = reduce_to_property_P(g);
        if (red.log.empty()) continue;
        SolveOptions o;
        o.start = compute_open_ed(g);
        EXPECT_THROW(solve(g, o), std::invalid_argument);
        return;
    }
    GTEST_SKIP() << "no redundant host generated";
}

TEST(Solve, JsonReport) {
    const auto r = solve(gen_tight(1).graph);
    const auto j = to_json(r);
    EXPECT_EQ(j.at("schema"), report_schema);
    EXPECT_EQ(j.at("n"), 19);
    EXPECT_EQ(j.at("output").at("size"), r.output.size());
    EXPECT_EQ(j.at("output").at("edges").size(), r.output.size());
    EXPECT_TRUE(j.at("ratio_bound_within_10_7").get<bool>());
    EXPECT_TRUE(j.at("new_bound_certificate").at("ok").get<bool>());
    EXPECT_EQ(parse_decomposition(j.at("decomposition").at("text").get<std::string>()), r.run.ed);
}
