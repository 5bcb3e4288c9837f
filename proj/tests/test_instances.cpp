#include <gtest/gtest.h>

#include "tvc/bounds.hpp"
#include "tvc/instances.hpp"
#include "tvc/solve.hpp"

using namespace tvc;

TEST(Instances, TightFamilyStructure) {
    for (int k = 1; k <= 100; k += (k < 10 ? 1 : 9)) {
        const auto t = gen_tight(k);  // self-checks throw on failure
        EXPECT_EQ(t.graph.vertex_count(), 14 * k + 5);
        EXPECT_EQ(t.graph.edge_count(), 28 * k + 6);
        EXPECT_EQ(static_cast<int>(t.reference->nontrivial_edges().size()), 20 * k + 5);
        EXPECT_EQ(static_cast<int>(t.opt_witness.size()), 14 * k + 5);
    }
    EXPECT_THROW(gen_tight(0), std::invalid_argument);
}

TEST(Instances, TightRatiosIncreaseTowardTenSevenths) {
    Rational prev(0);
    for (int k = 1; k <= 50; ++k) {
        const Rational r(tight_output_size(k), tight_vertex_count(k));
        EXPECT_GT(r, prev);
        EXPECT_LT(r, Rational(10, 7));
        prev = r;
    }
    EXPECT_EQ(Rational(tight_output_size(1), tight_vertex_count(1)), Rational(25, 19));
    EXPECT_EQ(Rational(tight_output_size(2), tight_vertex_count(2)), Rational(45, 33));
}

TEST(Instances, TightPipelineSizes) {
    for (int k = 1; k <= 3; ++k) {
        const auto t = gen_tight(k);
        SolveOptions seeded;
        seeded.start = t.reference;
        EXPECT_EQ(static_cast<int>(solve(t.graph, seeded).output.size()), 20 * k + 5);
        EXPECT_LE(static_cast<int>(solve(t.graph).output.size()), 20 * k + 5);
    }
}

TEST(Instances, VempalaVettaFamily) {
    for (int k = 1; k <= 13; ++k) {
        const auto v = gen_vv(k);
        EXPECT_EQ(v.graph.vertex_count(), 5 * k + 3);
        EXPECT_EQ(l_d2_from_witness(v.graph, v.classes.at("dashed")), 5 * k + 3);
        EXPECT_TRUE(find_betas(v.graph).empty());
    }
    for (int k = 1; k <= 20; ++k) EXPECT_EQ(vv_ratio(k) > Rational(4, 3), k > 12) << "k=" << k;
    EXPECT_EQ(vv_ratio(13), Rational(91, 68));
}

TEST(Instances, VempalaVettaOptimumSmallK) {
    EXPECT_GE(opt_exact(gen_vv(1).graph).value, 7);
    EXPECT_GE(opt_exact(gen_vv(2).graph).value, 14);
}

TEST(Instances, VempalaVettaForcedEdges) {
    // every red edge is needed: deleting one destroys 2-connectivity
    const auto v = gen_vv(2);
    for (const Edge& e : v.classes.at("red")) EXPECT_FALSE(is_two_connected(delete_edge(v.graph, e))) << Graph::to_string(e);
}

TEST(Instances, FigureOne) {
    const auto f = gen_fig1();
    EXPECT_EQ(f.graph.vertex_count(), 13);
    EXPECT_EQ(phi_exact(f.graph, 13), 0);
    EXPECT_FALSE(find_odd_decomposition_with_pendant_three_ears(f.graph, true, 13));
}

TEST(Instances, FigureEight) {
    const auto f = gen_fig8();
    EXPECT_EQ(f.classes.at("solid").size(), 20u);
    EXPECT_EQ(f.classes.at("dashed").size(), 3u);
    const Graph solid(17, f.classes.at("solid"));
    EXPECT_TRUE(is_two_edge_connected(solid));
    EXPECT_FALSE(cut_vertices(solid).empty());
    EXPECT_EQ(bound_new(*f.reference, f.graph).value, 21);
}

TEST(Instances, RandomGraphs) {
    EXPECT_EQ(gen_random_2connected(3, 0, 99).edge_count(), 3);
    for (std::uint64_t s = 1; s <= 300; ++s) {
        const int n = 3 + static_cast<int>(s % 40);
        const Graph g = gen_random_2connected(n, 0, s);
        EXPECT_TRUE(is_two_connected(g));
        EXPECT_GE(g.edge_count(), n);
        EXPECT_LE(g.edge_count(), 2 * n - 2);
        const auto r = gen_random_2connected_with_ed(n, static_cast<int>(s % 6), s);
        EXPECT_FALSE(validate(r.ed, r.graph));
    }
    EXPECT_TRUE(is_two_connected(gen_random_2connected(8, 3, 42)));
    EXPECT_EQ(gen_random_2connected(20, 5, 7).edges(), gen_random_2connected(20, 5, 7).edges());
    EXPECT_THROW(gen_random_2connected(2, 0, 1), std::invalid_argument);
}

TEST(Instances, RandomOpenDecompositions) {
    for (std::uint64_t s = 1; s <= 200; ++s) {
        const Graph g = gen_random_2connected(4 + static_cast<int>(s % 30), static_cast<int>(s % 7), s);
        const auto ed = random_open_ed(g, s);
        EXPECT_FALSE(validate(ed, g));
        EXPECT_EQ(random_open_ed(g, s), ed);
    }
}
