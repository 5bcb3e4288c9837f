#include <gtest/gtest.h>

#include "support/rewrite_suite.hpp"
#include "tvc/pipeline.hpp"
#include "tvc/redundancy.hpp"
#include "tvc/rewrite.hpp"

using namespace tvc;

namespace {

struct Built {
    Graph g;
    EarDecomposition ed;
};

// Ears in order; edges not on them are appended as trivial ears.
Built build(int n, std::vector<Ear> ears, std::vector<Edge> chords = {}) {
    Built b;
    b.ed.base = ears.front().first();
    b.ed.ears = std::move(ears);
    std::vector<Edge> es = chords;
    for (const Ear& e : b.ed.ears)
        for (const Edge& f : e.edges()) es.push_back(f);
    for (const Edge& c : chords) b.ed.ears.push_back(Ear({c.u, c.v}));
    b.g = Graph(n, es);
    return b;
}

bool is_trivial_ear(const EarDecomposition& ed, Edge e) {
    for (const Ear& ear : ed.ears)
        if (ear.is_trivial() && Edge(ear.first(), ear.last()) == e) return true;
    return false;
}

const Ear c5({0, 1, 2, 3, 4, 0});

}  // namespace

TEST(Rewrite, E3QEndingInW) {
    auto b = build(8, {c5, Ear({2, 5, 6, 0}), Ear({5, 7, 6})});
    const auto rec = enforce_E3(b.ed, b.g);
    ASSERT_TRUE(rec);
    EXPECT_EQ(rec->case_id, "vw");
    EXPECT_EQ(rec->trivial_delta, 1);
    EXPECT_TRUE(is_trivial_ear(b.ed, Edge(5, 6)));
    EXPECT_FALSE(validate(b.ed, b.g));
}

TEST(Rewrite, E3QEndingInX) {
    auto b = build(8, {c5, Ear({2, 5, 6, 0}), Ear({5, 7, 2})});
    const auto rec = enforce_E3(b.ed, b.g);
    ASSERT_TRUE(rec);
    EXPECT_EQ(rec->case_id, "xv");
    EXPECT_TRUE(is_trivial_ear(b.ed, Edge(2, 5)));
}

TEST(Rewrite, E3QLeavingP) {
    auto b = build(8, {c5, Ear({2, 5, 6, 0}), Ear({5, 7, 3})});
    const int even = count_even_ears(b.ed);
    const auto rec = enforce_E3(b.ed, b.g);
    ASSERT_TRUE(rec);
    EXPECT_EQ(rec->case_id, "merge");
    EXPECT_TRUE(is_trivial_ear(b.ed, Edge(2, 5)));
    EXPECT_EQ(count_even_ears(b.ed), even);
    EXPECT_FALSE(enforce_E3(b.ed, b.g));
}

TEST(Rewrite, E2SplitEndpointsBuildsFiveEar) {
    // pendant 3-ears 1,5,6,3 and 2,7,8,4 with the chord 5-7
    auto b = build(9, {c5, Ear({1, 5, 6, 3}), Ear({2, 7, 8, 4})}, {Edge(5, 7)});
    const auto rec = enforce_E2(b.ed, b.g);
    ASSERT_TRUE(rec);
    EXPECT_EQ(rec->case_id, "1");
    EXPECT_EQ(rec->trivial_delta, 1);
    EXPECT_FALSE(validate(b.ed, b.g));
    bool five = false;
    for (const Ear& e : b.ed.ears) five |= e.length() == 5 && !e.is_closed();
    EXPECT_TRUE(five);
}

TEST(Rewrite, E2BothDegreeTwoNeedsPropertyP) {
    // y = y' and w, w' of degree 2: the chord v-v' is redundant, so the rewrite refuses.
    auto b = build(9, {c5, Ear({1, 5, 6, 3}), Ear({2, 7, 8, 3})}, {Edge(5, 7)});
    EXPECT_THROW(enforce_E2(b.ed, b.g), PropertyPViolation);
    const auto red = reduce_to_property_P(b.g);
    EXPECT_FALSE(red.log.empty());
    EXPECT_FALSE(check_property_P(red.graph));
    EXPECT_NO_THROW(run_pipeline(red.graph));
}

TEST(Rewrite, E4FirstCase) {
    // P = 1,5,6,3; Q = 5,7,8,3 pendant; chord 8-6 gives w' the extra neighbour w.
    auto b = build(9, {c5, Ear({1, 5, 6, 3}), Ear({5, 7, 8, 3})}, {Edge(8, 6)});
    ASSERT_FALSE(enforce_E2(b.ed, b.g));
    ASSERT_FALSE(enforce_E3(b.ed, b.g));
    const auto rec = enforce_E4(b.ed, b.g);
    ASSERT_TRUE(rec);
    EXPECT_EQ(rec->case_id, "1.1");
    EXPECT_EQ(rec->trivial_delta, 1);
    EXPECT_FALSE(check_property(b.ed, b.g, 4));
}

TEST(Rewrite, LogLineFormat) {
    EXPECT_EQ(to_string(RewriteRecord{"E3", "merge", 2, 5, 1}), "apply E3 case merge ears 2,5 trivial_delta 1");
}

TEST(Rewrite, NoOpOnSatisfiedDecomposition) {
    const auto t = gen_tight(1);
    auto ed = *t.reference;
    EXPECT_FALSE(enforce_E2(ed, t.graph));
    EXPECT_FALSE(enforce_E3(ed, t.graph));
    EXPECT_FALSE(enforce_E4(ed, t.graph));
    EXPECT_TRUE(enforce_E567(ed, t.graph).empty());
    EXPECT_EQ(ed, *t.reference);
}

TEST(Rewrite, GrowSStaysInsideEarlierEars) {
    // Find a nonpendant 3-ear whose w has extra degree and check the grown path's endpoint.
    int checked = 0;
    for (int s = 1; s <= 600 && checked < 30; ++s) {
        const auto c = tvc::testing::make_config(static_cast<std::uint64_t>(s), tvc::testing::gadget_rotation(s));
        if (!c) continue;
        const auto cls = classify(c->ed, c->graph);
        for (int p = 0; p < static_cast<int>(c->ed.ears.size()); ++p) {
            const Ear& P = c->ed.ears[static_cast<size_t>(p)];
            if (!is_three_ear(P) || cls[p].pendant) continue;
            const auto l = label_three_ear(c->ed, cls, p);
            if (!holds_E3(c->ed, l) || c->graph.degree(l.w) == 2) continue;
            const auto S = grow_S(c->ed, c->graph, p, l.w);
            ASSERT_GE(S.vertices.size(), 2u);
            EXPECT_EQ(S.vertices.front(), l.w);
            const Vertex end = S.vertices.back();
            EXPECT_NE(end, l.w);
            // the end lies in one of the first p+1 ears
            const int owner = cls.owner[static_cast<size_t>(end)];
            EXPECT_LE(owner, p);
            ++checked;
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(Rewrite, PropertySuite) {
    const auto st = tvc::testing::run_rewrite_suite(1, 3000);
    for (const auto& f : st.failures) ADD_FAILURE() << f;
    EXPECT_GT(st.configurations, 2000);
    EXPECT_GT(st.exact_starts, 300);
    EXPECT_LE(st.max_idle_slack, 0);
    for (const auto& c : tvc::testing::required_cases()) EXPECT_TRUE(st.cases.count(c)) << "case never exercised: " << c;
}
