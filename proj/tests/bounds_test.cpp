#include <algorithm>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "vkdim/bounds.hpp"
#include "zoo.hpp"

using namespace vkdim;

namespace {

bool has_rule(const DimensionReport& r, const std::string& quantity, const std::string& rule_prefix)
{
    return std::any_of(r.provenance.begin(), r.provenance.end(), [&](const BoundRecord& b) {
        return b.quantity == quantity && b.rule.rfind(rule_prefix, 0) == 0;
    });
}

}  // namespace

TEST(GeometricDimension, Formula)
{
    EXPECT_EQ(geometric_dimension(testutil::c4()), 2);
    EXPECT_EQ(geometric_dimension(testutil::make({{"v"}})), 1);
    EXPECT_EQ(geometric_dimension(testutil::octahedron()), 3);
    EXPECT_EQ(geometric_dimension(SimplicialComplex{}), 0);
}

TEST(L2Dimension, Formula)
{
    EXPECT_EQ(l2_dimension(testutil::c4()), 2);
    EXPECT_EQ(l2_dimension(tools::generate("simplex(2)")), std::nullopt);
    EXPECT_EQ(l2_dimension(tools::generate("tree(6, 1)")), std::nullopt);
    EXPECT_EQ(l2_dimension(testutil::octahedron()), 3);
    EXPECT_EQ(l2_dimension(tools::generate("points(3)")), 1);
}

TEST(JoinLemmaBound, IntervalArithmetic)
{
    EXPECT_EQ(join_lemma_bound({0, 0}, {0, 0}), (Interval{2, 2}));
    EXPECT_EQ(join_lemma_bound({1, 2}, {0, 1}), (Interval{3, 5}));
    // Spheres: vkdim S^m = m - 1, and S^m * S^n = S^{m+n+1}.
    for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
            EXPECT_EQ(join_lemma_bound({m - 1, m - 1}, {n - 1, n - 1}), (Interval{m + n, m + n}));
        }
    }
}

TEST(StarLinkBound, ConeOverFourCycle)
{
    const auto l = tools::generate("cone(cycle(4))");
    const auto apex = *l.rank_of("apex");
    EXPECT_EQ(star_link_bound(l, apex), 3);
    EXPECT_THROW(star_link_bound(l, 99), std::out_of_range);
}

TEST(StarLinkBound, PointLinkGivesNothing)
{
    const auto l = tools::generate("path(3)");
    EXPECT_EQ(star_link_bound(l, 0), std::nullopt);
    EXPECT_EQ(star_link_bound(l, 1), 1);
    EXPECT_EQ(star_link_bound(l, 1, 0), std::nullopt);
}

TEST(StarLinkBound, DeeperRecursionNeverHurts)
{
    const auto l = tools::generate("cone(suspension(cycle(4)))");
    for (VertexRank v = 0; v < l.num_vertices(); ++v) {
        std::optional<int> previous;
        for (int depth = 1; depth <= 3; ++depth) {
            const auto b = star_link_bound(l, v, depth);
            if (previous) {
                ASSERT_TRUE(b);
                EXPECT_GE(*b, *previous);
            }
            previous = b;
        }
    }
}

TEST(Analyze, FourCycle)
{
    const auto r = analyze(testutil::c4());
    EXPECT_EQ(r.gd, 2);
    EXPECT_EQ(r.l2dim, 2);
    EXPECT_EQ(r.vkdim_ol, (Interval{2, 2}));
    ASSERT_TRUE(r.actdim);
    EXPECT_EQ(*r.actdim, (Interval{4, 4}));
    EXPECT_EQ(r.conjecture, ConjectureStatus::verified);
    EXPECT_TRUE(r.certificate);
    EXPECT_TRUE(r.determined());
    EXPECT_EQ(r.vanishing, false);
}

TEST(Analyze, PathUsesTheVanishingRoute)
{
    const auto r = analyze(tools::generate("path(3)"));
    EXPECT_EQ(r.vkdim_ol, (Interval{1, 1}));
    EXPECT_EQ(r.vanishing, true);
    ASSERT_TRUE(r.actdim_with_caveats);
    EXPECT_EQ(r.actdim_with_caveats->upper, 3);
    EXPECT_GE(r.actdim->lower, 2);
    EXPECT_LE(r.actdim->upper, 4);
    EXPECT_TRUE(has_rule(r, quantity::actdim, "vanishing-action"));
    EXPECT_EQ(r.conjecture, ConjectureStatus::vacuous);
}

TEST(Analyze, Octahedron)
{
    const auto r = analyze(testutil::octahedron());
    ASSERT_TRUE(r.actdim);
    EXPECT_EQ(*r.actdim, (Interval{6, 6}));
    EXPECT_EQ(r.actdim->upper, 2 * r.gd);
    EXPECT_EQ(r.conjecture, ConjectureStatus::verified);
}

TEST(Analyze, ConeOverFourCycle)
{
    const auto r = analyze(tools::generate("cone(cycle(4))"));
    EXPECT_EQ(r.vkdim_ol, (Interval{3, 3}));
    ASSERT_TRUE(r.actdim_with_caveats);
    EXPECT_EQ(*r.actdim_with_caveats, (Interval{5, 5}));
    EXPECT_EQ(r.actdim->lower, 5);
}

TEST(Analyze, SimplicesAreSpheres)
{
    for (int k = 0; k <= 3; ++k) {
        const auto r = analyze(tools::generate("simplex(" + std::to_string(k) + ")"));
        EXPECT_EQ(r.vkdim_ol, (Interval{k - 1, k - 1}));
        EXPECT_EQ(*r.actdim, (Interval{k + 1, k + 1}));
    }
}

TEST(Analyze, NonFlagInput)
{
    const auto r = analyze(tools::generate("cycle(3)"));
    EXPECT_FALSE(r.flag);
    EXPECT_FALSE(r.actdim);
    EXPECT_FALSE(r.warnings.empty());
    EXPECT_EQ(r.gd, 3);  // the flag completion is the full triangle
}

TEST(Analyze, EmptyComplexIsRejected)
{
    EXPECT_THROW(analyze(SimplicialComplex{}), ComplexError);
}

TEST(Analyze, BudgetLeavesQuantitiesUndetermined)
{
    AnalysisOptions opt;
    opt.vanishing.max_cells = 10;
    const auto r = analyze(tools::generate("path(4)"), opt);
    EXPECT_FALSE(r.vanishing);
    EXPECT_FALSE(r.warnings.empty());
    EXPECT_FALSE(r.actdim->exact());
    EXPECT_EQ(describe(*r.actdim).rfind("undetermined in [", 0), 0U);
}

TEST(Analyze, InvariantsOverTheZoo)
{
    for (const auto& entry : tools::zoo_catalog()) {
        const auto l = tools::generate(entry.expression);
        const auto r = analyze(l);
        EXPECT_EQ(r.gd, flag_completion(l).dim() + 1) << entry.expression;
        EXPECT_LE(r.vkdim_ol.lower, r.vkdim_ol.upper) << entry.expression;
        EXPECT_LE(r.embdim_ol.lower, r.embdim_ol.upper) << entry.expression;
        EXPECT_LE(r.embdim_ol_with_caveats.lower, r.embdim_ol_with_caveats.upper) << entry.expression;
        if (r.actdim) {
            EXPECT_LE(r.actdim->lower, r.actdim->upper) << entry.expression;
            EXPECT_LE(r.actdim_with_caveats->lower, r.actdim_with_caveats->upper) << entry.expression;
            EXPECT_LE(r.actdim->upper, 2 * r.gd) << entry.expression;
            // Caveated bounds only narrow the certified interval.
            EXPECT_GE(r.actdim_with_caveats->lower, r.actdim->lower) << entry.expression;
            EXPECT_LE(r.actdim_with_caveats->upper, r.actdim->upper) << entry.expression;
        }
        if (r.certificate && r.flag) {
            EXPECT_EQ(*r.actdim, (Interval{2 * r.gd, 2 * r.gd})) << entry.expression;
            if (r.l2dim) EXPECT_EQ(r.conjecture, ConjectureStatus::verified) << entry.expression;
        }
        if (entry.actdim && entry.flag) {
            EXPECT_TRUE(r.actdim_with_caveats->contains(*entry.actdim)) << entry.expression;
        }
        for (const auto& b : r.provenance) EXPECT_FALSE(b.rule.empty());
    }
}

TEST(Describe, Text)
{
    EXPECT_EQ(describe({4, 4}), "exact 4");
    EXPECT_EQ(describe({3, 4}), "undetermined in [3,4]");
    EXPECT_EQ(to_string(ConjectureStatus::open_here), "open-here");
    EXPECT_EQ(to_string(BoundKind::exact), "exact");
}
