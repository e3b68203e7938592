#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "vkdim/homology.hpp"
#include "vkdim/octa.hpp"
#include "zoo.hpp"

using namespace vkdim;
using testutil::label_faces;

namespace {

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Gf2Cycle top_cycle(const SimplicialComplex& k)
{
    const auto basis = gf2_cycle_basis(k, k.dim());
    return basis.at(0);
}

}  // namespace

TEST(Octahedralize, SimplexGivesCrossPolytopeBoundary)
{
    for (int k = 0; k <= 3; ++k) {
        const auto ol = octahedralize(tools::generate("simplex(" + std::to_string(k) + ")"));
        const auto& c = ol.complex();
        const auto n = static_cast<std::size_t>(k + 1);
        for (int i = 0; i <= k; ++i) {
            EXPECT_EQ(c.faces(i).size(), binomial(n, static_cast<std::size_t>(i + 1)) << (i + 1));
        }
        // Every pair of vertices is adjacent except antipodes v-, v+.
        for (VertexRank a = 0; a < c.num_vertices(); ++a) {
            for (VertexRank b = a + 1; b < c.num_vertices(); ++b) {
                EXPECT_EQ(c.adjacent(a, b), a / 2 != b / 2);
            }
        }
        EXPECT_TRUE(oracle::flag_by_cliques(c));
        if (k >= 1) {
            std::vector<std::size_t> sphere(static_cast<std::size_t>(k + 1), 0);
            sphere.back() = 1;
            EXPECT_EQ(mod2_betti(c), sphere);
        }
    }
}

TEST(Octahedralize, EdgeGivesFourCycle)
{
    const auto ol = octahedralize(tools::generate("simplex(1)"));
    EXPECT_EQ(ol.complex().f_vector(), (std::vector<std::size_t>{4, 4}));
}

TEST(Octahedralize, FourCycle)
{
    const auto ol = octahedralize(testutil::c4());
    EXPECT_EQ(ol.complex().f_vector(), (std::vector<std::size_t>{8, 16}));
    EXPECT_EQ(ol.complex().labels()[0], "a-");
    EXPECT_EQ(ol.complex().labels()[1], "a+");
}

TEST(Octahedralize, PointDoubles)
{
    const auto ol = octahedralize(testutil::make({{"v"}}));
    EXPECT_EQ(ol.complex().f_vector(), (std::vector<std::size_t>{2}));
}

TEST(Octahedralize, FaceCountsAndProjection)
{
    for (const char* e : {"random_flag(7, 0.5, 3)", "cone(cycle(4))", "octahedron_boundary(2)", "tree(6, 1)"}) {
        const auto l = tools::generate(e);
        const auto ol = octahedralize(l);
        for (int d = 0; d <= l.dim(); ++d) {
            EXPECT_EQ(ol.complex().faces(d).size(), l.faces(d).size() << (d + 1));
            for (const Simplex& s : ol.complex().faces(d)) {
                const Simplex p = OctaComplex::project(s);
                EXPECT_EQ(p.dim(), d);
                EXPECT_TRUE(l.contains(p));
            }
        }
        EXPECT_EQ(ol.complex().dim(), l.dim());
        EXPECT_EQ(oracle::flag_by_cliques(ol.complex()), oracle::flag_by_cliques(l));
    }
}

TEST(Octahedralize, SignedVertexRanksInterleave)
{
    EXPECT_EQ((SignedVertex{3, Sign::minus}).rank(), 6U);
    EXPECT_EQ((SignedVertex{3, Sign::plus}).rank(), 7U);
    EXPECT_EQ(SignedVertex::from_rank(7).base, 3U);
    EXPECT_EQ(SignedVertex::from_rank(6).sign, Sign::minus);
}

TEST(Octahedralize, CommutesWithJoins)
{
    const std::vector<std::pair<const char*, const char*>> pairs{
        {"points(2)", "points(3)"}, {"cycle(4)", "points(2)"}, {"path(3)", "simplex(1)"}, {"cycle(5)", "cycle(4)"}};
    for (const auto& [x, y] : pairs) {
        const auto a = prefix_labels(tools::generate(x), "1:");
        const auto b = prefix_labels(tools::generate(y), "2:");
        const auto lhs = octahedralize(join(a, b)).complex();
        const auto rhs = join(octahedralize(a).complex(), octahedralize(b).complex());
        EXPECT_EQ(lhs, rhs) << x << " * " << y;
    }
}

TEST(MinusCopy, FourCycle)
{
    const auto ol = octahedralize(testutil::c4());
    const auto m = minus_copy(ol);
    EXPECT_EQ(m.labels(), (std::vector<std::string>{"a-", "b-", "c-", "d-"}));
    EXPECT_EQ(m.f_vector(), (std::vector<std::size_t>{4, 4}));
    EXPECT_TRUE(m.contains(m.simplex({"a-", "d-"})));
}

TEST(MinusCopy, ProjectionIsIsomorphism)
{
    const auto l = tools::generate("random_flag(8, 0.5, 2)");
    const auto ol = octahedralize(l);
    for (int d = 0; d <= l.dim(); ++d) {
        for (const Simplex& b : l.faces(d)) {
            const Simplex lifted = OctaComplex::minus_lift(b);
            EXPECT_TRUE(ol.complex().contains(lifted));
            EXPECT_TRUE(OctaComplex::in_minus_copy(lifted));
            EXPECT_EQ(OctaComplex::project(lifted), b);
        }
    }
    EXPECT_EQ(minus_copy(ol).f_vector(), l.f_vector());
    EXPECT_EQ(minus_copy(octahedralize(testutil::make({{"v"}}))).labels(), (std::vector<std::string>{"v-"}));
}

TEST(DoubleOver, FourCycleOverAnEdge)
{
    const auto l = testutil::c4();
    const auto ol = octahedralize(l);
    const auto m = top_cycle(l);
    const Simplex ab = l.simplex({"a", "b"});
    const auto d = double_over(ol, m, ab);
    const std::set<std::string> expected{"a-", "a+", "b-", "b+", "c-", "d-"};
    EXPECT_EQ(std::set<std::string>(d.complex.labels().begin(), d.complex.labels().end()), expected);

    // Independent edge count: pairs of D's vertices over distinct adjacent base vertices.
    std::size_t edges = 0;
    for (std::size_t i = 0; i < d.octa_rank.size(); ++i) {
        for (std::size_t j = i + 1; j < d.octa_rank.size(); ++j) {
            const VertexRank x = d.octa_rank[i] / 2;
            const VertexRank y = d.octa_rank[j] / 2;
            if (x != y && l.contains(Simplex{x, y})) ++edges;
        }
    }
    EXPECT_EQ(edges, 9U);
    EXPECT_EQ(d.complex.faces(1).size(), edges);
    EXPECT_EQ(d.complex.num_vertices(), m.support(l).num_vertices() + 2);
    EXPECT_EQ(d.delta, ab);
    EXPECT_TRUE(d.contains_octa_vertex(1));
    EXPECT_FALSE(d.contains_octa_vertex(5));
}

TEST(DoubleOver, SimplexOverItself)
{
    const auto l = tools::generate("simplex(2)");
    const auto ol = octahedralize(l);
    const Gf2Cycle m{2, {Simplex{0, 1, 2}}};
    const auto d = double_over(ol, m, Simplex{0, 1, 2});
    EXPECT_EQ(d.complex, ol.complex());
}

TEST(DoubleOver, ZeroCycle)
{
    const auto l = tools::generate("points(2)");
    const auto ol = octahedralize(l);
    const Gf2Cycle m{0, {Simplex{0}, Simplex{1}}};
    const auto d = double_over(ol, m, Simplex{0});
    EXPECT_EQ(d.complex.f_vector(), (std::vector<std::size_t>{3}));
    EXPECT_THROW(double_over(ol, Gf2Cycle{0, {Simplex{1}}}, Simplex{0}), ComplexError);
}
