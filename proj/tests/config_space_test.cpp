#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "vkdim/config_space.hpp"
#include "zoo.hpp"

using namespace vkdim;

namespace {

ConfigChain random_config_chain(const ConfigurationSpace& c, int d, std::mt19937_64& rng)
{
    ConfigChain out;
    for (const ConfigCell& cell : c.cells(d)) {
        const long long v = static_cast<long long>(rng() % 5) - 2;
        accumulate(out, cell, v);
    }
    return out;
}

std::size_t ordered_disjoint_pairs(const SimplicialComplex& k)
{
    std::size_t n = 0;
    for (int p = 0; p <= k.dim(); ++p) {
        for (int q = 0; q <= k.dim(); ++q) {
            for (const auto& a : k.faces(p)) {
                for (const auto& b : k.faces(q)) n += a.disjoint_from(b) ? 1 : 0;
            }
        }
    }
    return n;
}

}  // namespace

TEST(DeletedProduct, Points)
{
    EXPECT_EQ(DeletedProduct(tools::generate("points(2)")).cells(0).size(), 2U);
    EXPECT_EQ(DeletedProduct(tools::generate("points(3)")).cells(0).size(), 6U);
    EXPECT_EQ(DeletedProduct(tools::generate("points(3)")).cells(1).size(), 0U);
}

TEST(DeletedProduct, FourCycleTopCells)
{
    const DeletedProduct dp(testutil::c4());
    EXPECT_EQ(dp.cells(2).size(), 4U);
    EXPECT_TRUE(dp.index_of(ProductCell{Simplex{0, 1}, Simplex{2, 3}}));
    EXPECT_FALSE(dp.index_of(ProductCell{Simplex{0, 1}, Simplex{1, 2}}));
}

TEST(ConfigurationSpace, FourCycle)
{
    const ConfigurationSpace c(testutil::c4());
    ASSERT_EQ(c.cells(2).size(), 2U);
    EXPECT_EQ(c.cells(2)[0], (ConfigCell{Simplex{0, 1}, Simplex{2, 3}}));
    EXPECT_EQ(c.cells(2)[1], (ConfigCell{Simplex{0, 3}, Simplex{1, 2}}));
    EXPECT_EQ(c.dim(), 2);
}

TEST(ConfigurationSpace, TwoPoints)
{
    const ConfigurationSpace c(tools::generate("points(2)"));
    EXPECT_EQ(c.size(), 1U);
    EXPECT_EQ(c.dim(), 0);
}

TEST(ConfigurationSpace, DimensionIsTwiceWhenTopSimplicesAreDisjoint)
{
    for (const char* e : {"octahedron_boundary(2)", "cycle(6)", "join(points(3), points(3))"}) {
        const auto k = tools::generate(e);
        EXPECT_EQ(ConfigurationSpace(k).dim(), 2 * k.dim()) << e;
    }
}

TEST(ConfigurationSpace, HalfTheOrderedPairs)
{
    for (const char* e : {"cycle(5)", "simplex(3)", "random_flag(7, 0.5, 6)", "octahedron_boundary(2)"}) {
        const auto k = tools::generate(e);
        const auto n = ordered_disjoint_pairs(k);
        EXPECT_EQ(DeletedProduct(k).size(), n);
        EXPECT_EQ(2 * ConfigurationSpace(k).size(), n);
        for (int d = 0; d <= 2 * k.dim(); ++d) {
            EXPECT_LE(ConfigurationSpace(k).cells(d).size(), estimate_config_cells(k, d));
        }
    }
}

TEST(ConfigurationSpace, TruncatedRange)
{
    const auto k = tools::generate("octahedron_boundary(2)");
    const ConfigurationSpace full(k);
    const ConfigurationSpace top(k, 3, 4);
    EXPECT_EQ(top.cells(4), full.cells(4));
    EXPECT_EQ(top.cells(3), full.cells(3));
    EXPECT_TRUE(top.cells(2).empty());
    EXPECT_EQ(top.cell_complex().lowest_dim(), 3);
}

TEST(CanonicalCell, SwapSign)
{
    const Simplex a{1, 3};
    const Simplex b{0, 2};
    const auto sc = canonical_cell(a, b);
    EXPECT_EQ(sc.cell, (ConfigCell{b, a}));
    EXPECT_EQ(sc.sign, -1);
    EXPECT_EQ(canonical_cell(Simplex{1, 3, 5}, Simplex{0, 2}).sign, 1);
    EXPECT_EQ(canonical_cell(Simplex{0}, Simplex{1}).sign, 1);
    EXPECT_THROW(canonical_cell(Simplex{0, 1}, Simplex{1, 2}), std::invalid_argument);
}

TEST(Boundary, SingleCellInFourCycle)
{
    const ConfigChain cell{{ConfigCell{Simplex{0, 1}, Simplex{2, 3}}, 1}};
    const auto bd = reduce_mod2(boundary(cell));
    const ConfigChain expected{{ConfigCell{Simplex{0}, Simplex{2, 3}}, 1},
                               {ConfigCell{Simplex{1}, Simplex{2, 3}}, 1},
                               {ConfigCell{Simplex{0, 1}, Simplex{2}}, 1},
                               {ConfigCell{Simplex{0, 1}, Simplex{3}}, 1}};
    EXPECT_EQ(bd, expected);
    EXPECT_TRUE(boundary(ConfigChain{}).empty());
    EXPECT_TRUE(boundary(ConfigChain{{ConfigCell{Simplex{0}, Simplex{2}}, 1}}).empty());
}

TEST(Boundary, SquaresToZero)
{
    std::mt19937_64 rng(17);
    for (const char* e : {"cycle(5)", "octahedron_boundary(2)", "random_flag(7, 0.6, 6)"}) {
        const auto k = tools::generate(e);
        const ConfigurationSpace c(k);
        for (int d = 2; d <= c.dim(); ++d) {
            const auto chain = random_config_chain(c, d, rng);
            EXPECT_TRUE(boundary(boundary(chain)).empty()) << e << " d=" << d;
            EXPECT_TRUE(boundary(boundary(transfer(chain))).empty()) << e << " d=" << d;
        }
    }
}

TEST(Boundary, CellComplexMatchesChainBoundary)
{
    const auto k = tools::generate("cone(cycle(4))");
    const ConfigurationSpace c(k);
    const auto& cc = c.cell_complex();
    for (int d = 1; d <= c.dim(); ++d) {
        for (std::size_t i = 0; i < c.cells(d).size(); ++i) {
            ConfigChain from_matrix;
            for (const auto& inc : cc.boundary(d, i)) accumulate(from_matrix, c.cells(d - 1)[inc.face], inc.sign);
            EXPECT_EQ(from_matrix, boundary(ConfigChain{{c.cells(d)[i], 1}}));
        }
    }
}

TEST(Transfer, Formula)
{
    const ConfigCell cell{Simplex{0, 2}, Simplex{1, 3}};
    const auto t = transfer(ConfigChain{{cell, 1}});
    const ProductChain expected{{ProductCell{Simplex{0, 2}, Simplex{1, 3}}, 1},
                                {ProductCell{Simplex{1, 3}, Simplex{0, 2}}, -1}};
    EXPECT_EQ(t, expected);
    const auto even = transfer(ConfigChain{{ConfigCell{Simplex{0}, Simplex{1, 3}}, 1}});
    EXPECT_EQ(even.at(ProductCell{Simplex{1, 3}, Simplex{0}}), 1);
    EXPECT_TRUE(transfer(ConfigChain{}).empty());
}

TEST(Transfer, IsAChainMap)
{
    std::mt19937_64 rng(23);
    for (const char* e : {"cycle(5)", "octahedron_boundary(2)", "random_flag(7, 0.6, 6)", "simplex(3)"}) {
        const ConfigurationSpace c(tools::generate(e));
        for (int d = 1; d <= c.dim(); ++d) {
            const auto chain = random_config_chain(c, d, rng);
            EXPECT_EQ(boundary(transfer(chain)), transfer(boundary(chain))) << e << " d=" << d;
        }
    }
}

TEST(Transfer, QuotientDoubles)
{
    std::mt19937_64 rng(29);
    const ConfigurationSpace c(tools::generate("random_flag(7, 0.6, 6)"));
    for (int d = 0; d <= c.dim(); ++d) {
        const auto chain = random_config_chain(c, d, rng);
        ConfigChain doubled;
        for (const auto& [cell, v] : chain) doubled.emplace(cell, 2 * v);
        EXPECT_EQ(quotient(transfer(chain)), doubled);
    }
}
