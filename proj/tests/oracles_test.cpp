#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

oracle::Adjacency complete(int n)
{
    oracle::Adjacency g;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b) g[a].insert(b);
        }
    }
    return g;
}

oracle::Adjacency complete_bipartite(int m, int n)
{
    oracle::Adjacency g;
    for (int a = 0; a < m; ++a) {
        for (int b = m; b < m + n; ++b) {
            g[a].insert(b);
            g[b].insert(a);
        }
    }
    return g;
}

}  // namespace

TEST(PlanarityOracle, Kuratowski)
{
    EXPECT_TRUE(oracle::planar_by_rotations(complete(4)));
    EXPECT_FALSE(oracle::planar_by_rotations(complete(5)));
    EXPECT_FALSE(oracle::planar_by_rotations(complete_bipartite(3, 3)));
    EXPECT_TRUE(oracle::planar_by_rotations(complete_bipartite(2, 5)));
    EXPECT_FALSE(oracle::planar_by_boyer_myrvold(complete(5)));
    EXPECT_FALSE(oracle::planar_by_boyer_myrvold(complete_bipartite(3, 3)));
}

TEST(PlanarityOracle, SubdividedK33IsStillCaught)
{
    auto g = complete_bipartite(3, 3);
    g[0].erase(3);
    g[3].erase(0);
    g[0].insert(10);
    g[10] = {0, 3};
    g[3].insert(10);
    EXPECT_FALSE(oracle::planar_by_rotations(g));
}

TEST(PlanarityOracle, AgreesWithBoyerMyrvoldOnRandomGraphs)
{
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        oracle::Adjacency g;
        const int n = 5 + static_cast<int>(rng() % 3);
        for (int v = 0; v < n; ++v) g[v];
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (rng() % 100 < 45) {
                    g[a].insert(b);
                    g[b].insert(a);
                }
            }
        }
        bool planar = false;
        try {
            planar = oracle::planar_by_rotations(g, 200'000);
        } catch (const std::length_error&) {
            continue;
        }
        ++checked;
        EXPECT_EQ(planar, oracle::planar_by_boyer_myrvold(g)) << "trial " << trial;
    }
    EXPECT_GT(checked, 100);
}

TEST(KernelOracle, SmallMatrix)
{
    // x0 + x1 = 0, x1 + x2 = 0 over GF(2): kernel {000, 111}.
    const std::vector<std::vector<int>> a{{1, 1, 0}, {0, -1, 1}};
    EXPECT_EQ(oracle::kernel_dim_by_enumeration(a, 3), 1U);
    EXPECT_EQ(oracle::kernel_by_enumeration(a, 3), (std::vector<std::uint32_t>{0, 7}));
}
