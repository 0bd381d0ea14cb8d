#include "helpers.hpp"

#include "bergecov/cyclefinder.hpp"
#include "bergecov/random.hpp"
#include "bergecov/rainbow.hpp"

using namespace bergecov;
using bergecov::testing::H;
using bergecov::testing::complete;

TEST(Rainbow, ColoringOfFourTriples)
{
    auto h = H(5, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}}, {3});
    auto g = to_coloring(h);
    EXPECT_EQ(g.color(1, 2), 0);
    EXPECT_EQ(g.color(3, 2), 0);
    EXPECT_EQ(g.color(4, 5), 1);
    EXPECT_EQ(g.color(2, 4), 2);
    EXPECT_EQ(g.color(3, 5), 3);
    EXPECT_EQ(boundedness(g), 3);
}

TEST(Rainbow, LowestIndexWins)
{
    auto h = H(3, {{1, 2, 3}, {1, 2}});
    EXPECT_EQ(to_coloring(h).color(1, 2), 0);
    auto h2 = H(3, {{1, 2}, {1, 2, 3}});
    EXPECT_EQ(to_coloring(h2).color(1, 2), 0);
    EXPECT_EQ(to_coloring(h2).color(1, 3), 1);
    EXPECT_EQ(boundedness(to_coloring(complete(3, 4))), 3);
}

TEST(Rainbow, Boundedness)
{
    EdgeColoredClique rainbow(4);
    int c = 0;
    for (Vertex u = 1; u <= 4; ++u)
        for (Vertex v = u + 1; v <= 4; ++v)
            rainbow.set_color(u, v, c++);
    EXPECT_EQ(boundedness(rainbow), 1);
    EdgeColoredClique mono(3);
    mono.set_color(1, 2, 7);
    mono.set_color(1, 3, 7);
    mono.set_color(2, 3, 7);
    EXPECT_EQ(boundedness(mono), 3);
    EXPECT_KIND(mono.color(1, 1), VertexOutOfRange);
    EXPECT_KIND(mono.color(1, 4), VertexOutOfRange);
}

TEST(Rainbow, RequiresCovering)
{
    EXPECT_KIND(to_coloring(H(4, {{1, 2, 3}})), NotCovering);
}

TEST(Rainbow, TriangleInCompleteSix)
{
    auto h = complete(3, 6);
    auto g = to_coloring(h);
    std::vector<Vertex> tri{1, 4, 6};
    ASSERT_NE(g.color(1, 4), g.color(4, 6));
    ASSERT_NE(g.color(1, 4), g.color(6, 1));
    ASSERT_NE(g.color(4, 6), g.color(6, 1));
    auto c = rainbow_to_berge(g, h, tri);
    EXPECT_TRUE(verify_cycle(h, c));
    EXPECT_EQ(c.base(), tri);
    EXPECT_EQ(berge_to_rainbow(g, c), std::optional(tri));

    std::vector<Vertex> dull{1, 2, 3};
    EXPECT_KIND(rainbow_to_berge(g, h, dull), NotRainbow);
}

TEST(Rainbow, Mismatch)
{
    auto h = complete(3, 4);
    auto g = to_coloring(h);
    std::vector<Vertex> tri{1, 2, 4};
    EXPECT_KIND(rainbow_to_berge(to_coloring(complete(3, 5)), h, tri), ColoringMismatch);
    g.set_color(1, 2, 3);
    EXPECT_KIND(rainbow_to_berge(g, h, tri), ColoringMismatch);
    std::vector<Vertex> two{1, 2};
    EXPECT_KIND(rainbow_to_berge(g, h, two), InvalidCertificate);
}

TEST(Rainbow, BergeToRainbowNeedsLowestEdges)
{
    auto h = H(3, {{1, 2}, {2, 3}, {1, 3}, {1, 2, 3}});
    auto g = to_coloring(h);
    BergeCycle lowest({1, 2, 3}, {0, 1, 2});
    BergeCycle other({1, 2, 3}, {3, 1, 2});
    ASSERT_TRUE(verify_cycle(h, lowest));
    ASSERT_TRUE(verify_cycle(h, other));
    EXPECT_EQ(berge_to_rainbow(g, lowest), std::optional(std::vector<Vertex>{1, 2, 3}));
    EXPECT_FALSE(berge_to_rainbow(g, other));
}

TEST(Rainbow, RandomRoundTrips)
{
    int extracted = 0;
    for (int i = 0; i < 200; ++i) {
        auto rng = instance_rng(31, i);
        auto h = random_covering_rank3(6 + i % 5, rng, i % 3);
        auto g = to_coloring(h);
        EXPECT_LE(boundedness(g), 3);
        for (const auto & c : find_all_cycles(h)) {
            auto base = berge_to_rainbow(g, c);
            if (! base)
                continue;
            ++extracted;
            EXPECT_EQ(rainbow_to_berge(g, h, *base), c);
        }
    }
    EXPECT_GT(extracted, 0);
}
