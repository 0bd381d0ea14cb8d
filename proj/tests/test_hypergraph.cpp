#include "helpers.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "bergecov/random.hpp"

using namespace bergecov;
using bergecov::testing::H;
using bergecov::testing::complete;

TEST(Validate, SingleTriple)
{
    auto h = Hypergraph::validate({{1, 2, 3}}, 3, {3});
    EXPECT_EQ(h.order(), 3);
    EXPECT_EQ(h.size(), 1);
    EXPECT_EQ(h.edge(0), (std::vector<Vertex>{1, 2, 3}));
}

TEST(Validate, DuplicateAfterSorting)
{
    EXPECT_KIND(Hypergraph::validate({{1, 2, 3}, {3, 2, 1}}, 3, {3}), DuplicateEdge);
}

TEST(Validate, MixedSizes)
{
    auto h = Hypergraph::validate({{1, 2}, {1, 2, 3}}, 4, {2, 3});
    EXPECT_EQ(h.size(), 2);
    EXPECT_EQ(h.rank(), 3);
    EXPECT_FALSE(h.is_uniform());
}

TEST(Validate, Rejections)
{
    EXPECT_KIND(Hypergraph::validate({{1, 2, 3}}, 4, {2}), EdgeSizeOutOfRange);
    EXPECT_KIND(Hypergraph::validate({{1, 5}}, 4, {2}), VertexOutOfRange);
    EXPECT_KIND(Hypergraph::validate({{0, 1}}, 4, {2}), VertexOutOfRange);
    EXPECT_KIND(Hypergraph::validate({{1, 1, 2}}, 4, {3}), RepeatedVertexInEdge);
    EXPECT_KIND(SizeSet({1, 2}), InvalidParameters);
}

TEST(Validate, DuplicateMessageNamesPositions)
{
    try {
        Hypergraph::validate({{1, 2}, {2, 3}, {2, 1}}, 3, {2});
        FAIL();
    }
    catch (const Error & e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("DuplicateEdge"), std::string::npos);
        EXPECT_NE(msg.find('0'), std::string::npos);
        EXPECT_NE(msg.find('2'), std::string::npos);
    }
}

TEST(Shadow, Examples)
{
    EXPECT_EQ(shadow(H(3, {{1, 2, 3}})).pairs.size(), 3u);
    auto s = shadow(H(3, {{1, 2}}));
    ASSERT_EQ(s.pairs.size(), 1u);
    EXPECT_EQ(s.pairs[0], std::make_pair(1, 2));
    EXPECT_EQ(shadow(H(5, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}})).pairs.size(), 10u);
}

TEST(Covering, Examples)
{
    EXPECT_TRUE(is_covering(complete(3, 4)));
    EXPECT_FALSE(is_covering(H(4, {{1, 2, 3}})));
    EXPECT_TRUE(is_covering(H(5, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}})));
}

TEST(MinCodegree, Examples)
{
    EXPECT_EQ(min_codegree(complete(3, 4)), 2);
    EXPECT_EQ(min_codegree(H(3, {{1, 2, 3}})), 1);
    EXPECT_EQ(min_codegree(H(4, {{1, 2, 3}})), 0);
    EXPECT_KIND(min_codegree(Hypergraph::validate({}, 1, {2})), TooFewVertices);
}

TEST(Covering, AgreesWithCodegreeOnRandomInstances)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::vector<VertexMask> masks;
        for (VertexMask m = 1; m < (VertexMask{1} << n); ++m)
            if ((popcount(m) == 2 || popcount(m) == 3) && rng() % 4 == 0)
                masks.push_back(m);
        auto h = Hypergraph::from_masks(n, {2, 3}, masks);
        EXPECT_EQ(is_covering(h), min_codegree(h) >= 1);
    }
}

TEST(Trace, CompleteOnThree)
{
    auto t = trace(complete(3, 4), std::vector<Vertex>{1, 2, 3});
    EXPECT_EQ(t.trace.order(), 3);
    EXPECT_EQ(t.trace.size(), 4);
    std::vector<VertexMask> masks(t.trace.masks().begin(), t.trace.masks().end());
    std::sort(masks.begin(), masks.end());
    EXPECT_EQ(masks, (std::vector<VertexMask>{0b011, 0b101, 0b110, 0b111}));
    auto origins = t.origin;
    std::sort(origins.begin(), origins.end());
    EXPECT_EQ(std::adjacent_find(origins.begin(), origins.end()), origins.end());
    for (EdgeIndex e = 0; e < t.trace.size(); ++e) {
        VertexMask back = 0;
        for (auto v : t.trace.edge(e))
            back |= vertex_bit(t.relabel[v - 1]);
        EXPECT_EQ(back, complete(3, 4).mask(t.origin[e]) & 0b111);
    }
}

TEST(Trace, DropsSmallIntersections)
{
    auto t = trace(H(3, {{1, 2, 3}}), std::vector<Vertex>{1, 2});
    ASSERT_EQ(t.trace.size(), 1);
    EXPECT_EQ(t.trace.mask(0), pair_mask(1, 2));
    EXPECT_EQ(trace(H(4, {{1, 2}, {3, 4}}), std::vector<Vertex>{1, 3}).trace.size(), 0);
}

TEST(Trace, Errors)
{
    EXPECT_KIND(trace(complete(3, 4), std::vector<Vertex>{1}), EmptySubset);
    EXPECT_KIND(trace(complete(3, 4), std::vector<Vertex>{1, 7}), VertexOutOfRange);
}

TEST(Trace, LowestOriginWins)
{
    auto t = trace(H(4, {{1, 2, 4}, {1, 2, 3}, {1, 2}}), std::vector<Vertex>{1, 2});
    ASSERT_EQ(t.trace.size(), 1);
    EXPECT_EQ(t.origin[0], 0);
}

TEST(Trace, CoveringIsPreserved)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        int n = 4 + static_cast<int>(rng() % 8);
        auto h = random_covering_rank3(n, rng, static_cast<int>(rng() % 5), 0.3);
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        int k = 2 + static_cast<int>(rng() % (n - 1));
        std::vector<Vertex> subset(all.begin(), all.begin() + k);
        auto t = trace(h, subset);
        EXPECT_EQ(t.trace.order(), k);
        EXPECT_TRUE(is_covering(t.trace));
        auto masks = std::vector<VertexMask>(t.trace.masks().begin(), t.trace.masks().end());
        std::sort(masks.begin(), masks.end());
        EXPECT_EQ(std::adjacent_find(masks.begin(), masks.end()), masks.end());
    }
}

TEST(Induced, KeepsInsideEdges)
{
    auto h = induced(H(5, {{1, 2, 3}, {3, 4}, {4, 5}, {1, 2}}), 0b00111);
    EXPECT_EQ(h.order(), 5);
    EXPECT_EQ(h.size(), 2);
}
