#include "helpers.hpp"

#include "bergecov/io.hpp"

using namespace bergecov;

TEST(Io, ParsesTextFormat)
{
    auto h = parse_hypergraph("# K3 and a pair\nn 4\ne 3 2 1\n\ne 1 4  # trailing\n");
    EXPECT_EQ(h.order(), 4);
    EXPECT_EQ(h.size(), 2);
    EXPECT_EQ(h.edge(0), (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(h.sizes(), (SizeSet{2, 3}));
}

TEST(Io, ParsesJson)
{
    auto h = parse_hypergraph(R"({"n": 5, "edges": [[1,2,3],[1,4,5]]})");
    EXPECT_EQ(h.order(), 5);
    EXPECT_EQ(h.size(), 2);
}

TEST(Io, ExplicitSizesAreEnforced)
{
    EXPECT_KIND(parse_hypergraph("n 3\ne 1 2\n", SizeSet{3}), EdgeSizeOutOfRange);
}

TEST(Io, Errors)
{
    EXPECT_KIND(parse_hypergraph("e 1 2\n"), ParseError);
    EXPECT_KIND(parse_hypergraph("n 3\ne 1 x\n"), ParseError);
    EXPECT_KIND(parse_hypergraph("n 3\nf 1 2\n"), ParseError);
    EXPECT_KIND(parse_hypergraph("{\"n\": 3}"), ParseError);
    EXPECT_KIND(parse_hypergraph("n 3\ne 1 2\ne 2 1\n"), DuplicateEdge);
}

TEST(Io, RoundTrip)
{
    auto h = parse_hypergraph("n 6\ne 1 2 3\ne 4 5\ne 1 6\n");
    EXPECT_EQ(parse_hypergraph(format_hg(h)), h);
    EXPECT_EQ(parse_hypergraph(to_json(h).dump()), h);
}

TEST(Io, Certificates)
{
    auto c = certificate_from_json(nlohmann::json::parse(R"({"base":[1,2,3],"edges":[0,1,2]})"));
    EXPECT_TRUE(std::holds_alternative<BergeCycle>(c));
    auto p = certificate_from_json(nlohmann::json::parse(R"({"base":[1,2,3],"edges":[0,1]})"));
    EXPECT_TRUE(std::holds_alternative<BergePath>(p));
    EXPECT_KIND(certificate_from_json(nlohmann::json::parse(R"({"base":[1,2,3],"edges":[0]})")), InvalidCertificate);
    EXPECT_KIND(certificate_from_json(nlohmann::json::parse(R"({"base":[1]})")), ParseError);
    BergeCycle cyc({1, 2, 3}, {2, 0, 1});
    EXPECT_EQ(std::get<BergeCycle>(certificate_from_json(to_json(cyc))), cyc);
}

TEST(Io, SizeLists)
{
    EXPECT_EQ(parse_size_set("2,3"), (SizeSet{2, 3}));
    EXPECT_EQ(parse_size_set("2-4"), (SizeSet{2, 3, 4}));
    EXPECT_KIND(parse_size_set("a"), ParseError);
}
