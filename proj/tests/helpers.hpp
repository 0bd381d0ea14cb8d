#pragma once

#include "bergecov/error.hpp"
#include "bergecov/hypergraph.hpp"

#include <gtest/gtest.h>

#include <optional>

namespace bergecov::testing {

inline auto H(int n, std::initializer_list<std::vector<Vertex>> edges, SizeSet sizes = {2, 3}) -> Hypergraph
{
    return Hypergraph::validate(edges, n, sizes);
}

/// K^k_n plus `isolated` extra vertices.
inline auto complete(int k, int n, int isolated = 0) -> Hypergraph
{
    std::vector<VertexMask> masks;
    for (VertexMask m = 1; m < (VertexMask{1} << n); ++m)
        if (popcount(m) == k)
            masks.push_back(m);
    return Hypergraph::from_masks(n + isolated, SizeSet{k}, masks);
}

template <typename F>
auto kind_of(F && f) -> std::optional<ErrorKind>
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.kind();
    }
    return std::nullopt;
}

}

#define EXPECT_KIND(expr, k) EXPECT_EQ(::bergecov::testing::kind_of([&] { (void)(expr); }), ::bergecov::ErrorKind::k)
