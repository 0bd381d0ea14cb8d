#pragma once

#include "bergecov/hypergraph.hpp"

#include <cstdint>
#include <random>

namespace bergecov {

struct GeneratorOptions
{
    int n = 6;
    std::uint64_t seed = 0;
    /// Additional random edges after the hypergraph becomes covering.
    int extra = 0;
    /// Chance that an added edge is a 2-edge rather than a triple.
    double pair_prob = 0.0;
};

/// Random covering {2,3}-graph: a chain of triples along a random vertex
/// order, then edges through uncovered pairs until covering, then `extra`
/// more edges, in shuffled order. Not a uniform sample.
auto random_covering_rank3(const GeneratorOptions & options) -> Hypergraph;
auto random_covering_rank3(int n, std::mt19937_64 & rng, int extra = 0, double pair_prob = 0.0) -> Hypergraph;

/// Random covering k-graph: edges through uncovered pairs until covering,
/// then each remaining k-set with probability `density`.
auto random_covering_uniform(int n, int k, std::mt19937_64 & rng, double density = 0.1) -> Hypergraph;

/// Engine for instance `index` of a run seeded with `seed`.
auto instance_rng(std::uint64_t seed, std::uint64_t index) -> std::mt19937_64;

}
