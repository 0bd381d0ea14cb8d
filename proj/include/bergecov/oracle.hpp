#pragma once

#include "bergecov/berge.hpp"
#include "bergecov/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bergecov {

struct OracleLimits
{
    /// Upper bound on the number of base sequences an exhaustive search may
    /// have to visit. Exceeding it raises CapExceeded before any work starts.
    double max_sequences = 1e8;
};

/// Some Berge cycle of length s, or nothing when none exists.
/// Base sequences are visited with v1 the smallest base vertex and v2 < vs;
/// each is accepted when its pairs have a system of distinct containing
/// edges (bipartite matching, grown one pair at a time).
auto exists_cycle(const Hypergraph & h, int s, const OracleLimits & limits = {}) -> std::optional<BergeCycle>;

/// Some Berge path with t base vertices (2 <= t <= n), or nothing.
auto exists_path(const Hypergraph & h, int t, const OracleLimits & limits = {}) -> std::optional<BergePath>;

/// Distinct containing edges for the given vertex pairs, by augmenting paths.
auto assign_distinct_edges(const Hypergraph & h, std::span<const VertexMask> pairs)
    -> std::optional<std::vector<EdgeIndex>>;

/// Same question answered by plain backtracking; kept as a cross-check.
auto assign_distinct_edges_backtracking(const Hypergraph & h, std::span<const VertexMask> pairs)
    -> std::optional<std::vector<EdgeIndex>>;

/// Lexicographically least sorted edge-mask list over all vertex
/// relabelings. n <= 8, otherwise CapExceeded.
auto canonical_form(const Hypergraph & h) -> std::vector<VertexMask>;

/// Relabels vertex v as perm[v-1], keeping the edge order.
auto permute(const Hypergraph & h, std::span<const Vertex> perm) -> Hypergraph;

}
