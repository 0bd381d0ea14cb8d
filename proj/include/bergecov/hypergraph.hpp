#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bergecov {

/// Vertices are 1-based: a hypergraph of order n has vertices 1..n.
using Vertex = int;
/// Position of a hyperedge in the host hypergraph's ordered edge list.
using EdgeIndex = int;
/// Bit v-1 is set when vertex v belongs to the set.
using VertexMask = std::uint64_t;

inline constexpr int max_order = 64;

constexpr auto vertex_bit(Vertex v) -> VertexMask { return VertexMask{1} << (v - 1); }

constexpr auto pair_mask(Vertex u, Vertex v) -> VertexMask { return vertex_bit(u) | vertex_bit(v); }

auto mask_of(std::span<const Vertex> vertices) -> VertexMask;
auto vertices_of(VertexMask mask) -> std::vector<Vertex>;
auto popcount(VertexMask mask) -> int;

/// The set R of permitted hyperedge sizes. Only sizes 2..63 are representable.
class SizeSet
{
public:
    SizeSet() = default;
    SizeSet(std::initializer_list<int> sizes);
    explicit SizeSet(std::span<const int> sizes);

    /// {lo, lo+1, ..., hi}
    static auto range(int lo, int hi) -> SizeSet;

    auto contains(int size) const -> bool { return size >= 0 && size < 64 && ((_bits >> size) & 1); }
    auto empty() const -> bool { return _bits == 0; }
    auto max() const -> int;
    auto min() const -> int;
    auto values() const -> std::vector<int>;
    auto bits() const -> std::uint64_t { return _bits; }
    auto subset_of(const SizeSet & other) const -> bool { return (_bits & ~other._bits) == 0; }

    auto operator==(const SizeSet &) const -> bool = default;

private:
    void add(int size);

    std::uint64_t _bits = 0;
};

/// A simple hypergraph on vertices 1..n whose edge sizes lie in R.
/// Immutable once built; all factories enforce the invariants.
class Hypergraph
{
public:
    Hypergraph() = default;

    /// Normalizes and checks raw input. Sorting is silent, duplicates are not.
    static auto validate(std::span<const std::vector<Vertex>> raw_edges, int n, SizeSet sizes) -> Hypergraph;
    static auto validate(std::initializer_list<std::vector<Vertex>> raw_edges, int n, SizeSet sizes) -> Hypergraph;

    /// Same checks as validate(), for edges already given as vertex masks.
    static auto from_masks(int n, SizeSet sizes, std::vector<VertexMask> masks) -> Hypergraph;

    /// No checks. The caller guarantees every invariant; used by enumerators
    /// that construct millions of known-valid instances.
    static auto from_trusted_masks(int n, SizeSet sizes, std::vector<VertexMask> masks) -> Hypergraph;

    auto order() const -> int { return _n; }
    auto size() const -> int { return static_cast<int>(_masks.size()); }
    auto sizes() const -> const SizeSet & { return _sizes; }

    auto mask(EdgeIndex e) const -> VertexMask { return _masks[e]; }
    auto masks() const -> std::span<const VertexMask> { return _masks; }
    auto edge(EdgeIndex e) const -> std::vector<Vertex> { return vertices_of(_masks[e]); }
    auto edge_size(EdgeIndex e) const -> int { return popcount(_masks[e]); }
    auto all_vertices() const -> VertexMask;

    auto contains(EdgeIndex e, Vertex v) const -> bool { return (_masks[e] & vertex_bit(v)) != 0; }
    auto contains_all(EdgeIndex e, VertexMask required) const -> bool { return (_masks[e] & required) == required; }

    /// Lowest index of an edge equal to `mask`, or -1.
    auto find_edge(VertexMask mask) const -> EdgeIndex;
    /// Indices of edges containing every vertex in `required`, ascending.
    auto containers(VertexMask required) const -> std::vector<EdgeIndex>;

    /// Largest edge size present (0 for an edgeless hypergraph).
    auto rank() const -> int;
    /// True when every edge has the same size.
    auto is_uniform() const -> bool;

    auto operator==(const Hypergraph &) const -> bool = default;

private:
    int _n = 0;
    SizeSet _sizes;
    std::vector<VertexMask> _masks;
};

struct Shadow
{
    int n = 0;
    /// Sorted (u, v) with u < v.
    std::vector<std::pair<Vertex, Vertex>> pairs;
};

/// Trace on S, relabeled to 1..|S|. `relabel[i]` is the original vertex of
/// trace vertex i+1 and `origin[e]` the original edge whose intersection
/// with S is trace edge e.
struct TraceResult
{
    Hypergraph trace;
    std::vector<Vertex> relabel;
    std::vector<EdgeIndex> origin;
};

auto validate(std::span<const std::vector<Vertex>> raw_edges, int n, SizeSet sizes) -> Hypergraph;

auto shadow(const Hypergraph & h) -> Shadow;

auto is_covering(const Hypergraph & h) -> bool;

/// Intersections of size < 2 are dropped; among originals sharing an
/// intersection the lowest index is recorded.
auto trace(const Hypergraph & h, std::span<const Vertex> subset) -> TraceResult;

/// Minimum over all vertex pairs of the number of edges containing the pair.
auto min_codegree(const Hypergraph & h) -> int;

/// Induced subhypergraph on `subset` (edges entirely inside it), keeping
/// vertex labels and the original order.
auto induced(const Hypergraph & h, VertexMask subset) -> Hypergraph;

auto pairs_covered_mask(const Hypergraph & h, Vertex v) -> VertexMask;

auto describe(const Hypergraph & h) -> std::string;

}
