#pragma once

#include "bergecov/hypergraph.hpp"

#include <vector>

namespace bergecov {

/// base v1..vt plus edges h1..h_{t-1}; edges[i] embeds {base[i], base[i+1]}.
/// A single vertex with no edges is a valid (degenerate) path.
struct BergePath
{
    std::vector<Vertex> base;
    std::vector<EdgeIndex> edges;

    auto length() const -> int { return static_cast<int>(edges.size()); }
    auto operator==(const BergePath &) const -> bool = default;
};

/// Cyclic base v1..vt (t >= 3); edges[i] embeds {base[i], base[(i+1) % t]}.
class BergeCycle
{
public:
    /// Throws InvalidCertificate when t < 3 or the two lists differ in length.
    BergeCycle(std::vector<Vertex> base, std::vector<EdgeIndex> edges);

    auto base() const -> const std::vector<Vertex> & { return _base; }
    auto edges() const -> const std::vector<EdgeIndex> & { return _edges; }
    auto length() const -> int { return static_cast<int>(_base.size()); }
    auto vertex(int i) const -> Vertex;
    auto edge(int i) const -> EdgeIndex;

    auto operator==(const BergeCycle &) const -> bool = default;

private:
    std::vector<Vertex> _base;
    std::vector<EdgeIndex> _edges;
};

/// Throws IndexOutOfRange when a vertex or edge index does not exist in h.
auto verify_path(const Hypergraph & h, const BergePath & p) -> bool;
auto verify_cycle(const Hypergraph & h, const BergeCycle & c) -> bool;

/// Maps a cycle of the trace back to the host: same base sequence, each
/// trace edge replaced by its origin.
auto lift(const Hypergraph & h, const TraceResult & t, const BergeCycle & c) -> BergeCycle;
auto lift(const Hypergraph & h, const TraceResult & t, const BergePath & p) -> BergePath;

}
