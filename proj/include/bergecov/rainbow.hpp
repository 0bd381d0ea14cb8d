#pragma once

#include "bergecov/berge.hpp"
#include "bergecov/hypergraph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace bergecov {

/// Complete graph on 1..n with one color per pair. Colors are edge indices
/// of the hypergraph the coloring came from.
class EdgeColoredClique
{
public:
    EdgeColoredClique() = default;
    explicit EdgeColoredClique(int n);

    auto order() const -> int { return _n; }
    auto color(Vertex u, Vertex v) const -> int;
    void set_color(Vertex u, Vertex v, int color);

private:
    auto slot(Vertex u, Vertex v) const -> std::size_t;

    int _n = 0;
    std::vector<int> _colors;
};

/// Colors each pair with the lowest index of an edge containing it.
/// Throws NotCovering when some pair lies in no edge.
auto to_coloring(const Hypergraph & h) -> EdgeColoredClique;

/// Largest color class.
auto boundedness(const EdgeColoredClique & g) -> int;

/// Turns a rainbow cycle of G = to_coloring(H) into a Berge cycle of H by
/// sending each pair to the edge named by its color.
/// Throws NotRainbow when two pairs share a color and ColoringMismatch when
/// G does not color H's pairs with containing edges.
auto rainbow_to_berge(const EdgeColoredClique & g, const Hypergraph & h, std::span<const Vertex> cycle) -> BergeCycle;

/// The base sequence of c when every certificate edge is the color of its
/// pair (so the cycle is rainbow in G); nothing otherwise.
auto berge_to_rainbow(const EdgeColoredClique & g, const BergeCycle & c) -> std::optional<std::vector<Vertex>>;

}
