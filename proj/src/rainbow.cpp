#include "bergecov/rainbow.hpp"

#include "bergecov/error.hpp"

#include <algorithm>
#include <map>

namespace bergecov {

EdgeColoredClique::EdgeColoredClique(int n) : _n(n), _colors(static_cast<std::size_t>(n) * n, -1)
{
    if (n < 0 || n > max_order)
        fail(ErrorKind::InvalidParameters, "clique order outside 0..64");
}

auto EdgeColoredClique::slot(Vertex u, Vertex v) const -> std::size_t
{
    if (u < 1 || u > _n || v < 1 || v > _n || u == v)
        fail(ErrorKind::VertexOutOfRange, "pair " + std::to_string(u) + "," + std::to_string(v) + " is not a pair of the clique");
    if (u > v)
        std::swap(u, v);
    return static_cast<std::size_t>(u - 1) * _n + (v - 1);
}

auto EdgeColoredClique::color(Vertex u, Vertex v) const -> int
{
    return _colors[slot(u, v)];
}

void EdgeColoredClique::set_color(Vertex u, Vertex v, int color)
{
    _colors[slot(u, v)] = color;
}

auto to_coloring(const Hypergraph & h) -> EdgeColoredClique
{
    EdgeColoredClique g(h.order());
    for (Vertex u = 1; u <= h.order(); ++u)
        for (Vertex v = u + 1; v <= h.order(); ++v) {
            EdgeIndex lowest = -1;
            for (EdgeIndex e = 0; e < h.size() && lowest < 0; ++e)
                if (h.contains_all(e, pair_mask(u, v)))
                    lowest = e;
            if (lowest < 0)
                fail(ErrorKind::NotCovering,
                    "pair {" + std::to_string(u) + "," + std::to_string(v) + "} lies in no edge");
            g.set_color(u, v, lowest);
        }
    return g;
}

auto boundedness(const EdgeColoredClique & g) -> int
{
    std::map<int, int> sizes;
    int best = 0;
    for (Vertex u = 1; u <= g.order(); ++u)
        for (Vertex v = u + 1; v <= g.order(); ++v)
            best = std::max(best, ++sizes[g.color(u, v)]);
    return best;
}

auto rainbow_to_berge(const EdgeColoredClique & g, const Hypergraph & h, std::span<const Vertex> cycle) -> BergeCycle
{
    if (g.order() != h.order())
        fail(ErrorKind::ColoringMismatch, "coloring and hypergraph have different orders");
    const int t = static_cast<int>(cycle.size());
    if (t < 3)
        fail(ErrorKind::InvalidCertificate, "a cycle needs at least three vertices");
    std::vector<Vertex> base(cycle.begin(), cycle.end());
    std::vector<EdgeIndex> edges;
    for (int i = 0; i < t; ++i) {
        auto u = base[i], v = base[(i + 1) % t];
        auto c = g.color(u, v);
        if (c < 0 || c >= h.size() || ! h.contains_all(c, pair_mask(u, v)))
            fail(ErrorKind::ColoringMismatch,
                "color of {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge containing the pair");
        if (std::find(edges.begin(), edges.end(), c) != edges.end())
            fail(ErrorKind::NotRainbow, "color " + std::to_string(c) + " repeats along the cycle");
        edges.push_back(c);
    }
    auto sorted = base;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorKind::InvalidCertificate, "cycle repeats a vertex");
    BergeCycle out(std::move(base), std::move(edges));
    if (! verify_cycle(h, out))
        invariant_violation("rainbow cycle did not map to a valid Berge cycle");
    return out;
}

auto berge_to_rainbow(const EdgeColoredClique & g, const BergeCycle & c) -> std::optional<std::vector<Vertex>>
{
    for (int i = 0; i < c.length(); ++i)
        if (g.color(c.vertex(i), c.vertex(i + 1)) != c.edge(i))
            return std::nullopt;
    return c.base();
}

}
