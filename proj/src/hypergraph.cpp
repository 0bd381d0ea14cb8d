#include "bergecov/hypergraph.hpp"

#include "bergecov/error.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace bergecov {

auto mask_of(std::span<const Vertex> vertices) -> VertexMask
{
    VertexMask m = 0;
    for (auto v : vertices)
        m |= vertex_bit(v);
    return m;
}

auto vertices_of(VertexMask mask) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    out.reserve(std::popcount(mask));
    while (mask) {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

auto popcount(VertexMask mask) -> int
{
    return std::popcount(mask);
}

SizeSet::SizeSet(std::initializer_list<int> sizes)
{
    for (auto s : sizes)
        add(s);
}

SizeSet::SizeSet(std::span<const int> sizes)
{
    for (auto s : sizes)
        add(s);
}

auto SizeSet::range(int lo, int hi) -> SizeSet
{
    SizeSet r;
    for (int s = lo; s <= hi; ++s)
        r.add(s);
    return r;
}

void SizeSet::add(int size)
{
    if (size < 2 || size > 63)
        fail(ErrorKind::InvalidParameters, "edge sizes must lie in 2..63, got " + std::to_string(size));
    _bits |= std::uint64_t{1} << size;
}

auto SizeSet::max() const -> int
{
    return _bits ? 63 - std::countl_zero(_bits) : 0;
}

auto SizeSet::min() const -> int
{
    return _bits ? std::countr_zero(_bits) : 0;
}

auto SizeSet::values() const -> std::vector<int>
{
    std::vector<int> out;
    for (int s = 0; s < 64; ++s)
        if (contains(s))
            out.push_back(s);
    return out;
}

namespace {
    void check_order(int n)
    {
        if (n < 1 || n > max_order)
            fail(ErrorKind::InvalidParameters, "vertex count must lie in 1.." + std::to_string(max_order));
    }

    auto edge_text(VertexMask m) -> std::string
    {
        std::string s = "{";
        bool first = true;
        for (auto v : vertices_of(m)) {
            if (! first)
                s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    void check_simple(const std::vector<VertexMask> & masks)
    {
        std::vector<std::pair<VertexMask, std::size_t>> sorted;
        sorted.reserve(masks.size());
        for (std::size_t i = 0; i < masks.size(); ++i)
            sorted.emplace_back(masks[i], i);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i].first == sorted[i - 1].first)
                fail(ErrorKind::DuplicateEdge, "edge " + edge_text(sorted[i].first) + " appears at positions "
                        + std::to_string(sorted[i - 1].second) + " and " + std::to_string(sorted[i].second));
    }
}

auto Hypergraph::validate(std::span<const std::vector<Vertex>> raw_edges, int n, SizeSet sizes) -> Hypergraph
{
    check_order(n);
    std::vector<VertexMask> masks;
    masks.reserve(raw_edges.size());
    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
        const auto & raw = raw_edges[i];
        VertexMask m = 0;
        for (auto v : raw) {
            if (v < 1 || v > n)
                fail(ErrorKind::VertexOutOfRange, "edge " + std::to_string(i) + " mentions vertex " + std::to_string(v)
                        + " outside 1.." + std::to_string(n));
            if (m & vertex_bit(v))
                fail(ErrorKind::RepeatedVertexInEdge, "edge " + std::to_string(i) + " repeats vertex " + std::to_string(v));
            m |= vertex_bit(v);
        }
        if (! sizes.contains(static_cast<int>(raw.size())))
            fail(ErrorKind::EdgeSizeOutOfRange, "edge " + std::to_string(i) + " has size " + std::to_string(raw.size()));
        masks.push_back(m);
    }
    check_simple(masks);
    return from_trusted_masks(n, sizes, std::move(masks));
}

auto Hypergraph::validate(std::initializer_list<std::vector<Vertex>> raw_edges, int n, SizeSet sizes) -> Hypergraph
{
    std::vector<std::vector<Vertex>> copy(raw_edges);
    return validate(std::span<const std::vector<Vertex>>(copy), n, sizes);
}

auto Hypergraph::from_masks(int n, SizeSet sizes, std::vector<VertexMask> masks) -> Hypergraph
{
    check_order(n);
    VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        if (masks[i] & ~all)
            fail(ErrorKind::VertexOutOfRange, "edge " + std::to_string(i) + " mentions a vertex above " + std::to_string(n));
        if (! sizes.contains(popcount(masks[i])))
            fail(ErrorKind::EdgeSizeOutOfRange, "edge " + std::to_string(i) + " has size " + std::to_string(popcount(masks[i])));
    }
    check_simple(masks);
    return from_trusted_masks(n, sizes, std::move(masks));
}

auto Hypergraph::from_trusted_masks(int n, SizeSet sizes, std::vector<VertexMask> masks) -> Hypergraph
{
    Hypergraph h;
    h._n = n;
    h._sizes = sizes;
    h._masks = std::move(masks);
    return h;
}

auto Hypergraph::all_vertices() const -> VertexMask
{
    return _n == 64 ? ~VertexMask{0} : (VertexMask{1} << _n) - 1;
}

auto Hypergraph::find_edge(VertexMask mask) const -> EdgeIndex
{
    for (EdgeIndex e = 0; e < size(); ++e)
        if (_masks[e] == mask)
            return e;
    return -1;
}

auto Hypergraph::containers(VertexMask required) const -> std::vector<EdgeIndex>
{
    std::vector<EdgeIndex> out;
    for (EdgeIndex e = 0; e < size(); ++e)
        if ((_masks[e] & required) == required)
            out.push_back(e);
    return out;
}

auto Hypergraph::rank() const -> int
{
    int r = 0;
    for (auto m : _masks)
        r = std::max(r, popcount(m));
    return r;
}

auto Hypergraph::is_uniform() const -> bool
{
    for (auto m : _masks)
        if (popcount(m) != popcount(_masks.front()))
            return false;
    return true;
}

auto validate(std::span<const std::vector<Vertex>> raw_edges, int n, SizeSet sizes) -> Hypergraph
{
    return Hypergraph::validate(raw_edges, n, sizes);
}

auto pairs_covered_mask(const Hypergraph & h, Vertex v) -> VertexMask
{
    VertexMask reach = 0;
    for (auto m : h.masks())
        if (m & vertex_bit(v))
            reach |= m;
    return reach & ~vertex_bit(v);
}

auto shadow(const Hypergraph & h) -> Shadow
{
    Shadow s;
    s.n = h.order();
    for (Vertex u = 1; u <= h.order(); ++u) {
        auto reach = pairs_covered_mask(h, u);
        for (Vertex v = u + 1; v <= h.order(); ++v)
            if (reach & vertex_bit(v))
                s.pairs.emplace_back(u, v);
    }
    return s;
}

auto is_covering(const Hypergraph & h) -> bool
{
    auto all = h.all_vertices();
    for (Vertex v = 1; v <= h.order(); ++v)
        if ((pairs_covered_mask(h, v) | vertex_bit(v)) != all)
            return false;
    return true;
}

auto trace(const Hypergraph & h, std::span<const Vertex> subset) -> TraceResult
{
    VertexMask s = 0;
    for (auto v : subset) {
        if (v < 1 || v > h.order())
            fail(ErrorKind::VertexOutOfRange, "trace subset mentions vertex " + std::to_string(v));
        s |= vertex_bit(v);
    }
    if (popcount(s) < 2)
        fail(ErrorKind::EmptySubset, "trace needs at least two distinct vertices");

    TraceResult result;
    result.relabel = vertices_of(s);
    std::vector<int> new_label(h.order() + 1, 0);
    for (std::size_t i = 0; i < result.relabel.size(); ++i)
        new_label[result.relabel[i]] = static_cast<int>(i) + 1;

    std::vector<VertexMask> seen;
    std::vector<VertexMask> relabeled;
    for (EdgeIndex e = 0; e < h.size(); ++e) {
        auto meet = h.mask(e) & s;
        if (popcount(meet) < 2)
            continue;
        if (std::find(seen.begin(), seen.end(), meet) != seen.end())
            continue;
        seen.push_back(meet);
        VertexMask m = 0;
        for (auto v : vertices_of(meet))
            m |= vertex_bit(new_label[v]);
        relabeled.push_back(m);
        result.origin.push_back(e);
    }

    auto k = std::max(2, h.sizes().max());
    result.trace = Hypergraph::from_trusted_masks(popcount(s), SizeSet::range(2, k), std::move(relabeled));
    return result;
}

auto min_codegree(const Hypergraph & h) -> int
{
    if (h.order() < 2)
        fail(ErrorKind::TooFewVertices, "codegree needs at least two vertices");
    int best = h.size();
    for (Vertex u = 1; u <= h.order(); ++u)
        for (Vertex v = u + 1; v <= h.order(); ++v) {
            int count = 0;
            for (auto m : h.masks())
                if ((m & pair_mask(u, v)) == pair_mask(u, v))
                    ++count;
            best = std::min(best, count);
        }
    return best;
}

auto induced(const Hypergraph & h, VertexMask subset) -> Hypergraph
{
    std::vector<VertexMask> kept;
    for (auto m : h.masks())
        if ((m & subset) == m)
            kept.push_back(m);
    return Hypergraph::from_trusted_masks(h.order(), h.sizes(), std::move(kept));
}

auto describe(const Hypergraph & h) -> std::string
{
    std::ostringstream out;
    out << "n=" << h.order() << " edges=[";
    for (EdgeIndex e = 0; e < h.size(); ++e) {
        if (e)
            out << " ";
        out << edge_text(h.mask(e));
    }
    out << "]";
    return out.str();
}

}
