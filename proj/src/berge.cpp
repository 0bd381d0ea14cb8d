#include "bergecov/berge.hpp"

#include "bergecov/error.hpp"

#include <algorithm>

namespace bergecov {

BergeCycle::BergeCycle(std::vector<Vertex> base, std::vector<EdgeIndex> edges) :
    _base(std::move(base)),
    _edges(std::move(edges))
{
    if (_base.size() < 3)
        fail(ErrorKind::InvalidCertificate, "a Berge cycle needs at least three base vertices");
    if (_base.size() != _edges.size())
        fail(ErrorKind::InvalidCertificate, "a Berge cycle needs one edge per base vertex");
}

auto BergeCycle::vertex(int i) const -> Vertex
{
    auto t = length();
    return _base[((i % t) + t) % t];
}

auto BergeCycle::edge(int i) const -> EdgeIndex
{
    auto t = length();
    return _edges[((i % t) + t) % t];
}

namespace {
    void check_indices(const Hypergraph & h, const std::vector<Vertex> & base, const std::vector<EdgeIndex> & edges)
    {
        for (auto v : base)
            if (v < 1 || v > h.order())
                fail(ErrorKind::IndexOutOfRange, "base vertex " + std::to_string(v) + " is not a vertex of the host");
        for (auto e : edges)
            if (e < 0 || e >= h.size())
                fail(ErrorKind::IndexOutOfRange, "edge index " + std::to_string(e) + " is not an edge of the host");
    }

    auto distinct_entries(std::vector<int> values) -> bool
    {
        std::sort(values.begin(), values.end());
        return std::adjacent_find(values.begin(), values.end()) == values.end();
    }
}

auto verify_path(const Hypergraph & h, const BergePath & p) -> bool
{
    check_indices(h, p.base, p.edges);
    if (p.base.empty() || p.edges.size() + 1 != p.base.size())
        return false;
    if (! distinct_entries(p.base) || ! distinct_entries(p.edges))
        return false;
    for (std::size_t i = 0; i < p.edges.size(); ++i)
        if (! h.contains_all(p.edges[i], pair_mask(p.base[i], p.base[i + 1])))
            return false;
    return true;
}

auto verify_cycle(const Hypergraph & h, const BergeCycle & c) -> bool
{
    check_indices(h, c.base(), c.edges());
    if (! distinct_entries(c.base()) || ! distinct_entries(c.edges()))
        return false;
    for (int i = 0; i < c.length(); ++i)
        if (! h.contains_all(c.edge(i), pair_mask(c.vertex(i), c.vertex(i + 1))))
            return false;
    return true;
}

auto lift(const Hypergraph & h, const TraceResult & t, const BergeCycle & c) -> BergeCycle
{
    bool ok = false;
    try {
        ok = verify_cycle(t.trace, c);
    }
    catch (const Error &) {
        ok = false;
    }
    if (! ok)
        fail(ErrorKind::InvalidCertificate, "cycle does not verify against the trace");

    std::vector<Vertex> base;
    std::vector<EdgeIndex> edges;
    for (auto v : c.base())
        base.push_back(t.relabel[v - 1]);
    for (auto e : c.edges())
        edges.push_back(t.origin[e]);
    BergeCycle lifted(std::move(base), std::move(edges));
    if (! verify_cycle(h, lifted))
        invariant_violation("lifted cycle does not verify against the host");
    return lifted;
}

auto lift(const Hypergraph & h, const TraceResult & t, const BergePath & p) -> BergePath
{
    bool ok = false;
    try {
        ok = verify_path(t.trace, p);
    }
    catch (const Error &) {
        ok = false;
    }
    if (! ok)
        fail(ErrorKind::InvalidCertificate, "path does not verify against the trace");

    BergePath lifted;
    for (auto v : p.base)
        lifted.base.push_back(t.relabel[v - 1]);
    for (auto e : p.edges)
        lifted.edges.push_back(t.origin[e]);
    if (! verify_path(h, lifted))
        invariant_violation("lifted path does not verify against the host");
    return lifted;
}

}
