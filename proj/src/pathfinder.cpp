#include "bergecov/pathfinder.hpp"

#include "bergecov/error.hpp"

#include <bit>

namespace bergecov {

void require_covering_rank3(const Hypergraph & h, int min_order)
{
    if (h.order() < min_order)
        fail(ErrorKind::TooFewVertices, "need at least " + std::to_string(min_order) + " vertices, got " + std::to_string(h.order()));
    if (h.rank() > 3)
        fail(ErrorKind::EdgeSizeOutOfRange, "constructive finders need every edge to have size 2 or 3");
    if (! is_covering(h))
        fail(ErrorKind::NotCovering, "hypergraph is not covering");
}

namespace {
    auto first_free_container(const Hypergraph & h, const std::vector<char> & used, VertexMask required) -> EdgeIndex
    {
        for (EdgeIndex e = 0; e < h.size(); ++e)
            if (! used[e] && h.contains_all(e, required))
                return e;
        return -1;
    }

    struct GrowingPath
    {
        std::vector<Vertex> base;
        std::vector<EdgeIndex> edges;
        std::vector<char> used;
        VertexMask members = 0;

        auto try_attach(const Hypergraph & h, Vertex u) -> bool
        {
            if (auto e = first_free_container(h, used, pair_mask(u, base.front())); e >= 0) {
                base.insert(base.begin(), u);
                edges.insert(edges.begin(), e);
                used[e] = 1;
                members |= vertex_bit(u);
                return true;
            }
            if (auto e = first_free_container(h, used, pair_mask(u, base.back())); e >= 0) {
                base.push_back(u);
                edges.push_back(e);
                used[e] = 1;
                members |= vertex_bit(u);
                return true;
            }
            return false;
        }
    };

    auto dump(const GrowingPath & p) -> std::string
    {
        std::string s = "path base=[";
        for (auto v : p.base)
            s += std::to_string(v) + " ";
        s += "] edges=[";
        for (auto e : p.edges)
            s += std::to_string(e) + " ";
        return s + "]";
    }
}

auto find_hamiltonian_path(const Hypergraph & h) -> BergePath
{
    require_covering_rank3(h, 4);

    GrowingPath p;
    p.used.assign(h.size(), 0);
    auto seed = vertices_of(h.mask(0));
    p.base = {seed[0], seed[1]};
    p.edges = {0};
    p.used[0] = 1;
    p.members = pair_mask(seed[0], seed[1]);

    const auto all = h.all_vertices();
    while (p.members != all) {
        const auto t = static_cast<int>(p.base.size());
        const Vertex u = std::countr_zero(all & ~p.members) + 1;
        if (p.try_attach(h, u))
            continue;

        if (t == 2) {
            // The single used edge is {u, v1, v2}; any other outside vertex
            // misses it, so attaching that vertex cannot be blocked.
            bool attached = false;
            for (auto x : vertices_of(all & ~p.members & ~vertex_bit(u)))
                if (p.try_attach(h, x)) {
                    attached = true;
                    break;
                }
            if (! attached)
                invariant_violation("no outside vertex attaches to a two-vertex path; " + dump(p) + " in " + describe(h));
            continue;
        }

        const Vertex first = p.base.front();
        const Vertex last = p.base.back();
        const EdgeIndex head = p.edges.front();
        const EdgeIndex tail = p.edges.back();
        if (h.mask(head) != (pair_mask(u, first) | vertex_bit(p.base[1])))
            invariant_violation("blocked start is not embedded by {u, v1, v2}; u=" + std::to_string(u) + " " + dump(p));
        if (h.mask(tail) != (pair_mask(u, last) | vertex_bit(p.base[t - 2])))
            invariant_violation("blocked end is not embedded by {u, v_{t-1}, v_t}; u=" + std::to_string(u) + " " + dump(p));

        auto closing = first_free_container(h, p.used, pair_mask(first, last));
        if (closing < 0)
            invariant_violation("no free edge through {v1, vt}; " + dump(p) + " in " + describe(h));

        // v2 .. vt v1 u
        std::vector<Vertex> base(p.base.begin() + 1, p.base.end());
        base.push_back(first);
        base.push_back(u);
        std::vector<EdgeIndex> edges(p.edges.begin() + 1, p.edges.end());
        edges.push_back(closing);
        edges.push_back(head);
        p.base = std::move(base);
        p.edges = std::move(edges);
        p.used[closing] = 1;
        p.members |= vertex_bit(u);
    }

    BergePath result{std::move(p.base), std::move(p.edges)};
    if (! verify_path(h, result))
        invariant_violation("constructed path fails verification; in " + describe(h));
    return result;
}

}
