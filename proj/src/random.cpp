#include "bergecov/random.hpp"

#include "bergecov/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace bergecov {

namespace {
    auto pick(std::mt19937_64 & rng, int lo, int hi) -> int
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    auto uncovered_pair(int n, const std::vector<VertexMask> & covered, std::mt19937_64 & rng)
        -> std::pair<Vertex, Vertex>
    {
        std::vector<std::pair<Vertex, Vertex>> missing;
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (! (covered[u - 1] & vertex_bit(v)))
                    missing.emplace_back(u, v);
        if (missing.empty())
            return {0, 0};
        return missing[pick(rng, 0, static_cast<int>(missing.size()) - 1)];
    }

    /// A random k-set containing {u, v} not yet in `present`, or 0.
    auto fresh_superset(int n, int k, Vertex u, Vertex v, const std::set<VertexMask> & present, std::mt19937_64 & rng)
        -> VertexMask
    {
        for (int attempt = 0; attempt < 64; ++attempt) {
            VertexMask m = pair_mask(u, v);
            while (std::popcount(m) < k)
                m |= vertex_bit(pick(rng, 1, n));
            if (! present.contains(m))
                return m;
        }
        return 0;
    }

    void add(std::vector<VertexMask> & edges, std::set<VertexMask> & present, std::vector<VertexMask> & covered, VertexMask m)
    {
        edges.push_back(m);
        present.insert(m);
        for (auto bits = m; bits; bits &= bits - 1)
            covered[std::countr_zero(bits)] |= m;
    }
}

auto instance_rng(std::uint64_t seed, std::uint64_t index) -> std::mt19937_64
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

auto random_covering_rank3(int n, std::mt19937_64 & rng, int extra, double pair_prob) -> Hypergraph
{
    if (n < 2 || n > max_order)
        fail(ErrorKind::InvalidParameters, "generator needs 2 <= n <= 64");
    if (pair_prob < 0 || pair_prob > 1 || extra < 0)
        fail(ErrorKind::InvalidParameters, "generator needs 0 <= pair_prob <= 1 and extra >= 0");

    std::vector<VertexMask> edges, covered(n, 0);
    std::set<VertexMask> present;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    if (n == 2)
        add(edges, present, covered, pair_mask(1, 2));
    for (int i = 0; i + 2 < n; i += 2)
        add(edges, present, covered, pair_mask(order[i], order[i + 1]) | vertex_bit(order[i + 2]));
    if (n % 2 == 0 && n > 2)
        add(edges, present, covered, pair_mask(order[n - 2], order[n - 1]) | vertex_bit(order[n - 3]));

    std::bernoulli_distribution as_pair(pair_prob);
    auto grow = [&](Vertex u, Vertex v) {
        VertexMask m = 0;
        if (n >= 3 && ! as_pair(rng))
            m = fresh_superset(n, 3, u, v, present, rng);
        if (! m && ! present.contains(pair_mask(u, v)))
            m = pair_mask(u, v);
        if (m)
            add(edges, present, covered, m);
    };
    for (;;) {
        auto [u, v] = uncovered_pair(n, covered, rng);
        if (! u)
            break;
        grow(u, v);
    }
    for (int i = 0; i < extra; ++i) {
        Vertex u = pick(rng, 1, n), v = pick(rng, 1, n - 1);
        if (v >= u)
            ++v;
        grow(u, v);
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return Hypergraph::from_masks(n, SizeSet{2, 3}, std::move(edges));
}

auto random_covering_rank3(const GeneratorOptions & options) -> Hypergraph
{
    std::mt19937_64 rng(options.seed);
    return random_covering_rank3(options.n, rng, options.extra, options.pair_prob);
}

auto random_covering_uniform(int n, int k, std::mt19937_64 & rng, double density) -> Hypergraph
{
    if (k < 2 || n < k || n > max_order)
        fail(ErrorKind::InvalidParameters, "generator needs 2 <= k <= n <= 64");
    std::vector<VertexMask> edges, covered(n, 0);
    std::set<VertexMask> present;
    for (;;) {
        auto [u, v] = uncovered_pair(n, covered, rng);
        if (! u)
            break;
        auto m = fresh_superset(n, k, u, v, present, rng);
        if (! m)
            fail(ErrorKind::InternalInvariantViolation, "could not find a fresh edge through an uncovered pair");
        add(edges, present, covered, m);
    }
    if (density > 0 && n <= 20) {
        std::bernoulli_distribution keep(density);
        for (VertexMask m = 1; m < (VertexMask{1} << n); ++m)
            if (std::popcount(m) == k && ! present.contains(m) && keep(rng))
                add(edges, present, covered, m);
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return Hypergraph::from_masks(n, SizeSet{k}, std::move(edges));
}

}
