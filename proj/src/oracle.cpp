#include "bergecov/oracle.hpp"

#include "bergecov/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace bergecov {

namespace {
    /// Containing edges for every ordered vertex pair, flattened.
    class PairIndex
    {
    public:
        explicit PairIndex(const Hypergraph & h) : _n(h.order()), _start(_n * _n + 1, 0)
        {
            for (EdgeIndex e = 0; e < h.size(); ++e)
                for (auto a : vertices_of(h.mask(e)))
                    for (auto b : vertices_of(h.mask(e)))
                        if (a != b)
                            ++_start[slot(a, b) + 1];
            std::partial_sum(_start.begin(), _start.end(), _start.begin());
            _list.resize(_start.back());
            auto fill = _start;
            for (EdgeIndex e = 0; e < h.size(); ++e)
                for (auto a : vertices_of(h.mask(e)))
                    for (auto b : vertices_of(h.mask(e)))
                        if (a != b)
                            _list[fill[slot(a, b)]++] = e;
        }

        auto containers(Vertex a, Vertex b) const -> std::span<const EdgeIndex>
        {
            auto k = slot(a, b);
            return {_list.data() + _start[k], _list.data() + _start[k + 1]};
        }

    private:
        auto slot(Vertex a, Vertex b) const -> int { return (a - 1) * _n + (b - 1); }

        int _n;
        std::vector<int> _start;
        std::vector<EdgeIndex> _list;
    };

    /// Bipartite matching of pairs to edges that grows one pair at a time
    /// and can roll back to an earlier size.
    class Matcher
    {
    public:
        Matcher(int edges, int max_pairs) : _edges(edges), _owner(edges, -1), _seen(edges, 0)
        {
            _pairs.reserve(max_pairs);
            _match.reserve(max_pairs);
            _history.reserve(static_cast<std::size_t>(edges) * (max_pairs + 1));
        }

        auto size() const -> int { return static_cast<int>(_pairs.size()); }

        auto push(std::span<const EdgeIndex> options) -> bool
        {
            _history.insert(_history.end(), _owner.begin(), _owner.end());
            _pairs.push_back(options);
            _match.push_back(-1);
            ++_stamp;
            if (augment(size() - 1))
                return true;
            pop();
            return false;
        }

        void pop()
        {
            std::copy(_history.end() - _edges, _history.end(), _owner.begin());
            _history.resize(_history.size() - _edges);
            _pairs.pop_back();
            _match.pop_back();
            for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(_edges); ++e)
                if (_owner[e] >= 0)
                    _match[_owner[e]] = e;
        }

        auto assignment() const -> std::vector<EdgeIndex> { return _match; }

    private:
        auto augment(int k) -> bool
        {
            for (auto e : _pairs[k]) {
                if (_seen[e] == _stamp)
                    continue;
                _seen[e] = _stamp;
                if (_owner[e] < 0 || augment(_owner[e])) {
                    _owner[e] = k;
                    _match[k] = e;
                    return true;
                }
            }
            return false;
        }

        std::size_t _edges;
        std::vector<int> _owner;
        std::vector<unsigned> _seen;
        unsigned _stamp = 0;
        std::vector<std::span<const EdgeIndex>> _pairs;
        std::vector<EdgeIndex> _match;
        std::vector<int> _history;
    };

    auto falling(int n, int k) -> double
    {
        double r = 1;
        for (int i = 0; i < k; ++i)
            r *= n - i;
        return r;
    }

    void check_cap(double sequences, const OracleLimits & limits)
    {
        if (sequences > limits.max_sequences)
            fail(ErrorKind::CapExceeded,
                "exhaustive search would visit up to " + std::to_string(sequences) + " base sequences (cap "
                    + std::to_string(limits.max_sequences) + ")");
    }

    struct SequenceSearch
    {
        const Hypergraph & h;
        PairIndex pairs;
        Matcher matcher;
        std::vector<Vertex> seq;
        VertexMask on = 0;
        int target;
        bool cyclic;

        SequenceSearch(const Hypergraph & host, int t, bool cycle) :
            h(host), pairs(host), matcher(host.size(), t), target(t), cyclic(cycle)
        {
        }

        auto extend() -> bool
        {
            const int depth = static_cast<int>(seq.size());
            const Vertex prev = seq.back();
            for (Vertex v = 1; v <= h.order(); ++v) {
                if (on & vertex_bit(v))
                    continue;
                if (cyclic && v < seq.front())
                    continue;
                const bool last = depth == target - 1;
                if (last && cyclic && v < seq[1])
                    continue;
                if (last && ! cyclic && v < seq.front())
                    continue;
                if (! matcher.push(pairs.containers(prev, v)))
                    continue;
                seq.push_back(v);
                on |= vertex_bit(v);
                if (last) {
                    if (! cyclic || matcher.push(pairs.containers(v, seq.front())))
                        return true;
                }
                else if (extend())
                    return true;
                seq.pop_back();
                on &= ~vertex_bit(v);
                matcher.pop();
            }
            return false;
        }

        auto run() -> bool
        {
            for (Vertex v1 = 1; v1 <= h.order(); ++v1) {
                if (cyclic && h.order() - v1 + 1 < target)
                    break;
                seq = {v1};
                on = vertex_bit(v1);
                if (target == 1 || extend())
                    return true;
            }
            return false;
        }
    };
}

auto exists_cycle(const Hypergraph & h, int s, const OracleLimits & limits) -> std::optional<BergeCycle>
{
    const int n = h.order();
    if (s < 3 || s > n)
        fail(ErrorKind::LengthOutOfRange, "cycle length " + std::to_string(s) + " outside 3.." + std::to_string(n));
    check_cap(falling(n, s) / (2.0 * s), limits);
    if (h.size() < s)
        return std::nullopt;

    SequenceSearch search(h, s, true);
    if (! search.run())
        return std::nullopt;
    BergeCycle c(search.seq, search.matcher.assignment());
    if (! verify_cycle(h, c))
        invariant_violation("oracle produced an invalid cycle certificate");
    return c;
}

auto exists_path(const Hypergraph & h, int t, const OracleLimits & limits) -> std::optional<BergePath>
{
    const int n = h.order();
    if (t < 2 || t > n)
        fail(ErrorKind::LengthOutOfRange, "path base count " + std::to_string(t) + " outside 2.." + std::to_string(n));
    check_cap(falling(n, t) / 2.0, limits);
    if (h.size() < t - 1)
        return std::nullopt;

    SequenceSearch search(h, t, false);
    if (! search.run())
        return std::nullopt;
    BergePath p{search.seq, search.matcher.assignment()};
    if (! verify_path(h, p))
        invariant_violation("oracle produced an invalid path certificate");
    return p;
}

auto assign_distinct_edges(const Hypergraph & h, std::span<const VertexMask> pairs)
    -> std::optional<std::vector<EdgeIndex>>
{
    std::vector<std::vector<EdgeIndex>> options;
    for (auto p : pairs)
        options.push_back(h.containers(p));
    Matcher m(h.size(), static_cast<int>(pairs.size()));
    for (const auto & o : options)
        if (! m.push(o))
            return std::nullopt;
    return m.assignment();
}

auto assign_distinct_edges_backtracking(const Hypergraph & h, std::span<const VertexMask> pairs)
    -> std::optional<std::vector<EdgeIndex>>
{
    std::vector<EdgeIndex> chosen(pairs.size(), -1);
    std::vector<char> used(h.size(), 0);
    auto go = [&](auto & self, std::size_t k) -> bool {
        if (k == pairs.size())
            return true;
        for (EdgeIndex e = 0; e < h.size(); ++e) {
            if (used[e] || ! h.contains_all(e, pairs[k]))
                continue;
            used[e] = 1;
            chosen[k] = e;
            if (self(self, k + 1))
                return true;
            used[e] = 0;
        }
        return false;
    };
    if (! go(go, 0))
        return std::nullopt;
    return chosen;
}

auto permute(const Hypergraph & h, std::span<const Vertex> perm) -> Hypergraph
{
    if (static_cast<int>(perm.size()) != h.order())
        fail(ErrorKind::DimensionMismatch, "permutation size differs from the order");
    std::vector<VertexMask> masks;
    masks.reserve(h.size());
    for (auto m : h.masks()) {
        VertexMask image = 0;
        for (auto v : vertices_of(m))
            image |= vertex_bit(perm[v - 1]);
        masks.push_back(image);
    }
    return Hypergraph::from_masks(h.order(), h.sizes(), std::move(masks));
}

auto canonical_form(const Hypergraph & h) -> std::vector<VertexMask>
{
    const int n = h.order();
    if (n > 8)
        fail(ErrorKind::CapExceeded, "canonical form is limited to n <= 8");
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<VertexMask> best, image(h.size());
    do {
        for (EdgeIndex e = 0; e < h.size(); ++e) {
            VertexMask m = 0;
            for (auto bits = h.mask(e); bits; bits &= bits - 1)
                m |= vertex_bit(perm[std::countr_zero(bits)]);
            image[e] = m;
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best)
            best = image;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}
