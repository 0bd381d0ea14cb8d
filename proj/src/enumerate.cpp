#include "bergecov/enumerate.hpp"

#include "bergecov/error.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>

namespace bergecov {

namespace {
    using ItemMask = std::uint64_t;

    struct Item
    {
        VertexMask mask;
        bool pair;
        int index;  // position within its level
    };

    auto subsets_with_sizes(int n, const SizeSet & sizes) -> std::vector<VertexMask>
    {
        std::vector<VertexMask> out;
        for (VertexMask m = 1; m < (VertexMask{1} << n); ++m)
            if (sizes.contains(std::popcount(m)))
                out.push_back(m);
        return out;
    }

    auto apply(const std::vector<Vertex> & perm, VertexMask m) -> VertexMask
    {
        VertexMask r = 0;
        for (; m; m &= m - 1)
            r |= vertex_bit(perm[std::countr_zero(m)]);
        return r;
    }

    /// Per-permutation lookup tables mapping a bitmask over `items` to the
    /// bitmask of the relabeled items, one byte at a time.
    class ImageTables
    {
    public:
        ImageTables() = default;

        ImageTables(const std::vector<std::vector<Vertex>> & perms, const std::vector<VertexMask> & items) :
            _bytes((static_cast<int>(items.size()) + 7) / 8), _perms(static_cast<int>(perms.size()))
        {
            _table.assign(static_cast<std::size_t>(_perms) * _bytes * 256, 0);
            for (int p = 0; p < _perms; ++p) {
                std::vector<int> image(items.size());
                for (std::size_t i = 0; i < items.size(); ++i) {
                    auto target = apply(perms[p], items[i]);
                    image[i] = static_cast<int>(std::lower_bound(items.begin(), items.end(), target) - items.begin());
                }
                for (int b = 0; b < _bytes; ++b)
                    for (int v = 0; v < 256; ++v) {
                        ItemMask out = 0;
                        for (int k = 0; k < 8; ++k) {
                            auto i = b * 8 + k;
                            if ((v >> k) & 1 && i < static_cast<int>(items.size()))
                                out |= ItemMask{1} << image[i];
                        }
                        _table[(static_cast<std::size_t>(p) * _bytes + b) * 256 + v] = out;
                    }
            }
        }

        auto image(int perm, ItemMask s) const -> ItemMask
        {
            ItemMask out = 0;
            const auto * t = _table.data() + static_cast<std::size_t>(perm) * _bytes * 256;
            for (int b = 0; b < _bytes; ++b, t += 256)
                out |= t[(s >> (8 * b)) & 0xff];
            return out;
        }

        auto perms() const -> int { return _perms; }

    private:
        int _bytes = 0;
        int _perms = 0;
        std::vector<ItemMask> _table;
    };
}

struct CoveringEnumerator::Impl
{
    CoveringQuery q;
    std::vector<Item> universe;  // every allowed edge, ascending mask
    std::vector<VertexMask> upper;  // level-one items (size >= 3), ascending
    std::vector<VertexMask> pairs;  // level-two items, ascending
    std::vector<ItemMask> upper_cover;  // pairs covered by each level-one item
    ItemMask all_pairs = 0;
    bool with_pairs = false;

    // canonical mode
    std::vector<std::vector<Vertex>> perms;  // perms[0] is the identity
    ImageTables upper_images, pair_images;
    std::vector<ItemMask> classes;

    // labeled mode
    std::vector<ItemMask> item_cover;  // pairs covered by each universe item
    int fixed_bits = 0;

    auto pair_id(VertexMask m) const -> int
    {
        return static_cast<int>(std::lower_bound(pairs.begin(), pairs.end(), m) - pairs.begin());
    }

    auto covered_by(VertexMask m) const -> ItemMask
    {
        ItemMask out = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((pairs[i] & m) == pairs[i])
                out |= ItemMask{1} << i;
        return out;
    }

    void emit(ItemMask upper_set, ItemMask pair_set, std::vector<VertexMask> & scratch, const Visitor & visitor) const
    {
        scratch.clear();
        for (const auto & it : universe) {
            auto set = it.pair ? pair_set : upper_set;
            if ((set >> it.index) & 1)
                scratch.push_back(it.mask);
        }
        visitor(Hypergraph::from_trusted_masks(q.n, q.sizes, scratch));
    }

    auto canonical_upper(ItemMask s) const -> bool
    {
        for (int p = 1; p < upper_images.perms(); ++p)
            if (upper_images.image(p, s) > s)
                return false;
        return true;
    }

    void grow(ItemMask s)
    {
        classes.push_back(s);
        if (std::popcount(s) >= q.m_max)
            return;
        const int limit = s ? std::countr_zero(s) : static_cast<int>(upper.size());
        for (int y = 0; y < limit; ++y) {
            auto t = s | ItemMask{1} << y;
            if (canonical_upper(t))
                grow(t);
        }
    }

    void visit_canonical(std::size_t shard, const Visitor & visitor) const
    {
        const auto t = classes[shard];
        ItemMask covered = 0;
        for (auto bits = t; bits; bits &= bits - 1)
            covered |= upper_cover[std::countr_zero(bits)];
        const ItemMask forced = all_pairs & ~covered;
        if (! with_pairs && forced)
            return;

        std::vector<VertexMask> scratch;
        const int base = std::popcount(t) + std::popcount(forced);
        if (! with_pairs) {
            if (base >= q.m_min && base <= q.m_max)
                emit(t, 0, scratch, visitor);
            return;
        }

        std::vector<int> automorphisms;
        for (int p = 1; p < upper_images.perms(); ++p)
            if (upper_images.image(p, t) == t)
                automorphisms.push_back(p);

        // Subsets of the covered pairs, walked as submasks of `covered`.
        ItemMask x = 0;
        do {
            const int m = base + std::popcount(x);
            if (m >= q.m_min && m <= q.m_max) {
                bool maximal = true;
                for (auto p : automorphisms)
                    if (pair_pictures(p, x) > x) {
                        maximal = false;
                        break;
                    }
                if (maximal)
                    emit(t, forced | x, scratch, visitor);
            }
            x = (x - covered) & covered;
        } while (x != 0);
    }

    auto pair_pictures(int perm, ItemMask x) const -> ItemMask { return pair_images.image(perm, x); }

    void visit_labeled(std::size_t shard, const Visitor & visitor) const
    {
        const int u = static_cast<int>(universe.size());
        const int free_bits = u - fixed_bits;
        std::vector<VertexMask> scratch;
        for (ItemMask low = 0; low < (ItemMask{1} << free_bits); ++low) {
            const ItemMask chosen = low | (static_cast<ItemMask>(shard) << free_bits);
            const int m = std::popcount(chosen);
            if (m < q.m_min || m > q.m_max)
                continue;
            ItemMask covered = 0;
            for (auto bits = chosen; bits; bits &= bits - 1)
                covered |= item_cover[std::countr_zero(bits)];
            if (covered != all_pairs)
                continue;
            scratch.clear();
            for (int i = 0; i < u; ++i)
                if ((chosen >> i) & 1)
                    scratch.push_back(universe[i].mask);
            visitor(Hypergraph::from_trusted_masks(q.n, q.sizes, scratch));
        }
    }
};

CoveringEnumerator::CoveringEnumerator(CoveringQuery query, EnumerationCaps caps) :
    _query(query), _impl(std::make_unique<Impl>())
{
    auto & d = *_impl;
    d.q = query;
    const int n = query.n;
    if (n < 2 || n > max_order)
        fail(ErrorKind::InvalidParameters, "enumeration needs 2 <= n");
    if (query.sizes.empty())
        fail(ErrorKind::InvalidParameters, "enumeration needs a nonempty size set");
    if (n * (n - 1) / 2 > 64)
        fail(ErrorKind::CapExceeded, "enumeration is limited to n <= 11");

    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b)
            d.pairs.push_back(pair_mask(a, b));
    std::sort(d.pairs.begin(), d.pairs.end());
    d.all_pairs = d.pairs.size() == 64 ? ~ItemMask{0} : (ItemMask{1} << d.pairs.size()) - 1;
    d.with_pairs = query.sizes.contains(2);

    if (! query.canonical) {
        if (n > 24)
            fail(ErrorKind::CapExceeded, "labeled enumeration is limited to n <= 24");
        auto all = subsets_with_sizes(n, query.sizes);
        if (static_cast<int>(all.size()) > caps.labeled_items)
            fail(ErrorKind::CapExceeded,
                "labeled enumeration over " + std::to_string(all.size()) + " candidate edges exceeds the cap of "
                    + std::to_string(caps.labeled_items));
        for (std::size_t i = 0; i < all.size(); ++i) {
            d.universe.push_back({all[i], false, static_cast<int>(i)});
            d.item_cover.push_back(d.covered_by(all[i]));
        }
        d.fixed_bits = std::min<int>(6, static_cast<int>(all.size()));
        return;
    }

    const bool uniform = query.sizes.values().size() == 1;
    const int cap = uniform ? caps.uniform_order : caps.mixed_order;
    if (n > cap || n > 8)
        fail(ErrorKind::CapExceeded,
            "canonical enumeration with these sizes is capped at n <= " + std::to_string(std::min(cap, 8)));

    std::vector<int> big;
    for (auto s : query.sizes.values())
        if (s >= 3)
            big.push_back(s);
    d.upper = subsets_with_sizes(n, SizeSet(std::span<const int>(big)));
    if (d.upper.size() > 64)
        fail(ErrorKind::CapExceeded, "more than 64 candidate edges of size >= 3");
    for (auto m : d.upper)
        d.upper_cover.push_back(d.covered_by(m));

    for (std::size_t i = 0; i < d.upper.size(); ++i)
        d.universe.push_back({d.upper[i], false, static_cast<int>(i)});
    if (d.with_pairs)
        for (std::size_t i = 0; i < d.pairs.size(); ++i)
            d.universe.push_back({d.pairs[i], true, static_cast<int>(i)});
    std::sort(d.universe.begin(), d.universe.end(), [](const Item & a, const Item & b) { return a.mask < b.mask; });

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do
        d.perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    d.upper_images = ImageTables(d.perms, d.upper);
    if (d.with_pairs)
        d.pair_images = ImageTables(d.perms, d.pairs);

    d.grow(0);
}

CoveringEnumerator::~CoveringEnumerator() = default;
CoveringEnumerator::CoveringEnumerator(CoveringEnumerator &&) noexcept = default;
CoveringEnumerator & CoveringEnumerator::operator=(CoveringEnumerator &&) noexcept = default;

auto CoveringEnumerator::shard_count() const -> std::size_t
{
    if (_query.canonical)
        return _impl->classes.size();
    return std::size_t{1} << _impl->fixed_bits;
}

void CoveringEnumerator::visit(std::size_t shard, const Visitor & visitor) const
{
    if (shard >= shard_count())
        fail(ErrorKind::IndexOutOfRange, "shard " + std::to_string(shard) + " does not exist");
    if (_query.canonical)
        _impl->visit_canonical(shard, visitor);
    else
        _impl->visit_labeled(shard, visitor);
}

void CoveringEnumerator::visit_all(const Visitor & visitor) const
{
    for (std::size_t s = 0; s < shard_count(); ++s)
        visit(s, visitor);
}

auto enumerate_covering(const CoveringQuery & query, const EnumerationCaps & caps) -> std::vector<Hypergraph>
{
    std::vector<Hypergraph> out;
    CoveringEnumerator(query, caps).visit_all([&](const Hypergraph & h) { out.push_back(h); });
    return out;
}

auto count_covering(const CoveringQuery & query, const EnumerationCaps & caps) -> std::uint64_t
{
    std::uint64_t count = 0;
    CoveringEnumerator(query, caps).visit_all([&](const Hypergraph &) { ++count; });
    return count;
}

void for_each_shard(std::size_t shards, int jobs, const std::function<void(std::size_t)> & work)
{
    if (jobs <= 1) {
        for (std::size_t s = 0; s < shards; ++s)
            work(s);
        return;
    }
    const auto total = static_cast<long long>(shards);
    std::vector<std::exception_ptr> errors(shards);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (long long s = 0; s < total; ++s) {
        try {
            work(static_cast<std::size_t>(s));
        }
        catch (...) {
            errors[s] = std::current_exception();
        }
    }
    for (auto & e : errors)
        if (e)
            std::rethrow_exception(e);
}

}
