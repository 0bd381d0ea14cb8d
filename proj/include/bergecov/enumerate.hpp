#pragma once

#include "bergecov/hypergraph.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <vector>

namespace bergecov {

struct CoveringQuery
{
    int n = 0;
    SizeSet sizes;
    int m_min = 0;
    int m_max = std::numeric_limits<int>::max();
    /// One representative per isomorphism class instead of every labeled
    /// hypergraph.
    bool canonical = true;
};

struct EnumerationCaps
{
    /// Largest n for canonical enumeration when R has more than one size.
    int mixed_order = 6;
    /// Largest n for canonical enumeration of uniform hypergraphs.
    int uniform_order = 7;
    /// Largest number of candidate edges for labeled enumeration (2^items subsets).
    int labeled_items = 24;
};

/// Covering hypergraphs split into independent shards.
///
/// Canonical mode runs in two levels. Level one generates the edges of size
/// three and more up to isomorphism by orderly generation (a set is kept
/// when no relabeling maps it to a larger bitmask, and dropping its lowest
/// item always yields its canonical parent). Level two adds the 2-edges:
/// pairs the first level misses are forced, and subsets of the covered
/// pairs are kept when they are maximal in their orbit under the
/// automorphism group of the level-one set. Each level-one class is a shard.
///
/// Instances list their edges in ascending mask order.
class CoveringEnumerator
{
public:
    using Visitor = std::function<void(const Hypergraph &)>;

    /// Throws CapExceeded when the query is beyond the configured limits.
    explicit CoveringEnumerator(CoveringQuery query, EnumerationCaps caps = {});
    ~CoveringEnumerator();
    CoveringEnumerator(CoveringEnumerator &&) noexcept;
    CoveringEnumerator & operator=(CoveringEnumerator &&) noexcept;

    auto query() const -> const CoveringQuery & { return _query; }
    auto shard_count() const -> std::size_t;
    void visit(std::size_t shard, const Visitor & visitor) const;
    void visit_all(const Visitor & visitor) const;

private:
    struct Impl;

    CoveringQuery _query;
    std::unique_ptr<Impl> _impl;
};

auto enumerate_covering(const CoveringQuery & query, const EnumerationCaps & caps = {}) -> std::vector<Hypergraph>;

auto count_covering(const CoveringQuery & query, const EnumerationCaps & caps = {}) -> std::uint64_t;

/// Runs `work(shard)` for every shard. jobs <= 1 is a plain loop on the
/// calling thread; otherwise shards are handed out dynamically to OpenMP
/// threads. `work` must only touch state owned by its shard.
void for_each_shard(std::size_t shards, int jobs, const std::function<void(std::size_t)> & work);

}
