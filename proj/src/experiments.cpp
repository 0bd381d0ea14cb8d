#include "bergecov/experiments.hpp"

#include "bergecov/cyclefinder.hpp"
#include "bergecov/enumerate.hpp"
#include "bergecov/error.hpp"
#include "bergecov/oracle.hpp"
#include "bergecov/pathfinder.hpp"
#include "bergecov/random.hpp"

#include <algorithm>

namespace bergecov {

namespace {
    auto missing_lengths(const Hypergraph & h) -> std::vector<int>
    {
        std::vector<int> missing;
        const int top = std::min(h.size(), h.order());
        for (int s = 3; s <= top; ++s)
            if (! exists_cycle(h, s))
                missing.push_back(s);
        return missing;
    }

    auto make_failure(const Hypergraph & h, std::vector<int> missing, std::string detail = {}) -> Failure
    {
        Failure f{h, {}, std::move(missing), std::move(detail)};
        if (h.order() <= 8)
            f.canonical = canonical_form(h);
        return f;
    }

    void sort_failures(std::vector<Failure> & failures)
    {
        std::stable_sort(failures.begin(), failures.end(), [](const Failure & a, const Failure & b) {
            if (a.hypergraph.order() != b.hypergraph.order())
                return a.hypergraph.order() < b.hypergraph.order();
            return a.canonical < b.canonical;
        });
    }

    struct Shard
    {
        std::uint64_t checked = 0;
        std::vector<Failure> failures;
    };

    auto merge(std::vector<Shard> & shards) -> ExperimentReport
    {
        ExperimentReport r;
        for (auto & s : shards) {
            r.checked += s.checked;
            for (auto & f : s.failures)
                r.failures.push_back(std::move(f));
        }
        sort_failures(r.failures);
        return r;
    }

    auto cycle_survey(const CoveringEnumerator & en, int jobs) -> ExperimentReport
    {
        std::vector<Shard> shards(en.shard_count());
        for_each_shard(shards.size(), jobs, [&](std::size_t s) {
            en.visit(s, [&](const Hypergraph & h) {
                ++shards[s].checked;
                if (auto missing = missing_lengths(h); ! missing.empty())
                    shards[s].failures.push_back(make_failure(h, std::move(missing)));
            });
        });
        return merge(shards);
    }
}

auto remark5_experiment(int jobs) -> ExperimentReport
{
    ExperimentReport total;
    for (int n = 3; n <= 5; ++n) {
        CoveringEnumerator en({n, SizeSet{2, 3}, 3, std::numeric_limits<int>::max(), true});
        auto r = cycle_survey(en, jobs);
        total.checked += r.checked;
        for (auto & f : r.failures)
            total.failures.push_back(std::move(f));
    }
    return total;
}

auto conjecture_search(const ConjectureOptions & options) -> ExperimentReport
{
    if (options.k < 4)
        fail(ErrorKind::InvalidParameters, "the conjecture concerns k >= 4");
    if (options.n < options.k)
        fail(ErrorKind::InvalidParameters, "need n >= k");
    if (options.mode == SearchMode::Exhaustive) {
        if (options.k != 4 || options.n > 6)
            fail(ErrorKind::CapExceeded, "exhaustive search is limited to k = 4, n <= 6");
        CoveringEnumerator en({options.n, SizeSet{options.k}, 3, std::numeric_limits<int>::max(), true});
        return cycle_survey(en, options.jobs);
    }

    constexpr std::uint64_t per_shard = 256;
    const auto shard_total = (options.budget + per_shard - 1) / per_shard;
    std::vector<Shard> shards(shard_total);
    for_each_shard(shard_total, options.jobs, [&](std::size_t s) {
        const auto end = std::min<std::uint64_t>(options.budget, (s + 1) * per_shard);
        for (auto i = s * per_shard; i < end; ++i) {
            auto rng = instance_rng(options.seed, i);
            const double density = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
            auto h = random_covering_uniform(options.n, options.k, rng, density);
            if (h.size() < 3)
                continue;
            ++shards[s].checked;
            if (auto missing = missing_lengths(h); ! missing.empty())
                shards[s].failures.push_back(make_failure(h, std::move(missing)));
        }
    });
    return merge(shards);
}

auto rank3_sweep(const SweepOptions & options) -> SweepReport
{
    struct Part
    {
        SweepReport r;
    };
    CoveringEnumerator en({options.n, SizeSet{2, 3}, 0, std::numeric_limits<int>::max(), true});
    std::vector<Part> parts(en.shard_count());
    const bool cycles = options.cycles && options.n >= 6;
    for_each_shard(parts.size(), options.jobs, [&](std::size_t s) {
        auto & r = parts[s].r;
        en.visit(s, [&](const Hypergraph & h) {
            ++r.instances;
            std::vector<int> bad;
            std::string detail;
            auto note = [&](std::uint64_t & counter, int length, const std::string & what) {
                ++counter;
                bad.push_back(length);
                if (! detail.empty())
                    detail += "; ";
                detail += what;
            };
            if (options.paths) {
                try {
                    auto p = find_hamiltonian_path(h);
                    if (! verify_path(h, p) || static_cast<int>(p.base.size()) != h.order())
                        note(r.path_failures, h.order(), "path certificate invalid");
                }
                catch (const Error & e) {
                    note(r.path_failures, h.order(), std::string("path: ") + e.what());
                }
            }
            if (cycles) {
                try {
                    auto all = find_all_cycles(h);
                    for (int s = 3; s <= h.order(); ++s) {
                        const auto & c = all[s - 3];
                        if (c.length() != s || ! verify_cycle(h, c))
                            note(r.cycle_failures, s, "cycle certificate invalid");
                    }
                }
                catch (const Error & e) {
                    note(r.cycle_failures, 0, std::string("cycle: ") + e.what());
                }
            }
            if (options.oracle)
                for (int s = 3; s <= h.order(); ++s)
                    if (! exists_cycle(h, s))
                        note(r.oracle_failures, s, "oracle: no C" + std::to_string(s));
            if (! bad.empty() && r.examples.size() < options.keep)
                r.examples.push_back(make_failure(h, std::move(bad), std::move(detail)));
        });
    });

    SweepReport total;
    for (auto & p : parts) {
        total.instances += p.r.instances;
        total.path_failures += p.r.path_failures;
        total.cycle_failures += p.r.cycle_failures;
        total.oracle_failures += p.r.oracle_failures;
        for (auto & f : p.r.examples)
            if (total.examples.size() < options.keep)
                total.examples.push_back(std::move(f));
    }
    return total;
}

}
