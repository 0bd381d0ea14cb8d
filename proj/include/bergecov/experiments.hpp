#pragma once

#include "bergecov/hypergraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bergecov {

struct Failure
{
    Hypergraph hypergraph;
    /// canonical_form of the hypergraph (empty when n > 8).
    std::vector<VertexMask> canonical;
    /// Cycle lengths with no Berge cycle, or lengths where a finder failed.
    std::vector<int> missing;
    std::string detail;
};

struct ExperimentReport
{
    std::uint64_t checked = 0;
    /// Sorted by (n, canonical encoding).
    std::vector<Failure> failures;
};

/// Every covering {2,3}-graph with 3 <= n <= 5 and m >= 3 edges, up to
/// isomorphism, checked for Berge cycles of each length 3..min(m, n).
auto remark5_experiment(int jobs = 1) -> ExperimentReport;

enum class SearchMode { Exhaustive, Random };

struct ConjectureOptions
{
    int k = 4;
    int n = 5;
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t budget = 10000;
    std::uint64_t seed = 1;
    int jobs = 1;
};

/// Covering k-graphs with m >= 3 edges, checked for Berge cycles of every
/// length 3..min(m, n). Exhaustive mode is limited to k = 4, n <= 6.
auto conjecture_search(const ConjectureOptions & options) -> ExperimentReport;

struct SweepOptions
{
    int n = 6;
    bool paths = true;
    /// find_all_cycles; skipped below n = 6.
    bool cycles = true;
    /// exists_cycle for each s in 3..n.
    bool oracle = true;
    int jobs = 1;
    /// How many failing instances to keep in the report.
    std::size_t keep = 20;
};

struct SweepReport
{
    std::uint64_t instances = 0;
    std::uint64_t path_failures = 0;
    std::uint64_t cycle_failures = 0;
    std::uint64_t oracle_failures = 0;
    std::vector<Failure> examples;
};

/// Runs the constructive finders and the oracle over every covering
/// {2,3}-graph on n vertices up to isomorphism.
auto rank3_sweep(const SweepOptions & options) -> SweepReport;

}
