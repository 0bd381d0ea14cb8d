#pragma once

#include "bergecov/hypergraph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bergecov {

/// A point of the probability simplex, one entry per vertex.
using Weighting = std::vector<double>;

enum class LagrangianMethod { Ascent, ClosedForm, ExactSmall };

auto to_string(LagrangianMethod m) -> std::string;

struct LagrangianResult
{
    double value = 0;
    Weighting witness;
    /// Vertices whose witness entry exceeds support_threshold.
    std::vector<Vertex> support;
    LagrangianMethod method = LagrangianMethod::Ascent;
    /// Set by minimal_support: whether the hypergraph induced on the final
    /// support is covering.
    bool support_covering = false;
};

inline constexpr double support_threshold = 1e-8;

struct MaximizeOptions
{
    int restarts = 64;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    /// For 2-graphs with n <= 20, also evaluate the clique-number formula
    /// and keep the better of the two.
    bool exact_2graph = true;
    int max_iterations = 100000;
    int jobs = 1;
};

/// Sum over edges of the product of their entries. H must be uniform.
auto polynomial_form(const Hypergraph & h, std::span<const double> x) -> double;

auto gradient(const Hypergraph & h, std::span<const double> x) -> std::vector<double>;

/// Euclidean projection onto the simplex (sort-based).
auto project_to_simplex(std::span<const double> y) -> Weighting;

struct Fraction
{
    std::string numerator;
    std::string denominator;

    auto str() const -> std::string { return numerator + "/" + denominator; }
    auto operator==(const Fraction &) const -> bool = default;
};

/// C(t,k)/t^k in lowest terms. Requires t >= k >= 2.
auto lambda_complete_exact(int k, int t) -> Fraction;
auto lambda_complete(int k, int t) -> double;

/// Best value found by projected-gradient ascent from a uniform start and
/// Dirichlet-distributed random starts. A lower bound on the Lagrangian.
auto maximize(const Hypergraph & h, const MaximizeOptions & options = {}) -> LagrangianResult;

/// Local ascent from a single start, restricted to the coordinates in
/// `allowed` (others are held at zero).
auto ascend(const Hypergraph & h, Weighting start, VertexMask allowed, const MaximizeOptions & options = {})
    -> LagrangianResult;

/// Clique number by exhaustive search; 2-graphs with n <= 20.
auto clique_number(const Hypergraph & g) -> int;

/// Exact Lagrangian of a 2-graph from its clique number, with a witness
/// uniform on a maximum clique.
auto motzkin_straus(const Hypergraph & g) -> LagrangianResult;

/// Drops support coordinates one at a time, re-ascending on the smaller
/// support, while the value stays within tolerance.
auto minimal_support(const Hypergraph & h, const LagrangianResult & result, const MaximizeOptions & options = {})
    -> LagrangianResult;

enum class FreenessMode { Cycle, Path };

struct BoundReport
{
    int k = 0;
    int t = 0;
    FreenessMode mode = FreenessMode::Cycle;
    double value = 0;
    double bound = 0;
    double margin = 0;
    bool holds = false;
    LagrangianResult result;
    std::string note;
};

/// Checks maximize(H).value <= lambda_complete(k, t-1) for a Berge-C_t-free
/// (or Berge-P_t-free) k-graph. Freeness is confirmed by the exhaustive
/// oracle first: PreconditionFailed if the cycle or path exists,
/// PreconditionNotChecked if the oracle cap is hit.
auto verify_bound(const Hypergraph & h, int t, FreenessMode mode, const MaximizeOptions & options = {})
    -> BoundReport;

/// Replaces x_s and x_t by their mean (vertices are 1-based).
auto symmetrize_step(std::span<const double> x, Vertex s, Vertex t) -> Weighting;

}
