#include "helpers.hpp"

#include "bergecov/lagrangian.hpp"

#include <cmath>
#include <random>

using namespace bergecov;
using bergecov::testing::H;
using bergecov::testing::complete;

namespace {
    auto random_point(int n, std::mt19937_64 & rng) -> Weighting
    {
        std::exponential_distribution<double> e(1.0);
        Weighting x(n);
        double total = 0;
        for (auto & v : x)
            total += v = e(rng);
        for (auto & v : x)
            v /= total;
        return x;
    }

    auto random_uniform(int n, int k, double p, std::mt19937_64 & rng) -> Hypergraph
    {
        std::bernoulli_distribution keep(p);
        std::vector<VertexMask> masks;
        for (VertexMask m = 1; m < (VertexMask{1} << n); ++m)
            if (popcount(m) == k && keep(rng))
                masks.push_back(m);
        return Hypergraph::from_masks(n, SizeSet{k}, masks);
    }

    auto cycle_graph(int n) -> Hypergraph
    {
        std::vector<VertexMask> masks;
        for (int i = 1; i <= n; ++i)
            masks.push_back(pair_mask(i, i % n + 1));
        return Hypergraph::from_masks(n, SizeSet{2}, masks);
    }
}

TEST(Polynomial, Examples)
{
    EXPECT_NEAR(polynomial_form(Hypergraph::validate({{1, 2, 3}}, 3, {3}), std::vector<double>(3, 1.0 / 3)), 1.0 / 27, 1e-15);
    EXPECT_NEAR(polynomial_form(complete(3, 4), std::vector<double>(4, 0.25)), 1.0 / 16, 1e-15);
    EXPECT_EQ(polynomial_form(Hypergraph::validate({}, 4, {3}), std::vector<double>{0.1, 0.2, 0.3, 0.4}), 0.0);
    EXPECT_KIND(polynomial_form(complete(3, 4), std::vector<double>(3, 0.2)), DimensionMismatch);
    EXPECT_KIND(polynomial_form(H(3, {{1, 2}, {1, 2, 3}}), std::vector<double>(3, 0.2)), NotUniform);
}

TEST(Gradient, PairAndEuler)
{
    auto g = gradient(Hypergraph::validate({{1, 2}}, 2, {2}), std::vector<double>{0.3, 0.7});
    EXPECT_DOUBLE_EQ(g[0], 0.7);
    EXPECT_DOUBLE_EQ(g[1], 0.3);

    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        int k = 2 + i % 3, n = k + 2 + i % 4;
        auto h = random_uniform(n, k, 0.5, rng);
        auto x = random_point(n, rng);
        auto grad = gradient(h, x);
        double dot = 0;
        for (int j = 0; j < n; ++j)
            dot += x[j] * grad[j];
        EXPECT_NEAR(dot, k * polynomial_form(h, x), 1e-12);
    }
}

TEST(Gradient, FiniteDifferences)
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        int k = 2 + i % 3, n = k + 1 + i % 5;
        auto h = random_uniform(n, k, 0.6, rng);
        auto x = random_point(n, rng);
        auto grad = gradient(h, x);
        for (int j = 0; j < n; ++j) {
            auto hi = x, lo = x;
            hi[j] += 1e-6;
            lo[j] -= 1e-6;
            EXPECT_NEAR((polynomial_form(h, hi) - polynomial_form(h, lo)) / 2e-6, grad[j], 1e-5);
        }
    }
}

TEST(Polynomial, Homogeneity)
{
    std::mt19937_64 rng(4);
    auto h = random_uniform(6, 3, 0.5, rng);
    auto x = random_point(6, rng);
    auto y = x;
    for (auto & v : y)
        v *= 2.5;
    EXPECT_NEAR(polynomial_form(h, y), std::pow(2.5, 3) * polynomial_form(h, x), 1e-12);
}

TEST(Projection, OntoSimplex)
{
    auto x = project_to_simplex(std::vector<double>{0.5, 0.5, 0.5});
    for (auto v : x)
        EXPECT_NEAR(v, 1.0 / 3, 1e-15);
    auto y = project_to_simplex(std::vector<double>{2.0, 0.0, -1.0});
    EXPECT_NEAR(y[0], 1.0, 1e-15);
    EXPECT_EQ(y[1], 0.0);
    EXPECT_EQ(y[2], 0.0);
}

TEST(LambdaComplete, ClosedForms)
{
    EXPECT_EQ(lambda_complete_exact(3, 5).str(), "2/25");
    EXPECT_DOUBLE_EQ(lambda_complete(3, 5), 0.08);
    EXPECT_EQ(lambda_complete_exact(2, 3).str(), "1/3");
    EXPECT_EQ(lambda_complete_exact(4, 4).str(), "1/256");
    EXPECT_KIND(lambda_complete(3, 2), InvalidParameters);
    EXPECT_KIND(lambda_complete(1, 4), InvalidParameters);
}

TEST(Maximize, CompleteFive)
{
    auto r = maximize(complete(3, 5));
    EXPECT_GE(r.value, 0.08 - 1e-6);
    EXPECT_LE(r.value, 0.08 + 1e-9);
    for (auto v : r.witness)
        EXPECT_NEAR(v, 0.2, 1e-4);
    EXPECT_NEAR(r.value, polynomial_form(complete(3, 5), r.witness), 1e-10);
}

TEST(Maximize, FiveCycleGraph)
{
    auto h = cycle_graph(5);
    EXPECT_NEAR(maximize(h).value, 0.25, 1e-12);
    MaximizeOptions ascent_only;
    ascent_only.exact_2graph = false;
    EXPECT_NEAR(maximize(h, ascent_only).value, 0.25, 1e-8);
}

TEST(Maximize, IsolatedVerticesDoNotMatter)
{
    auto r = maximize(complete(3, 5, 3));
    EXPECT_NEAR(r.value, 0.08, 1e-6);
    EXPECT_EQ(r.support, (std::vector<Vertex>{1, 2, 3, 4, 5}));
}

TEST(Maximize, UniformIsFixedPointOnComplete)
{
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= 7; ++n) {
            auto h = complete(k, n);
            auto r = ascend(h, Weighting(n, 1.0 / n), h.all_vertices());
            for (auto v : r.witness)
                EXPECT_NEAR(v, 1.0 / n, 1e-12);
            EXPECT_NEAR(r.value, lambda_complete(k, n), 1e-12);
        }
}

TEST(Maximize, MotzkinStrausAgreement)
{
    std::mt19937_64 rng(6);
    MaximizeOptions ascent_only;
    ascent_only.exact_2graph = false;
    for (int i = 0; i < 60; ++i) {
        int n = 3 + i % 10;
        auto g = random_uniform(n, 2, 0.5, rng);
        if (g.size() == 0)
            continue;
        auto ms = motzkin_straus(g);
        EXPECT_NEAR(ms.value, 0.5 * (1 - 1.0 / clique_number(g)), 1e-15);
        EXPECT_NEAR(ms.value, polynomial_form(g, ms.witness), 1e-12);
        EXPECT_NEAR(maximize(g, ascent_only).value, ms.value, 1e-8) << describe(g);
    }
}

TEST(Maximize, MonotoneUnderAddingEdges)
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        auto h = random_uniform(6, 3, 0.3, rng);
        if (h.size() == 0)
            continue;
        auto r = maximize(h);
        std::vector<VertexMask> more(h.masks().begin(), h.masks().end());
        for (VertexMask m = 1; m < 64; ++m)
            if (popcount(m) == 3 && std::find(more.begin(), more.end(), m) == more.end()) {
                more.push_back(m);
                break;
            }
        auto bigger = Hypergraph::from_masks(6, SizeSet{3}, more);
        EXPECT_GE(polynomial_form(bigger, r.witness), r.value - 1e-15);
        EXPECT_GE(maximize(bigger).value, r.value - 1e-9);
    }
}

TEST(MinimalSupport, Examples)
{
    auto k5 = complete(3, 5, 3);
    auto r = minimal_support(k5, maximize(k5));
    EXPECT_EQ(r.support.size(), 5u);
    EXPECT_TRUE(r.support_covering);

    // K^3_4 on 1..4 and K^3_5 on 5..9
    std::vector<VertexMask> masks;
    for (VertexMask m = 1; m < (VertexMask{1} << 9); ++m)
        if (popcount(m) == 3 && ((m & 0b1111) == m || (m & 0b111110000) == m))
            masks.push_back(m);
    auto both = Hypergraph::from_masks(9, SizeSet{3}, masks);
    auto rb = minimal_support(both, maximize(both));
    EXPECT_EQ(rb.support, (std::vector<Vertex>{5, 6, 7, 8, 9}));
    EXPECT_NEAR(rb.value, 0.08, 1e-6);
    EXPECT_TRUE(rb.support_covering);

    auto p3 = Hypergraph::validate({{1, 2}, {2, 3}}, 3, {2});
    MaximizeOptions ascent_only;
    ascent_only.exact_2graph = false;
    auto rp = minimal_support(p3, maximize(p3, ascent_only));
    EXPECT_EQ(rp.support.size(), 2u);
    EXPECT_NEAR(rp.value, 0.25, 1e-9);
    EXPECT_TRUE(rp.support_covering);
}

TEST(VerifyBound, TightAndRejected)
{
    auto rep = verify_bound(complete(3, 5, 2), 6, FreenessMode::Cycle);
    EXPECT_TRUE(rep.holds);
    EXPECT_NEAR(rep.value, 0.08, 1e-6);
    EXPECT_NEAR(rep.margin, 0.0, 1e-6);
    EXPECT_FALSE(rep.note.empty());
    EXPECT_TRUE(verify_bound(complete(3, 5, 2), 6, FreenessMode::Path).holds);
    EXPECT_KIND(verify_bound(complete(3, 6), 6, FreenessMode::Cycle), PreconditionFailed);
    EXPECT_KIND(verify_bound(complete(2, 16), 15, FreenessMode::Cycle), PreconditionNotChecked);
}

TEST(Symmetrize, Examples)
{
    auto edge = Hypergraph::validate({{1, 2}}, 2, {2});
    std::vector<double> x{0.6, 0.4};
    EXPECT_NEAR(polynomial_form(edge, x), 0.24, 1e-15);
    auto y = symmetrize_step(x, 1, 2);
    EXPECT_EQ(y, (std::vector<double>{0.5, 0.5}));
    EXPECT_NEAR(polynomial_form(edge, y), 0.25, 1e-15);
    std::vector<double> same{0.5, 0.5};
    EXPECT_EQ(symmetrize_step(same, 1, 2), same);
    EXPECT_KIND(symmetrize_step(x, 0, 2), IndexOutOfRange);
    EXPECT_KIND(symmetrize_step(x, 1, 3), IndexOutOfRange);
}

TEST(Symmetrize, ConvergesToUniformOnComplete)
{
    std::mt19937_64 rng(12);
    auto h = complete(3, 5);
    auto x = random_point(5, rng);
    double last = polynomial_form(h, x);
    for (int round = 0; round < 200; ++round)
        for (Vertex s = 1; s <= 5; ++s)
            for (Vertex t = s + 1; t <= 5; ++t) {
                x = symmetrize_step(x, s, t);
                auto v = polynomial_form(h, x);
                EXPECT_GE(v, last - 1e-15);
                last = v;
            }
    EXPECT_NEAR(last, 0.08, 1e-12);
}
