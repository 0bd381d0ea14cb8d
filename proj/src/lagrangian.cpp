#include "bergecov/lagrangian.hpp"

#include "bergecov/error.hpp"
#include "bergecov/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace bergecov {

auto to_string(LagrangianMethod m) -> std::string
{
    switch (m) {
        case LagrangianMethod::Ascent: return "ascent";
        case LagrangianMethod::ClosedForm: return "closed-form";
        case LagrangianMethod::ExactSmall: return "exact-small";
    }
    return "unknown";
}

namespace {
    void check_input(const Hypergraph & h, std::span<const double> x)
    {
        if (static_cast<int>(x.size()) != h.order())
            fail(ErrorKind::DimensionMismatch,
                "weighting has " + std::to_string(x.size()) + " entries for " + std::to_string(h.order()) + " vertices");
        if (! h.is_uniform())
            fail(ErrorKind::NotUniform, "the Lagrangian is defined for uniform hypergraphs");
    }

    auto support_of(std::span<const double> x) -> std::vector<Vertex>
    {
        std::vector<Vertex> s;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] > support_threshold)
                s.push_back(static_cast<Vertex>(i) + 1);
        return s;
    }

    auto uniformity(const Hypergraph & h) -> int
    {
        if (! h.is_uniform())
            fail(ErrorKind::NotUniform, "the Lagrangian is defined for uniform hypergraphs");
        return h.size() ? h.edge_size(0) : h.sizes().min();
    }

    auto finish(const Hypergraph & h, Weighting x, LagrangianMethod method) -> LagrangianResult
    {
        LagrangianResult r;
        r.value = polynomial_form(h, x);
        r.support = support_of(x);
        r.witness = std::move(x);
        r.method = method;
        return r;
    }

    auto covering_on(const Hypergraph & h, VertexMask on) -> bool
    {
        VertexMask covered_pairs_of[max_order] = {};
        for (auto m : h.masks())
            if ((m & ~on) == 0)
                for (auto bits = m; bits; bits &= bits - 1)
                    covered_pairs_of[std::countr_zero(bits)] |= m;
        for (auto bits = on; bits; bits &= bits - 1) {
            auto v = std::countr_zero(bits);
            if ((covered_pairs_of[v] | (VertexMask{1} << v)) != on)
                return false;
        }
        return true;
    }

    auto project_on(std::span<const double> y, VertexMask allowed) -> Weighting
    {
        std::vector<double> sub;
        for (std::size_t i = 0; i < y.size(); ++i)
            if ((allowed >> i) & 1)
                sub.push_back(y[i]);
        auto p = project_to_simplex(sub);
        Weighting x(y.size(), 0.0);
        std::size_t k = 0;
        for (std::size_t i = 0; i < y.size(); ++i)
            if ((allowed >> i) & 1)
                x[i] = p[k++];
        return x;
    }
}

auto polynomial_form(const Hypergraph & h, std::span<const double> x) -> double
{
    check_input(h, x);
    double total = 0;
    for (auto m : h.masks()) {
        double p = 1;
        for (auto bits = m; bits; bits &= bits - 1)
            p *= x[std::countr_zero(bits)];
        total += p;
    }
    return total;
}

auto gradient(const Hypergraph & h, std::span<const double> x) -> std::vector<double>
{
    check_input(h, x);
    std::vector<double> g(x.size(), 0.0);
    for (auto m : h.masks())
        for (auto bits = m; bits; bits &= bits - 1) {
            auto i = std::countr_zero(bits);
            double p = 1;
            for (auto rest = m & ~(VertexMask{1} << i); rest; rest &= rest - 1)
                p *= x[std::countr_zero(rest)];
            g[i] += p;
        }
    return g;
}

auto project_to_simplex(std::span<const double> y) -> Weighting
{
    if (y.empty())
        return {};
    std::vector<double> u(y.begin(), y.end());
    std::sort(u.begin(), u.end(), std::greater<>());
    double running = 0, theta = 0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        running += u[j];
        auto candidate = (running - 1.0) / static_cast<double>(j + 1);
        if (u[j] - candidate > 0)
            theta = candidate;
    }
    Weighting x(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        x[i] = std::max(0.0, y[i] - theta);
    return x;
}

auto lambda_complete_exact(int k, int t) -> Fraction
{
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    if (k < 2 || t < k)
        fail(ErrorKind::InvalidParameters, "lambda_complete needs t >= k >= 2");
    cpp_int binom = 1;
    for (int i = 0; i < k; ++i)
        binom = binom * (t - i) / (i + 1);
    cpp_int power = boost::multiprecision::pow(cpp_int(t), k);
    cpp_rational r(binom, power);
    return {boost::multiprecision::numerator(r).str(), boost::multiprecision::denominator(r).str()};
}

auto lambda_complete(int k, int t) -> double
{
    using boost::multiprecision::cpp_rational;
    auto f = lambda_complete_exact(k, t);
    cpp_rational r(boost::multiprecision::cpp_int(f.numerator), boost::multiprecision::cpp_int(f.denominator));
    return static_cast<double>(r);
}

auto ascend(const Hypergraph & h, Weighting start, VertexMask allowed, const MaximizeOptions & options)
    -> LagrangianResult
{
    const int k = uniformity(h);
    const int n = h.order();
    if (static_cast<int>(start.size()) != n)
        fail(ErrorKind::DimensionMismatch, "start weighting has the wrong dimension");
    allowed &= h.all_vertices();
    if (! allowed)
        fail(ErrorKind::InvalidParameters, "ascent needs at least one free coordinate");

    auto x = project_on(start, allowed);
    auto value = polynomial_form(h, x);
    double step = 1.0 / (static_cast<double>(k) * n);
    for (int it = 0; it < options.max_iterations && step > 1e-15; ++it) {
        auto g = gradient(h, x);
        std::vector<double> y(n);
        for (int i = 0; i < n; ++i)
            y[i] = x[i] + step * g[i];
        auto candidate = project_on(y, allowed);
        auto cv = polynomial_form(h, candidate);
        if (cv > value) {
            auto gain = cv - value;
            x = std::move(candidate);
            value = cv;
            if (gain < options.tol * 1e-6)
                break;
        }
        else
            step *= 0.5;
    }
    return finish(h, std::move(x), LagrangianMethod::Ascent);
}

auto clique_number(const Hypergraph & g) -> int
{
    if (g.size() && (g.rank() != 2 || ! g.is_uniform()))
        fail(ErrorKind::NotUniform, "clique number needs a 2-graph");
    const int n = g.order();
    if (n > 20)
        fail(ErrorKind::CapExceeded, "clique number by exhaustive search is limited to n <= 20");
    if (n == 0)
        return 0;
    std::vector<VertexMask> adj(n, 0);
    for (auto m : g.masks()) {
        auto a = std::countr_zero(m), b = std::countr_zero(m & (m - 1));
        adj[a] |= VertexMask{1} << b;
        adj[b] |= VertexMask{1} << a;
    }
    int best = 1;
    auto grow = [&](auto & self, VertexMask candidates, int size) -> void {
        best = std::max(best, size);
        while (candidates) {
            if (size + std::popcount(candidates) <= best)
                return;
            auto v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            self(self, candidates & adj[v], size + 1);
        }
    };
    grow(grow, (n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1), 0);
    return best;
}

auto motzkin_straus(const Hypergraph & g) -> LagrangianResult
{
    const int n = g.order();
    const int omega = clique_number(g);
    // Recover one maximum clique for the witness.
    std::vector<VertexMask> adj(n, 0);
    for (auto m : g.masks()) {
        auto a = std::countr_zero(m), b = std::countr_zero(m & (m - 1));
        adj[a] |= VertexMask{1} << b;
        adj[b] |= VertexMask{1} << a;
    }
    VertexMask clique = 0;
    auto find = [&](auto & self, VertexMask chosen, VertexMask candidates, int size) -> bool {
        if (size == omega) {
            clique = chosen;
            return true;
        }
        while (candidates) {
            if (size + std::popcount(candidates) < omega)
                return false;
            auto v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (self(self, chosen | VertexMask{1} << v, candidates & adj[v], size + 1))
                return true;
        }
        return false;
    };
    find(find, 0, (VertexMask{1} << n) - 1, 0);
    Weighting x(n, 0.0);
    for (auto bits = clique; bits; bits &= bits - 1)
        x[std::countr_zero(bits)] = 1.0 / omega;
    auto r = finish(g, std::move(x), LagrangianMethod::ExactSmall);
    r.value = 0.5 * (1.0 - 1.0 / omega);
    return r;
}

auto maximize(const Hypergraph & h, const MaximizeOptions & options) -> LagrangianResult
{
    const int k = uniformity(h);
    const int n = h.order();
    if (n == 0)
        return LagrangianResult{};
    if (h.size() == 0) {
        auto r = finish(h, Weighting(n, 1.0 / n), LagrangianMethod::ClosedForm);
        return r;
    }

    const int restarts = std::max(1, options.restarts);
    std::vector<LagrangianResult> results(restarts);
    auto run = [&](int r) {
        Weighting start(n, 1.0 / n);
        if (r > 0) {
            std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(r));
            std::gamma_distribution<double> gamma(1.0, 1.0);
            double total = 0;
            for (auto & v : start)
                total += v = gamma(rng);
            for (auto & v : start)
                v /= total;
        }
        results[r] = ascend(h, std::move(start), h.all_vertices(), options);
    };
    if (options.jobs > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.jobs)
        for (int r = 0; r < restarts; ++r)
            run(r);
    }
    else
        for (int r = 0; r < restarts; ++r)
            run(r);

    std::size_t best = 0;
    for (std::size_t r = 1; r < results.size(); ++r)
        if (results[r].value > results[best].value)
            best = r;
    auto out = std::move(results[best]);

    if (k == 2 && options.exact_2graph && n <= 20) {
        auto exact = motzkin_straus(h);
        if (exact.value >= out.value)
            out = std::move(exact);
    }
    return out;
}

auto minimal_support(const Hypergraph & h, const LagrangianResult & result, const MaximizeOptions & options)
    -> LagrangianResult
{
    auto current = result;
    const double keep_within = std::max(options.tol, 1e-9) * 10;
    bool changed = true;
    while (changed && current.support.size() > 1) {
        changed = false;
        const auto on = mask_of(current.support);
        for (auto v : current.support) {
            auto start = current.witness;
            start[v - 1] = 0;
            auto r = ascend(h, std::move(start), on & ~vertex_bit(v), options);
            if (r.value >= current.value - keep_within) {
                r.method = current.method;
                current = std::move(r);
                changed = true;
                break;
            }
        }
    }
    current.support_covering = covering_on(h, mask_of(current.support));
    return current;
}

auto verify_bound(const Hypergraph & h, int t, FreenessMode mode, const MaximizeOptions & options) -> BoundReport
{
    const int k = uniformity(h);
    if (t - 1 < k)
        fail(ErrorKind::InvalidParameters, "the bound needs t-1 >= k");
    const int n = h.order();
    if (mode == FreenessMode::Cycle && t < 3)
        fail(ErrorKind::LengthOutOfRange, "cycle length must be at least 3");
    if (t <= n) {
        bool found = false;
        try {
            found = mode == FreenessMode::Cycle ? exists_cycle(h, t).has_value() : exists_path(h, t).has_value();
        }
        catch (const Error & e) {
            if (e.kind() != ErrorKind::CapExceeded)
                throw;
            fail(ErrorKind::PreconditionNotChecked, std::string("freeness could not be verified: ") + e.what());
        }
        if (found)
            fail(ErrorKind::PreconditionFailed,
                std::string("hypergraph contains a Berge-") + (mode == FreenessMode::Cycle ? "C" : "P") + std::to_string(t));
    }

    BoundReport rep;
    rep.k = k;
    rep.t = t;
    rep.mode = mode;
    rep.result = maximize(h, options);
    rep.value = rep.result.value;
    rep.bound = lambda_complete(k, t - 1);
    rep.margin = rep.bound - rep.value;
    rep.holds = rep.margin >= -std::max(options.tol, 1e-9);
    rep.note = "value is a lower bound on the Lagrangian found by ascent: a violation would be conclusive, "
               "agreement is evidence only";
    return rep;
}

auto symmetrize_step(std::span<const double> x, Vertex s, Vertex t) -> Weighting
{
    const int n = static_cast<int>(x.size());
    if (s < 1 || s > n || t < 1 || t > n)
        fail(ErrorKind::IndexOutOfRange, "symmetrization index outside 1.." + std::to_string(n));
    Weighting y(x.begin(), x.end());
    y[s - 1] = y[t - 1] = 0.5 * (x[s - 1] + x[t - 1]);
    return y;
}

}
