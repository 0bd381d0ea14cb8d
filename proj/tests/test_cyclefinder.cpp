#include "helpers.hpp"

#include "bergecov/cyclefinder.hpp"
#include "bergecov/oracle.hpp"
#include "bergecov/random.hpp"

#include <algorithm>

using namespace bergecov;
using bergecov::testing::H;
using bergecov::testing::complete;

namespace {
    auto logged(const Hypergraph & h) -> std::vector<Rule>
    {
        std::vector<Rule> log;
        CycleFinderOptions o;
        o.log = &log;
        auto all = find_all_cycles(h, o);
        for (int s = 3; s <= h.order(); ++s) {
            EXPECT_EQ(all[s - 3].length(), s);
            EXPECT_TRUE(verify_cycle(h, all[s - 3]));
        }
        return log;
    }

    auto has(const std::vector<Rule> & log, Rule r) -> bool
    {
        return std::find(log.begin(), log.end(), r) != log.end();
    }

    struct StateCase
    {
        Hypergraph h;
        std::vector<Vertex> base;
        std::vector<EdgeIndex> edges;
        Vertex w;
        Rule expected;
    };

    auto state_cases() -> std::vector<StateCase>
    {
        return {
            {H(8, {{1, 7}, {5, 8}, {1, 3, 8}, {6, 7}, {1, 6, 8}, {3, 7}, {3, 6}, {2, 3, 8}, {1, 5}, {2, 6, 7}, {3, 4, 6},
                     {2, 5, 7}, {4, 7, 8}, {5, 6, 7}, {1, 2, 4}, {3, 4, 5}}),
                {7, 8, 2, 1, 6, 4, 5}, {12, 7, 14, 4, 10, 15, 11}, 3, Rule::TerminalN8},
            {H(7, {{6, 7}, {5, 6}, {1, 4}, {1, 5, 7}, {1, 2, 6}, {2, 5}, {2, 3, 7}, {1, 3, 5}, {2, 4}, {3, 4, 6}, {2, 4, 5},
                     {4, 5, 7}, {3, 5, 7}}),
                {1, 4, 3, 7, 5, 6}, {2, 9, 6, 3, 1, 4}, 2, Rule::TerminalN7Insert},
            {H(7, {{3, 4, 7}, {3, 5, 6}, {1, 3, 5}, {1, 2, 7}, {1, 2, 3}, {2, 5, 6}, {5, 6, 7}, {1, 4, 6}, {2, 4, 5}}),
                {7, 3, 1, 5, 2, 6}, {0, 4, 2, 8, 5, 6}, 4, Rule::TerminalN7Recolor},
            {H(6, {{4, 5, 6}, {3, 4, 5}, {1, 2, 4}, {1, 3, 6}, {2, 5}, {1, 5, 6}, {2, 3}, {2, 3, 6}, {2, 4, 5}, {1, 2, 6}}),
                {2, 4, 3, 1, 6}, {2, 1, 3, 5, 7}, 5, Rule::TerminalN6Split},
            {H(6, {{4, 6}, {2, 4, 5}, {1, 2, 3}, {3, 5, 6}, {2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5}}),
                {2, 3, 6, 4, 5}, {2, 3, 0, 7, 1}, 1, Rule::TerminalN6Nested},
            {H(6, {{1, 2, 6}, {3, 4, 6}, {2, 3, 4}, {1, 2, 3}, {1, 3, 4}, {2, 3, 5}, {1, 4, 5}, {2, 5, 6}}),
                {3, 1, 6, 4, 5}, {3, 0, 1, 6, 5}, 2, Rule::TerminalN6Run},
            {H(8, {{4, 6, 8}, {3, 4, 7}, {2, 3, 4}, {2, 8}, {1, 5, 8}, {3, 5, 7}, {1, 4, 7}, {2, 7}, {1, 7, 8}, {3, 6},
                     {4, 5, 6}, {6, 7}, {1, 2, 6}, {1, 3, 8}, {2, 4, 7}, {2, 4, 5}}),
                {6, 8, 1, 4, 5, 2, 7}, {0, 4, 6, 10, 15, 7, 11}, 3, Rule::BlueRunRecolor},
            {H(6, {{1, 5, 6}, {3, 5, 6}, {1, 4, 5}, {1, 3, 5}, {2, 4, 6}, {1, 2, 3}, {1, 3, 4}, {2, 5, 6}}),
                {5, 4, 2, 6, 1}, {2, 4, 7, 0, 3}, 3, Rule::BlueRunInsert},
        };
    }
}

TEST(RedBlue, StateColors)
{
    auto h = H(6, {{1, 2, 6}, {2, 3}, {3, 4, 6}, {2, 4, 5}, {1, 3, 5}, {5, 6}, {1, 4}});
    auto st = RedBlueState::make(h, BergeCycle({1, 2, 3, 4, 5}, {0, 1, 2, 3, 4}), 6);
    EXPECT_EQ(st.color_string(), "RBRBB");
    EXPECT_EQ(st.red_count(), 2);
    EXPECT_NO_THROW(st.check(h));
    EXPECT_KIND(RedBlueState::make(h, BergeCycle({1, 2, 3}, {0, 1, 4}), 6), InvalidCertificate);
    EXPECT_KIND(RedBlueState::make(h, BergeCycle({1, 2, 3, 4, 5}, {0, 1, 2, 3, 4}), 5), InvalidCertificate);
}

TEST(RedBlue, SplitExampleCompletes)
{
    auto h = H(6, {{1, 2, 6}, {2, 3}, {3, 4, 6}, {2, 4, 5}, {1, 3, 5}, {5, 6}, {1, 4}});
    auto st = RedBlueState::make(h, BergeCycle({1, 2, 3, 4, 5}, {0, 1, 2, 3, 4}), 6);
    auto step = detail::augment_step(h, st);
    EXPECT_EQ(step.rule, Rule::TerminalN6Split);
    ASSERT_TRUE(step.hamiltonian);
    EXPECT_EQ(step.hamiltonian->length(), 6);
    EXPECT_TRUE(verify_cycle(h, *step.hamiltonian));
}

TEST(RedBlue, EveryStepRule)
{
    for (const auto & c : state_cases()) {
        auto st = RedBlueState::make(c.h, BergeCycle(c.base, c.edges), c.w);
        auto step = detail::augment_step(c.h, st);
        EXPECT_EQ(step.rule, c.expected) << to_string(c.expected) << " " << describe(c.h);
        if (step.hamiltonian) {
            EXPECT_EQ(step.hamiltonian->length(), c.h.order());
            EXPECT_TRUE(verify_cycle(c.h, *step.hamiltonian));
        }
        else {
            ASSERT_TRUE(step.next);
            EXPECT_GT(step.next->red_count(), st.red_count());
            EXPECT_NO_THROW(step.next->check(c.h));
        }
        auto full = detail::complete_from_state(c.h, st, nullptr);
        EXPECT_EQ(full.length(), c.h.order());
        EXPECT_TRUE(verify_cycle(c.h, full));
    }
}

TEST(RedBlue, TerminalPatterns)
{
    const auto & p = detail::terminal_patterns();
    EXPECT_EQ(p, (std::vector<std::string>{"RBBRBBRBB", "RBBRBBR", "RBBRBB", "RBRBB", "RRRBB"}));
    for (const auto & s : p)
        EXPECT_NO_THROW(detail::check_terminal_consequences(s));
    EXPECT_KIND(detail::check_terminal_consequences("RBBBRB"), InternalInvariantViolation);
    EXPECT_KIND(detail::check_terminal_consequences("BBRBB"), InternalInvariantViolation);
}

TEST(CycleFinder, RulesFromWholeRuns)
{
    struct Case
    {
        Hypergraph h;
        Rule rule;
    };
    std::vector<Case> cases{
        {H(6, {{1, 2}, {1, 3, 4}, {2, 3, 4}, {1, 5, 6}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}}), Rule::ClosedPath},
        {H(6, {{1, 3}, {1, 4}, {2, 3, 4}, {1, 2, 5}, {1, 2, 6}, {3, 5, 6}, {4, 5, 6}}), Rule::PathToNearCycle},
        {H(6, {{1, 3}, {1, 4}, {2, 3, 4}, {1, 2, 5}, {1, 2, 6}, {3, 5, 6}, {4, 5, 6}}), Rule::FreeBridge},
        {H(6, {{1, 3}, {1, 4}, {2, 3, 4}, {1, 2, 5}, {1, 2, 6}, {3, 5, 6}, {4, 5, 6}}), Rule::Shortcut},
        {H(6, {{1, 3}, {1, 4}, {2, 3, 4}, {1, 2, 5}, {1, 6}, {1, 2, 6}, {3, 5, 6}, {4, 5, 6}}), Rule::BlueRunInsert},
        {H(6, {{1, 2, 3}, {2, 3, 4}, {1, 4, 5}, {1, 3, 6}, {1, 4, 6}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}}),
            Rule::TerminalN6Split},
        {H(7, {{2, 5, 7}, {4, 5, 6}, {1, 4, 6}, {1, 3, 5}, {1, 6, 7}, {2, 4, 7}, {2, 3, 6}, {1, 2, 7}, {3, 4, 7}}),
            Rule::DoubleChord},
        {H(7, {{2, 4, 6}, {3, 6, 7}, {1, 2, 4}, {1, 5, 6}, {1, 3, 4}, {1, 4, 7}, {2, 3, 5}, {2, 6, 7}, {4, 5, 7}}),
            Rule::TerminalN6Run},
        {complete(2, 6), Rule::TriangleFromPairs},
        {H(6, {{1, 3}, {1, 4}, {2, 3, 4}, {1, 2, 5}, {1, 2, 6}, {3, 5, 6}, {4, 5, 6}}), Rule::TriangleFromTriple},
    };
    for (const auto & c : cases) {
        auto log = logged(c.h);
        EXPECT_TRUE(has(log, c.rule)) << to_string(c.rule) << " " << describe(c.h);
        EXPECT_FALSE(has(log, Rule::OracleRescue));
    }
}

TEST(CycleFinder, Preconditions)
{
    auto small = H(5, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}}, {3});
    EXPECT_KIND(find_hamiltonian_cycle(small), TooFewVertices);
    EXPECT_KIND(find_all_cycles(small), TooFewVertices);
    EXPECT_KIND(find_hamiltonian_cycle(H(6, {{1, 2, 3}, {4, 5, 6}})), NotCovering);
    EXPECT_KIND(find_hamiltonian_cycle(complete(4, 6)), EdgeSizeOutOfRange);
    EXPECT_KIND(find_cycle_of_length(complete(3, 6), 2), LengthOutOfRange);
    EXPECT_KIND(find_cycle_of_length(complete(3, 6), 7), LengthOutOfRange);
}

TEST(CycleFinder, Triangle)
{
    auto c = find_triangle(complete(2, 4));
    EXPECT_EQ(c.base(), (std::vector<Vertex>{1, 2, 3}));
    auto h = H(4, {{1, 2, 3}, {1, 4}, {2, 4}, {3, 4}});
    auto t = find_triangle(h);
    EXPECT_TRUE(verify_cycle(h, t));
    EXPECT_EQ(t.length(), 3);
    auto k34 = complete(3, 4);
    EXPECT_TRUE(verify_cycle(k34, find_triangle(k34)));
}

TEST(CycleFinder, Shorten)
{
    auto h = complete(3, 6);
    auto c6 = find_hamiltonian_cycle(h);
    std::vector<Rule> log;
    auto c5 = detail::shorten_cycle(h, c6, &log);
    EXPECT_EQ(c5.length(), 5);
    EXPECT_TRUE(verify_cycle(h, c5));
    auto c4 = detail::shorten_cycle(h, c5, &log);
    EXPECT_EQ(c4.length(), 4);
    EXPECT_TRUE(verify_cycle(h, c4));
    EXPECT_FALSE(log.empty());
}

TEST(CycleFinder, CompleteGraphs)
{
    for (int n = 6; n <= 12; ++n) {
        auto h = complete(2, n);
        for (int s = 3; s <= n; ++s) {
            auto c = find_cycle_of_length(h, s);
            EXPECT_EQ(c.length(), s);
            EXPECT_TRUE(verify_cycle(h, c));
        }
    }
}

TEST(CycleFinder, RandomInstances)
{
    for (int i = 0; i < 600; ++i) {
        auto rng = instance_rng(77, i);
        int n = 6 + i % 9;
        auto h = random_covering_rank3(n, rng, i % 4, (i % 5) * 0.2);
        auto log = logged(h);
        EXPECT_FALSE(has(log, Rule::OracleRescue)) << describe(h);
    }
}

TEST(CycleFinder, AgreesWithOracleOnSmall)
{
    for (int i = 0; i < 100; ++i) {
        auto rng = instance_rng(78, i);
        auto h = random_covering_rank3(6 + i % 3, rng, 0, 0.5);
        for (int s = 3; s <= h.order(); ++s)
            EXPECT_TRUE(exists_cycle(h, s));
    }
}
