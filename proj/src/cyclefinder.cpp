#include "bergecov/cyclefinder.hpp"

#include "bergecov/error.hpp"
#include "bergecov/oracle.hpp"
#include "bergecov/pathfinder.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <variant>

namespace bergecov {

auto to_string(Rule rule) -> std::string_view
{
    switch (rule) {
        case Rule::ClosedPath: return "closed-path";
        case Rule::PathToNearCycle: return "path-to-near-cycle";
        case Rule::FreeBridge: return "free-bridge";
        case Rule::BlueRunInsert: return "blue-run-insert";
        case Rule::BlueRunRecolor: return "blue-run-recolor";
        case Rule::TerminalN10: return "terminal-n10";
        case Rule::TerminalN8: return "terminal-n8";
        case Rule::TerminalN7Insert: return "terminal-n7-insert";
        case Rule::TerminalN7Recolor: return "terminal-n7-recolor";
        case Rule::TerminalN6Split: return "terminal-n6-split";
        case Rule::TerminalN6Nested: return "terminal-n6-nested";
        case Rule::TerminalN6Run: return "terminal-n6-run";
        case Rule::Shortcut: return "shortcut";
        case Rule::DoubleChord: return "double-chord";
        case Rule::SixEdgeReconfigure: return "six-edge-reconfigure";
        case Rule::TriangleFromPairs: return "triangle-from-pairs";
        case Rule::TriangleFromTriple: return "triangle-from-triple";
        case Rule::OracleRescue: return "oracle-rescue";
    }
    return "unknown";
}

auto RedBlueState::make(const Hypergraph & h, BergeCycle cycle, Vertex w) -> RedBlueState
{
    if (cycle.length() != h.order() - 1)
        fail(ErrorKind::InvalidCertificate, "red-blue state needs a cycle of length n-1");
    if (w < 1 || w > h.order() || std::find(cycle.base().begin(), cycle.base().end(), w) != cycle.base().end())
        fail(ErrorKind::InvalidCertificate, "leftover vertex must be the one vertex off the cycle");
    if (! verify_cycle(h, cycle))
        fail(ErrorKind::InvalidCertificate, "red-blue state cycle does not verify");

    RedBlueState s(std::move(cycle), w);
    for (auto e : s._cycle.edges()) {
        auto red = h.contains(e, w);
        s._colors.push_back(red ? Color::Red : Color::Blue);
        s._red_count += red;
    }
    return s;
}

auto RedBlueState::color_string() const -> std::string
{
    std::string s;
    for (auto c : _colors)
        s += c == Color::Red ? 'R' : 'B';
    return s;
}

void RedBlueState::check(const Hypergraph & h) const
{
    if (! verify_cycle(h, _cycle))
        invariant_violation("red-blue state cycle no longer verifies");
    if (std::find(_cycle.base().begin(), _cycle.base().end(), _w) != _cycle.base().end())
        invariant_violation("leftover vertex lies on the cycle");
    int reds = 0;
    for (int i = 0; i < _cycle.length(); ++i) {
        auto red = h.contains(_cycle.edge(i), _w);
        if (red != (_colors[i] == Color::Red))
            invariant_violation("stale color at cycle pair " + std::to_string(i));
        reds += red;
    }
    if (reds != _red_count)
        invariant_violation("red count out of sync");
}

namespace {
    void note(std::vector<Rule> * log, Rule r)
    {
        if (log)
            log->push_back(r);
    }

    auto cycle_text(const BergeCycle & c) -> std::string
    {
        std::string s = "base=[";
        for (auto v : c.base())
            s += std::to_string(v) + " ";
        s += "] edges=[";
        for (auto e : c.edges())
            s += std::to_string(e) + " ";
        return s + "]";
    }

    /// Accumulates (vertex, edge to the next vertex) and closes up.
    class CycleBuilder
    {
    public:
        auto add(Vertex v, EdgeIndex to_next) -> CycleBuilder &
        {
            _base.push_back(v);
            _edges.push_back(to_next);
            return *this;
        }

        auto finish(const Hypergraph & h, std::string_view what) -> BergeCycle
        {
            BergeCycle c(std::move(_base), std::move(_edges));
            if (! verify_cycle(h, c))
                invariant_violation(std::string(what) + " produced an invalid cycle " + cycle_text(c) + " in " + describe(h));
            return c;
        }

    private:
        std::vector<Vertex> _base;
        std::vector<EdgeIndex> _edges;
    };

    auto used_edges(const Hypergraph & h, const BergeCycle & c) -> std::vector<char>
    {
        std::vector<char> used(h.size(), 0);
        for (auto e : c.edges())
            used[e] = 1;
        return used;
    }

    /// A cycle seen from a chosen starting position and direction, indexed
    /// from 1 as v1..vm with pair i = (v_i, v_{i+1}).
    class Frame
    {
    public:
        Frame(const Hypergraph & h, const BergeCycle & c, Vertex w, int offset, bool reflected) :
            _h(h), _w(w), _m(c.length()), _used(used_edges(h, c))
        {
            for (int k = 0; k < _m; ++k) {
                if (reflected) {
                    _v.push_back(c.vertex(offset - k));
                    _e.push_back(c.edge(offset - k - 1));
                }
                else {
                    _v.push_back(c.vertex(offset + k));
                    _e.push_back(c.edge(offset + k));
                }
            }
        }

        auto V(int i) const -> Vertex { return _v[wrap(i - 1)]; }
        auto E(int i) const -> EdgeIndex { return _e[wrap(i - 1)]; }
        auto w() const -> Vertex { return _w; }
        auto m() const -> int { return _m; }
        auto h() const -> const Hypergraph & { return _h; }
        auto used(EdgeIndex e) const -> bool { return _used[e]; }
        auto red(int i) const -> bool { return _h.contains(E(i), _w); }

        auto colors() const -> std::string
        {
            std::string s;
            for (int i = 1; i <= _m; ++i)
                s += red(i) ? 'R' : 'B';
            return s;
        }

        auto containers(Vertex a, Vertex b) const -> std::vector<EdgeIndex> { return _h.containers(pair_mask(a, b)); }

        auto first_free(Vertex a, Vertex b) const -> EdgeIndex
        {
            for (auto e : containers(a, b))
                if (! _used[e])
                    return e;
            return -1;
        }

        auto is_edge(EdgeIndex e, std::initializer_list<Vertex> vs) const -> bool
        {
            VertexMask m = 0;
            for (auto v : vs)
                m |= vertex_bit(v);
            return _h.mask(e) == m;
        }

        /// Containers of {w, a}; every one must be free because both cycle
        /// pairs at a are blue.
        auto free_through_w(Vertex a) const -> std::vector<EdgeIndex>
        {
            auto cs = containers(_w, a);
            for (auto e : cs)
                if (_used[e])
                    invariant_violation("edge through w and a blue-flanked vertex is already used");
            return cs;
        }

    private:
        auto wrap(int i) const -> int { return ((i % _m) + _m) % _m; }

        const Hypergraph & _h;
        Vertex _w;
        int _m;
        std::vector<char> _used;
        std::vector<Vertex> _v;
        std::vector<EdgeIndex> _e;
    };

    auto distinct_pair(const std::vector<EdgeIndex> & a, const std::vector<EdgeIndex> & b)
        -> std::optional<std::pair<EdgeIndex, EdgeIndex>>
    {
        for (auto x : a)
            for (auto y : b)
                if (x != y)
                    return std::pair{x, y};
        return std::nullopt;
    }

    using detail::StepResult;

    auto hamiltonian(Rule rule, BergeCycle c) -> StepResult
    {
        return StepResult{rule, std::move(c), std::nullopt};
    }

    auto improved(Rule rule, const Hypergraph & h, BergeCycle c, Vertex w) -> StepResult
    {
        return StepResult{rule, std::nullopt, RedBlueState::make(h, std::move(c), w)};
    }

    // Two disjoint red pairs (v_i v_{i+1}), (v_j v_{j+1}) with a free edge on
    // {v_i, v_j}: v_{i+1} w v_{j+1} ... v_i v_j v_{j-1} ... v_{i+2}. The
    // mirrored frame covers the bridge {v_{i+1}, v_{j+1}}.
    auto try_free_bridge(const Frame & f) -> std::optional<StepResult>
    {
        const int m = f.m();
        for (int i = 1; i <= m; ++i) {
            if (! f.red(i))
                continue;
            for (int j = 1; j <= m; ++j) {
                if (j == i || ! f.red(j))
                    continue;
                auto d = ((j - i) % m + m) % m;
                if (d == 1 || d == m - 1)
                    continue;
                auto bridge = f.first_free(f.V(i), f.V(j));
                if (bridge < 0)
                    continue;
                CycleBuilder b;
                b.add(f.V(i + 1), f.E(i)).add(f.w(), f.E(j));
                for (int p = j + 1; p != i + m * ((j + 1) > i ? 1 : 0); ++p)
                    b.add(f.V(p), f.E(p));
                b.add(f.V(i), bridge);
                for (int p = j; p > i + 1; --p)
                    b.add(f.V(p), f.E(p - 1));
                return hamiltonian(Rule::FreeBridge, b.finish(f.h(), "free bridge"));
            }
        }
        return std::nullopt;
    }

    auto try_blue_run(const Frame & f) -> std::optional<StepResult>
    {
        const int m = f.m();
        for (int i = 1; i <= m; ++i) {
            if (f.red(i) || f.red(i + 1) || f.red(i + 2))
                continue;
            auto a = f.V(i + 1), b = f.V(i + 2);
            auto through_a = f.free_through_w(a);
            auto through_b = f.free_through_w(b);
            if (auto pick = distinct_pair(through_a, through_b)) {
                CycleBuilder cb;
                for (int p = i + 2; p < i + 1 + m; ++p)
                    cb.add(f.V(p), f.E(p));
                cb.add(a, pick->first).add(f.w(), pick->second);
                return hamiltonian(Rule::BlueRunInsert, cb.finish(f.h(), "blue run insertion"));
            }
            // Only {w, a, b} passes through w at a and at b, and it is free:
            // embedding (a, b) in it turns that pair red.
            auto shared = through_a.front();
            if (! f.is_edge(shared, {f.w(), a, b}))
                invariant_violation("blue run without two distinct free edges through w");
            CycleBuilder cb;
            for (int p = 1; p <= m; ++p)
                cb.add(f.V(p), p == i + 1 || p == i + 1 - m ? shared : f.E(p));
            return improved(Rule::BlueRunRecolor, f.h(), cb.finish(f.h(), "blue run recolor"), f.w());
        }
        return std::nullopt;
    }

    // Terminal surgeries. Each returns nothing when the current orientation
    // does not match the configuration it handles; another orientation of
    // the same coloring then gets its turn.

    auto terminal_n10(const Frame & f) -> std::optional<StepResult>
    {
        auto pick = distinct_pair(f.free_through_w(f.V(3)), f.free_through_w(f.V(9)));
        if (! pick)
            return std::nullopt;
        auto bridge = f.containers(f.V(2), f.V(8));
        for (auto e : bridge)
            if (! f.used(e))
                invariant_violation("free bridge {v2, v8} survived the bridge rule");
        auto h = bridge.front();
        if (h != f.E(2) && h != f.E(8))
            invariant_violation("bridge {v2, v8} is embedded by neither v2v3 nor v8v9");
        CycleBuilder b;
        b.add(f.V(2), h);
        for (int p = 8; p > 3; --p)
            b.add(f.V(p), f.E(p - 1));
        b.add(f.V(3), pick->first).add(f.w(), pick->second).add(f.V(9), f.E(9)).add(f.V(1), f.E(1));
        return hamiltonian(Rule::TerminalN10, b.finish(f.h(), "n=10 surgery"));
    }

    auto terminal_n8(const Frame & f) -> std::optional<StepResult>
    {
        auto bridge = f.containers(f.V(1), f.V(4));
        for (auto e : bridge)
            if (! f.used(e))
                invariant_violation("free bridge {v1, v4} survived the bridge rule");
        if (! f.is_edge(f.E(3), {f.V(1), f.V(3), f.V(4)}))
            return std::nullopt;
        auto through = f.free_through_w(f.V(3));
        CycleBuilder b;
        b.add(f.V(1), f.E(3)).add(f.V(4), f.E(4)).add(f.V(5), f.E(5)).add(f.V(6), f.E(6)).add(f.V(7), f.E(7));
        b.add(f.w(), through.front()).add(f.V(3), f.E(2)).add(f.V(2), f.E(1));
        return hamiltonian(Rule::TerminalN8, b.finish(f.h(), "n=8 surgery"));
    }

    auto terminal_n7(const Frame & f) -> std::optional<StepResult>
    {
        auto bridge = f.containers(f.V(1), f.V(4));
        for (auto e : bridge)
            if (! f.used(e))
                invariant_violation("free bridge {v1, v4} survived the bridge rule");
        if (! f.is_edge(f.E(3), {f.V(1), f.V(3), f.V(4)}))
            return std::nullopt;
        auto at3 = f.free_through_w(f.V(3));
        auto at6 = f.free_through_w(f.V(6));
        if (auto pick = distinct_pair(at3, at6)) {
            CycleBuilder b;
            b.add(f.V(1), f.E(3)).add(f.V(4), f.E(4)).add(f.V(5), f.E(5)).add(f.V(6), pick->second);
            b.add(f.w(), pick->first).add(f.V(3), f.E(2)).add(f.V(2), f.E(1));
            return hamiltonian(Rule::TerminalN7Insert, b.finish(f.h(), "n=7 insertion"));
        }
        // {v3, v6, w} is the only edge through w at v3 or v6, and it is free:
        // v1 v2 v3 v6 v5 v4 has three red pairs.
        auto shared = at3.front();
        if (! f.is_edge(shared, {f.V(3), f.V(6), f.w()}))
            invariant_violation("n=7 pattern without a usable edge through w");
        CycleBuilder b;
        b.add(f.V(1), f.E(1)).add(f.V(2), f.E(2)).add(f.V(3), shared).add(f.V(6), f.E(5)).add(f.V(5), f.E(4)).add(f.V(4), f.E(3));
        return improved(Rule::TerminalN7Recolor, f.h(), b.finish(f.h(), "n=7 recolor"), f.w());
    }

    // Shared by RBRBB (bridge edges {v1,v3,v5}, {v2,v4,v5}) and RRRBB, where
    // those two shapes are forced.
    auto n6_split(const Frame & f, Rule rule) -> std::optional<StepResult>
    {
        if (! f.is_edge(f.E(5), {f.V(1), f.V(3), f.V(5)}) || ! f.is_edge(f.E(4), {f.V(2), f.V(4), f.V(5)}))
            return std::nullopt;
        auto h0 = f.free_through_w(f.V(5)).front();
        auto h3 = f.first_free(f.V(1), f.V(4));
        if (h3 < 0)
            invariant_violation("no free edge on {v1, v4} in the n=6 configuration");
        CycleBuilder b;
        b.add(f.w(), h0).add(f.V(5), f.E(5)).add(f.V(1), h3).add(f.V(4), f.E(3)).add(f.V(3), f.E(2)).add(f.V(2), f.E(1));
        return hamiltonian(rule, b.finish(f.h(), "n=6 surgery"));
    }

    auto terminal_n6_two_segments(const Frame & f) -> std::optional<StepResult>
    {
        if (auto r = n6_split(f, Rule::TerminalN6Split))
            return r;
        if (! f.is_edge(f.E(2), {f.V(1), f.V(2), f.V(3)}) || ! f.is_edge(f.E(4), {f.V(2), f.V(4), f.V(5)}))
            return std::nullopt;
        auto h0 = f.free_through_w(f.V(5)).front();
        CycleBuilder b;
        b.add(f.w(), h0).add(f.V(5), f.E(5)).add(f.V(1), f.E(2)).add(f.V(3), f.E(3)).add(f.V(4), f.E(4)).add(f.V(2), f.E(1));
        return hamiltonian(Rule::TerminalN6Nested, b.finish(f.h(), "n=6 surgery"));
    }

    auto terminal_n6_one_segment(const Frame & f) -> std::optional<StepResult>
    {
        return n6_split(f, Rule::TerminalN6Run);
    }

    using TerminalBody = std::optional<StepResult> (*)(const Frame &);

    struct TerminalCase
    {
        std::string pattern;
        TerminalBody body;
    };

    auto terminal_cases() -> const std::vector<TerminalCase> &
    {
        static const std::vector<TerminalCase> cases = {
            {"RBBRBBRBB", terminal_n10},
            {"RBBRBBR", terminal_n8},
            {"RBBRBB", terminal_n7},
            {"RBRBB", terminal_n6_two_segments},
            {"RRRBB", terminal_n6_one_segment},
        };
        return cases;
    }

    auto terminal_step(const Hypergraph & h, const RedBlueState & state) -> StepResult
    {
        const auto colors = state.color_string();
        detail::check_terminal_consequences(colors);
        const int m = state.cycle().length();
        bool matched = false;
        for (const auto & tc : terminal_cases()) {
            if (static_cast<int>(tc.pattern.size()) != m)
                continue;
            for (int reflected = 0; reflected < 2; ++reflected)
                for (int offset = 0; offset < m; ++offset) {
                    Frame f(h, state.cycle(), state.leftover(), offset, reflected);
                    if (f.colors() != tc.pattern)
                        continue;
                    matched = true;
                    if (auto r = tc.body(f))
                        return std::move(*r);
                }
        }
        invariant_violation(std::string(matched ? "terminal coloring " : "unexpected terminal coloring ") + colors
                + (matched ? " admits no surgery" : "") + "; cycle " + cycle_text(state.cycle()) + " w="
                + std::to_string(state.leftover()) + " in " + describe(h));
    }

    auto near_cycle_from_path(const Hypergraph & h, const BergePath & p, std::vector<Rule> * log)
        -> std::variant<BergeCycle, RedBlueState>
    {
        const int n = static_cast<int>(p.base.size());
        const auto first = p.base.front(), last = p.base.back();
        std::vector<char> used(h.size(), 0);
        for (auto e : p.edges)
            used[e] = 1;
        auto closing = h.containers(pair_mask(first, last));
        for (auto e : closing)
            if (! used[e]) {
                note(log, Rule::ClosedPath);
                auto edges = p.edges;
                edges.push_back(e);
                return BergeCycle(p.base, std::move(edges));
            }

        note(log, Rule::PathToNearCycle);
        auto e = closing.front();
        if (e == p.edges.back() && h.mask(e) == (pair_mask(first, last) | vertex_bit(p.base[n - 2]))) {
            std::vector<Vertex> base(p.base.begin(), p.base.end() - 1);
            std::vector<EdgeIndex> edges(p.edges.begin(), p.edges.end() - 1);
            edges.push_back(e);
            return RedBlueState::make(h, BergeCycle(std::move(base), std::move(edges)), last);
        }
        if (e == p.edges.front() && h.mask(e) == (pair_mask(first, last) | vertex_bit(p.base[1]))) {
            std::vector<Vertex> base(p.base.begin() + 1, p.base.end());
            std::vector<EdgeIndex> edges(p.edges.begin() + 1, p.edges.end());
            edges.push_back(e);
            return RedBlueState::make(h, BergeCycle(std::move(base), std::move(edges)), first);
        }
        invariant_violation("edge on the path's end pair is used but embeds neither end pair");
    }

    auto hamiltonian_cycle_strict(const Hypergraph & h, std::vector<Rule> * log) -> BergeCycle
    {
        require_covering_rank3(h, 6);
        auto path = find_hamiltonian_path(h);
        auto start = near_cycle_from_path(h, path, log);
        if (auto c = std::get_if<BergeCycle>(&start))
            return std::move(*c);
        return detail::complete_from_state(h, std::move(std::get<RedBlueState>(start)), log);
    }

    template <typename F>
    auto with_rescue(const Hypergraph & h, int s, const CycleFinderOptions & options, F && strict) -> BergeCycle
    {
        if (! options.fallback_oracle)
            return strict();
        try {
            return strict();
        }
        catch (const Error & e) {
            if (e.kind() != ErrorKind::InternalInvariantViolation)
                throw;
            note(options.log, Rule::OracleRescue);
            if (auto c = exists_cycle(h, s))
                return std::move(*c);
            throw;
        }
    }
}

namespace detail {
    auto terminal_patterns() -> const std::vector<std::string> &
    {
        static const std::vector<std::string> patterns = [] {
            std::vector<std::string> p;
            for (const auto & tc : terminal_cases())
                p.push_back(tc.pattern);
            return p;
        }();
        return patterns;
    }

    void check_terminal_consequences(const std::string & colors)
    {
        const int m = static_cast<int>(colors.size());
        auto at = [&](int i) { return colors[((i % m) + m) % m]; };

        for (int i = 0; i < m; ++i)
            if (at(i) == 'B' && at(i + 1) == 'B' && at(i + 2) == 'B')
                invariant_violation("three consecutive blue pairs in terminal coloring " + colors);

        auto start = colors.find('B');
        if (start == std::string::npos)
            invariant_violation("(C5) all-red terminal coloring " + colors);

        // Red segment lengths and the blue gap that follows each, walking
        // once around from a blue position.
        std::vector<int> reds, gaps;
        for (int k = 0; k < m;) {
            int i = static_cast<int>(start) + k;
            if (at(i) == 'R') {
                int len = 0;
                while (k < m && at(static_cast<int>(start) + k) == 'R')
                    ++len, ++k;
                reds.push_back(len);
                gaps.push_back(0);
            }
            else {
                if (! gaps.empty())
                    ++gaps.back();
                ++k;
            }
        }
        // Blues before the first red segment belong to the last gap.
        if (! gaps.empty()) {
            int lead = 0;
            while (at(static_cast<int>(start) + lead) == 'B')
                ++lead;
            gaps.back() += lead;
        }

        const int segments = static_cast<int>(reds.size());
        const int longest = segments ? *std::max_element(reds.begin(), reds.end()) : 0;
        const int long_ones = static_cast<int>(std::count_if(reds.begin(), reds.end(), [](int r) { return r >= 2; }));
        const int min_gap = segments ? *std::min_element(gaps.begin(), gaps.end()) : m;

        if (segments == 0)
            invariant_violation("all-blue terminal coloring " + colors);
        if (segments > 3)
            invariant_violation("(C1) four or more red segments in " + colors);
        if (longest >= 4)
            invariant_violation("(C5) red segment of length >= 4 in " + colors);
        if (longest == 3 && segments > 1)
            invariant_violation("(C4) red segment of length 3 is not alone in " + colors);
        if (long_ones > 1)
            invariant_violation("(C3) two red segments of length >= 2 in " + colors);
        if (long_ones == 1 && segments > 1 && min_gap < 2)
            invariant_violation("(C3) fewer than two blue pairs between red segments in " + colors);
        if (segments == 3 && (longest > 1 || min_gap < 2))
            invariant_violation("(C2) three red segments not all single and spaced in " + colors);
    }

    auto augment_step(const Hypergraph & h, const RedBlueState & state) -> StepResult
    {
        for (int reflected = 0; reflected < 2; ++reflected) {
            Frame f(h, state.cycle(), state.leftover(), 0, reflected);
            if (auto r = try_free_bridge(f))
                return std::move(*r);
        }
        {
            Frame f(h, state.cycle(), state.leftover(), 0, false);
            if (auto r = try_blue_run(f))
                return std::move(*r);
        }
        return terminal_step(h, state);
    }

    auto complete_from_state(const Hypergraph & h, RedBlueState state, std::vector<Rule> * log) -> BergeCycle
    {
        const int m = state.cycle().length();
        for (int round = 0; round <= m; ++round) {
            state.check(h);
            auto step = augment_step(h, state);
            note(log, step.rule);
            if (step.hamiltonian) {
                if (step.hamiltonian->length() != h.order())
                    invariant_violation("augmentation returned a non-Hamiltonian cycle");
                return std::move(*step.hamiltonian);
            }
            if (step.next->red_count() <= state.red_count())
                invariant_violation("augmentation step did not increase the red count");
            state = std::move(*step.next);
        }
        invariant_violation("augmentation exceeded n-1 rounds");
    }

    auto six_edge_reconfigure(const Hypergraph & h, const BergeCycle & c) -> std::optional<BergeCycle>
    {
        if (c.length() != 6)
            return std::nullopt;
        for (int reflected = 0; reflected < 2; ++reflected)
            for (int offset = 0; offset < 6; ++offset) {
                Frame f(h, c, 0, offset, reflected);
                auto find = [&](Vertex a, Vertex b, Vertex d) { return h.find_edge(pair_mask(a, b) | vertex_bit(d)); };
                auto h1 = find(f.V(1), f.V(2), f.V(4));
                auto h2 = find(f.V(3), f.V(5), f.V(6));
                auto h3 = find(f.V(3), f.V(4), f.V(6));
                auto h4 = find(f.V(1), f.V(2), f.V(5));
                auto h5 = find(f.V(2), f.V(5), f.V(6));
                if (h1 < 0 || h2 < 0 || h3 < 0 || h4 < 0 || h5 < 0)
                    continue;
                CycleBuilder b;
                b.add(f.V(2), h4).add(f.V(5), h5).add(f.V(6), h2).add(f.V(3), h3).add(f.V(4), h1);
                return b.finish(h, "six-edge reconfiguration");
            }
        return std::nullopt;
    }

    auto shorten_cycle(const Hypergraph & h, const BergeCycle & c, std::vector<Rule> * log) -> BergeCycle
    {
        const int len = c.length();
        if (len != 5 && len != 6)
            fail(ErrorKind::LengthOutOfRange, "shortening is defined for cycles of length 5 and 6");

        Frame base(h, c, 0, 0, false);
        for (int i = 1; i <= len; ++i)
            for (auto e : base.containers(base.V(i), base.V(i + 2))) {
                if (base.used(e) && e != base.E(i) && e != base.E(i + 1))
                    continue;
                CycleBuilder b;
                for (int p = i + 2; p < i + len; ++p)
                    b.add(base.V(p), base.E(p));
                b.add(base.V(i), e);
                note(log, Rule::Shortcut);
                return b.finish(h, "shortcut");
            }

        // Every chord v_i v_{i+2} lies only in a used edge embedding a
        // neighbouring pair. Two consecutive chords leaning the same way give
        // v_i v_{i+2} v_{i+1} v_{i+4} ... v_{i-1}.
        for (int reflected = 0; reflected < 2; ++reflected) {
            Frame f(h, c, 0, 0, reflected);
            for (int i = 1; i <= len; ++i) {
                if (! h.contains(f.E(i + 2), f.V(i)) || ! h.contains(f.E(i + 3), f.V(i + 1)))
                    continue;
                CycleBuilder b;
                b.add(f.V(i), f.E(i + 2)).add(f.V(i + 2), f.E(i + 1)).add(f.V(i + 1), f.E(i + 3));
                for (int p = i + 4; p < i + len; ++p)
                    b.add(f.V(p), f.E(p));
                note(log, Rule::DoubleChord);
                return b.finish(h, "double chord");
            }
        }

        if (len == 6)
            if (auto r = six_edge_reconfigure(h, c)) {
                note(log, Rule::SixEdgeReconfigure);
                return std::move(*r);
            }

        invariant_violation("no shortening applies to cycle " + cycle_text(c) + " in " + describe(h));
    }
}

auto find_hamiltonian_cycle(const Hypergraph & h, const CycleFinderOptions & options) -> BergeCycle
{
    require_covering_rank3(h, 6);
    return with_rescue(h, h.order(), options, [&] { return hamiltonian_cycle_strict(h, options.log); });
}

auto find_triangle(const Hypergraph & h, const CycleFinderOptions & options) -> BergeCycle
{
    require_covering_rank3(h, 4);
    return with_rescue(h, 3, options, [&] {
        EdgeIndex triple = -1;
        for (EdgeIndex e = 0; e < h.size(); ++e)
            if (h.edge_size(e) == 3) {
                triple = e;
                break;
            }
        if (triple < 0) {
            // Every pair is its own edge.
            note(options.log, Rule::TriangleFromPairs);
            CycleBuilder b;
            b.add(1, h.find_edge(pair_mask(1, 2))).add(2, h.find_edge(pair_mask(2, 3))).add(3, h.find_edge(pair_mask(1, 3)));
            return b.finish(h, "triangle from pairs");
        }
        note(options.log, Rule::TriangleFromTriple);
        auto v = h.edge(triple);
        const Vertex outside = std::countr_zero(h.all_vertices() & ~h.mask(triple)) + 1;
        const auto via_first = h.containers(pair_mask(v[0], outside)).front();
        // via_first misses v[1] or v[2]; use whichever it misses.
        const Vertex other = h.contains(via_first, v[1]) ? v[2] : v[1];
        const auto via_other = h.containers(pair_mask(other, outside)).front();
        CycleBuilder b;
        b.add(v[0], triple).add(other, via_other).add(outside, via_first);
        return b.finish(h, "triangle from triple");
    });
}

auto find_cycle_of_length(const Hypergraph & h, int s, const CycleFinderOptions & options) -> BergeCycle
{
    require_covering_rank3(h, 6);
    if (s < 3 || s > h.order())
        fail(ErrorKind::LengthOutOfRange, "cycle length " + std::to_string(s) + " outside 3.." + std::to_string(h.order()));
    if (s == 3)
        return find_triangle(h, options);

    return with_rescue(h, s, options, [&] {
        if (s >= 6) {
            std::vector<Vertex> subset(s);
            std::iota(subset.begin(), subset.end(), 1);
            auto t = trace(h, subset);
            return lift(h, t, hamiltonian_cycle_strict(t.trace, options.log));
        }
        CycleFinderOptions strict{false, options.log};
        auto longer = find_cycle_of_length(h, s + 1, strict);
        return detail::shorten_cycle(h, longer, options.log);
    });
}

auto find_all_cycles(const Hypergraph & h, const CycleFinderOptions & options) -> std::vector<BergeCycle>
{
    require_covering_rank3(h, 6);
    // Longest first so C5 and C4 reuse the cycle one longer.
    std::vector<BergeCycle> out;
    for (int s = h.order(); s >= 3; --s) {
        if (s == 5 || s == 4) {
            const auto & longer = out.back();
            out.push_back(with_rescue(h, s, options, [&] { return detail::shorten_cycle(h, longer, options.log); }));
        }
        else
            out.push_back(find_cycle_of_length(h, s, options));
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}
