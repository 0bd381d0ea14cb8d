#pragma once

#include "bergecov/berge.hpp"
#include "bergecov/hypergraph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bergecov {

enum class Color : unsigned char { Blue, Red };

/// Rules applied by the constructive cycle finders, in the order they fire.
enum class Rule {
    ClosedPath,          // Hamiltonian path closed directly
    PathToNearCycle,     // Hamiltonian path folded into an (n-1)-cycle
    FreeBridge,          // two disjoint red pairs joined by a free edge
    BlueRunInsert,       // w inserted inside three consecutive blue pairs
    BlueRunRecolor,      // the blue run's middle pair re-embedded through w
    TerminalN10,
    TerminalN8,
    TerminalN7Insert,
    TerminalN7Recolor,
    TerminalN6Split,     // RBRBB, bridges {1,3,5} and {2,4,5}
    TerminalN6Nested,    // RBRBB, bridges {1,2,3} and {2,4,5}
    TerminalN6Run,       // RRRBB
    Shortcut,            // length L -> L-1 by a chord v_i v_{i+2}
    DoubleChord,         // length L -> L-1 by two chords through used edges
    SixEdgeReconfigure,  // 6 -> 5 from the derived six-edge configuration
    TriangleFromPairs,
    TriangleFromTriple,
    OracleRescue,
};

auto to_string(Rule rule) -> std::string_view;

/// An (n-1)-cycle together with the leftover vertex w. A cycle pair is red
/// when the edge the cycle assigns to it also contains w.
class RedBlueState
{
public:
    /// Throws InvalidCertificate if the cycle does not verify, does not have
    /// length n-1, or passes through w.
    static auto make(const Hypergraph & h, BergeCycle cycle, Vertex w) -> RedBlueState;

    auto cycle() const -> const BergeCycle & { return _cycle; }
    auto leftover() const -> Vertex { return _w; }
    auto colors() const -> const std::vector<Color> & { return _colors; }
    auto red_count() const -> int { return _red_count; }
    /// 'R'/'B' per cycle pair, starting at pair (v1, v2).
    auto color_string() const -> std::string;

    /// Re-derives colors and red count against h; InternalInvariantViolation
    /// on any mismatch.
    void check(const Hypergraph & h) const;

private:
    RedBlueState(BergeCycle cycle, Vertex w) : _cycle(std::move(cycle)), _w(w) {}

    BergeCycle _cycle;
    Vertex _w;
    std::vector<Color> _colors;
    int _red_count = 0;
};

struct CycleFinderOptions
{
    /// On an internal invariant violation, fall back to exhaustive search
    /// instead of throwing. Research use only.
    bool fallback_oracle = false;
    /// When set, every rule applied is appended here.
    std::vector<Rule> * log = nullptr;
};

/// Hamiltonian Berge cycle of a covering {2,3}-hypergraph with n >= 6.
auto find_hamiltonian_cycle(const Hypergraph & h, const CycleFinderOptions & options = {}) -> BergeCycle;

/// Berge cycle of length s, 3 <= s <= n, in a covering {2,3}-hypergraph with n >= 6.
auto find_cycle_of_length(const Hypergraph & h, int s, const CycleFinderOptions & options = {}) -> BergeCycle;

/// One cycle for every length 3..n.
auto find_all_cycles(const Hypergraph & h, const CycleFinderOptions & options = {}) -> std::vector<BergeCycle>;

/// Berge triangle of a covering {2,3}-hypergraph with n >= 4.
auto find_triangle(const Hypergraph & h, const CycleFinderOptions & options = {}) -> BergeCycle;

namespace detail {
    struct StepResult
    {
        Rule rule;
        std::optional<BergeCycle> hamiltonian;
        std::optional<RedBlueState> next;
    };

    /// The five colorings (over cycle pairs v1v2, v2v3, ...) that can remain
    /// once no bridge is free and no three consecutive pairs are blue.
    auto terminal_patterns() -> const std::vector<std::string> &;

    /// One augmentation step: Hamiltonian cycle or a state with more red pairs.
    auto augment_step(const Hypergraph & h, const RedBlueState & state) -> StepResult;

    /// Runs augment_step until a Hamiltonian cycle appears.
    auto complete_from_state(const Hypergraph & h, RedBlueState state, std::vector<Rule> * log) -> BergeCycle;

    /// Structural facts that must hold whenever no free bridge exists;
    /// throws InternalInvariantViolation naming the first one that fails.
    void check_terminal_consequences(const std::string & colors);

    /// Berge cycle of length L-1 from one of length L in {5, 6}.
    auto shorten_cycle(const Hypergraph & h, const BergeCycle & c, std::vector<Rule> * log) -> BergeCycle;

    /// The six-edge configuration for L = 6 on its own (no chord checks first);
    /// empty when the configuration is absent under every relabeling.
    auto six_edge_reconfigure(const Hypergraph & h, const BergeCycle & c) -> std::optional<BergeCycle>;
}

}
