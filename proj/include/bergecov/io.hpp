#pragma once

#include "bergecov/berge.hpp"
#include "bergecov/hypergraph.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace bergecov {

/// Text format:
///
///     # comment
///     n 5
///     e 1 2 3
///     e 1 4 5
///
/// A JSON object {"n": 5, "edges": [[1,2,3],[1,4,5]]} is accepted too.
/// Without explicit sizes R is {2, ..., largest edge size}.
auto parse_hypergraph(std::string_view text, std::optional<SizeSet> sizes = std::nullopt) -> Hypergraph;

/// "-" reads standard input.
auto read_hypergraph(const std::string & path, std::optional<SizeSet> sizes = std::nullopt) -> Hypergraph;

auto format_hg(const Hypergraph & h) -> std::string;
auto to_json(const Hypergraph & h) -> nlohmann::json;

/// {"base": [...], "edges": [...]}, edge indices 0-based into the host's edge list.
auto to_json(const BergePath & p) -> nlohmann::json;
auto to_json(const BergeCycle & c) -> nlohmann::json;

using Certificate = std::variant<BergePath, BergeCycle>;

/// A cycle when there are as many edges as base vertices, a path when there
/// is one fewer.
auto certificate_from_json(const nlohmann::json & j) -> Certificate;

/// "2,3" or "2-4".
auto parse_size_set(std::string_view text) -> SizeSet;

auto read_text(const std::string & path) -> std::string;

}
