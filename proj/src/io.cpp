#include "bergecov/io.hpp"

#include "bergecov/error.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace bergecov {

namespace {
    auto build(int n, const std::vector<std::vector<Vertex>> & edges, std::optional<SizeSet> sizes) -> Hypergraph
    {
        if (n < 0 || n > max_order)
            fail(ErrorKind::ParseError, "vertex count must lie in 0..64");
        if (! sizes) {
            std::size_t largest = 2;
            for (const auto & e : edges)
                largest = std::max(largest, e.size());
            sizes = SizeSet::range(2, static_cast<int>(std::min<std::size_t>(largest, 63)));
        }
        return Hypergraph::validate(edges, n, *sizes);
    }

    auto parse_json(std::string_view text, std::optional<SizeSet> sizes) -> Hypergraph
    {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::exception & e) {
            fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
        }
        if (! j.is_object() || ! j.contains("n") || ! j.contains("edges"))
            fail(ErrorKind::ParseError, "JSON hypergraph needs fields n and edges");
        try {
            return build(j.at("n").get<int>(), j.at("edges").get<std::vector<std::vector<Vertex>>>(), sizes);
        }
        catch (const nlohmann::json::exception & e) {
            fail(ErrorKind::ParseError, std::string("malformed JSON hypergraph: ") + e.what());
        }
    }

    auto parse_text(std::string_view text, std::optional<SizeSet> sizes) -> Hypergraph
    {
        std::istringstream in{std::string(text)};
        std::string line;
        std::optional<int> n;
        std::vector<std::vector<Vertex>> edges;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream words(line);
            std::string tag;
            if (! (words >> tag))
                continue;
            auto where = "line " + std::to_string(lineno) + ": ";
            if (tag == "n") {
                int value;
                if (n || ! (words >> value))
                    fail(ErrorKind::ParseError, where + "expected a single 'n <count>'");
                n = value;
            }
            else if (tag == "e") {
                std::vector<Vertex> edge;
                std::string word;
                while (words >> word) {
                    try {
                        std::size_t used = 0;
                        edge.push_back(std::stoi(word, &used));
                        if (used != word.size())
                            throw std::invalid_argument(word);
                    }
                    catch (const std::exception &) {
                        fail(ErrorKind::ParseError, where + "'" + word + "' is not a vertex");
                    }
                }
                edges.push_back(std::move(edge));
            }
            else
                fail(ErrorKind::ParseError, where + "unknown directive '" + tag + "'");
            std::string rest;
            if (tag == "n" && words >> rest)
                fail(ErrorKind::ParseError, where + "trailing text after vertex count");
        }
        if (! n)
            fail(ErrorKind::ParseError, "missing 'n <count>' line");
        return build(*n, edges, sizes);
    }
}

auto parse_hypergraph(std::string_view text, std::optional<SizeSet> sizes) -> Hypergraph
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_json(text, sizes);
    return parse_text(text, sizes);
}

auto read_text(const std::string & path) -> std::string
{
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (! in)
        fail(ErrorKind::ParseError, "cannot open " + path);
    buffer << in.rdbuf();
    return buffer.str();
}

auto read_hypergraph(const std::string & path, std::optional<SizeSet> sizes) -> Hypergraph
{
    return parse_hypergraph(read_text(path), sizes);
}

auto format_hg(const Hypergraph & h) -> std::string
{
    std::string s = "n " + std::to_string(h.order()) + "\n";
    for (EdgeIndex e = 0; e < h.size(); ++e) {
        s += "e";
        for (auto v : h.edge(e))
            s += " " + std::to_string(v);
        s += "\n";
    }
    return s;
}

auto to_json(const Hypergraph & h) -> nlohmann::json
{
    auto edges = nlohmann::json::array();
    for (EdgeIndex e = 0; e < h.size(); ++e)
        edges.push_back(h.edge(e));
    return {{"n", h.order()}, {"edges", edges}};
}

auto to_json(const BergePath & p) -> nlohmann::json
{
    return {{"base", p.base}, {"edges", p.edges}};
}

auto to_json(const BergeCycle & c) -> nlohmann::json
{
    return {{"base", c.base()}, {"edges", c.edges()}};
}

auto certificate_from_json(const nlohmann::json & j) -> Certificate
{
    std::vector<Vertex> base;
    std::vector<EdgeIndex> edges;
    try {
        base = j.at("base").get<std::vector<Vertex>>();
        edges = j.at("edges").get<std::vector<EdgeIndex>>();
    }
    catch (const nlohmann::json::exception & e) {
        fail(ErrorKind::ParseError, std::string("certificate needs integer arrays base and edges: ") + e.what());
    }
    if (edges.size() == base.size())
        return BergeCycle(std::move(base), std::move(edges));
    if (edges.size() + 1 == base.size())
        return BergePath{std::move(base), std::move(edges)};
    fail(ErrorKind::InvalidCertificate, "certificate has " + std::to_string(base.size()) + " base vertices and "
            + std::to_string(edges.size()) + " edges");
}

auto parse_size_set(std::string_view text) -> SizeSet
{
    std::vector<int> values;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        try {
            if (auto dash = item.find('-'); dash != std::string::npos) {
                int lo = std::stoi(item.substr(0, dash)), hi = std::stoi(item.substr(dash + 1));
                for (int s = lo; s <= hi; ++s)
                    values.push_back(s);
            }
            else
                values.push_back(std::stoi(item));
        }
        catch (const std::logic_error &) {
            fail(ErrorKind::ParseError, "bad size list '" + std::string(text) + "'");
        }
    }
    if (values.empty())
        fail(ErrorKind::ParseError, "empty size list");
    return SizeSet(std::span<const int>(values));
}

}
