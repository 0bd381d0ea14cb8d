#include "cli.hpp"

#include "bergecov/cyclefinder.hpp"
#include "bergecov/enumerate.hpp"
#include "bergecov/error.hpp"
#include "bergecov/experiments.hpp"
#include "bergecov/io.hpp"
#include "bergecov/lagrangian.hpp"
#include "bergecov/oracle.hpp"
#include "bergecov/pathfinder.hpp"
#include "bergecov/rainbow.hpp"
#include "bergecov/random.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace bergecov::cli {

using nlohmann::json;

namespace {
    struct Input
    {
        std::string file;
        std::string sizes;

        auto load() const -> Hypergraph
        {
            std::optional<SizeSet> r;
            if (! sizes.empty())
                r = parse_size_set(sizes);
            return read_hypergraph(file, r);
        }
    };

    void add_input(CLI::App * sub, Input & in)
    {
        sub->add_option("file", in.file, "hypergraph (.hg text or JSON; - for stdin)")->required();
        sub->add_option("--sizes", in.sizes, "allowed edge sizes, e.g. 2,3 or 2-4 (default 2..largest)");
    }

    auto report_json(const ExperimentReport & r) -> json
    {
        auto failures = json::array();
        for (const auto & f : r.failures) {
            json item{{"hypergraph", to_json(f.hypergraph)}, {"missing", f.missing}};
            if (! f.detail.empty())
                item["detail"] = f.detail;
            failures.push_back(item);
        }
        return {{"checked", r.checked}, {"failures", failures}};
    }

    auto lagrangian_json(const LagrangianResult & r) -> json
    {
        return {{"value", r.value}, {"witness", r.witness}, {"support", r.support}, {"method", to_string(r.method)}};
    }

    auto rule_names(const std::vector<Rule> & log) -> json
    {
        auto out = json::array();
        for (auto r : log)
            out.push_back(std::string(to_string(r)));
        return out;
    }

    auto verify_one(const Hypergraph & h, const json & j) -> json
    {
        auto cert = certificate_from_json(j);
        if (auto * c = std::get_if<BergeCycle>(&cert))
            return {{"kind", "cycle"}, {"length", c->length()}, {"valid", verify_cycle(h, *c)}};
        const auto & p = std::get<BergePath>(cert);
        return {{"kind", "path"}, {"length", p.length()}, {"valid", verify_path(h, p)}};
    }
}

auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Berge paths and cycles in covering hypergraphs"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Input in;
    int jobs = 1;
    auto add_jobs = [&](CLI::App * sub) { sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber); };

    std::function<void()> action;

    auto * validate_cmd = app.add_subcommand("validate", "check a hypergraph file");
    add_input(validate_cmd, in);
    validate_cmd->callback([&] {
        action = [&] {
            auto h = in.load();
            out << json{{"valid", true}, {"n", h.order()}, {"m", h.size()}, {"rank", h.rank()}}.dump() << "\n";
        };
    });

    auto * shadow_cmd = app.add_subcommand("shadow", "pairs covered by some edge");
    add_input(shadow_cmd, in);
    shadow_cmd->callback([&] {
        action = [&] {
            auto s = shadow(in.load());
            out << json{{"n", s.n}, {"pairs", s.pairs}}.dump() << "\n";
        };
    });

    auto * covering_cmd = app.add_subcommand("covering", "is every pair covered");
    add_input(covering_cmd, in);
    covering_cmd->callback([&] {
        action = [&] {
            auto h = in.load();
            json j{{"covering", is_covering(h)}};
            if (h.order() >= 2)
                j["min_codegree"] = min_codegree(h);
            out << j.dump() << "\n";
        };
    });

    auto * path_cmd = app.add_subcommand("find-path", "Hamiltonian Berge path of a covering {2,3}-graph");
    add_input(path_cmd, in);
    path_cmd->callback([&] { action = [&] { out << to_json(find_hamiltonian_path(in.load())).dump() << "\n"; }; });

    int length = 0;
    bool all = false, fallback = false, show_rules = false;
    auto * cycle_cmd = app.add_subcommand("find-cycle", "Berge cycles of a covering {2,3}-graph, n >= 6");
    add_input(cycle_cmd, in);
    auto * length_opt = cycle_cmd->add_option("--length,-s", length, "cycle length (default n)");
    cycle_cmd->add_flag("--all", all, "one certificate for every length 3..n")->excludes(length_opt);
    cycle_cmd->add_flag("--fallback-oracle", fallback, "fall back to exhaustive search on an internal failure");
    cycle_cmd->add_flag("--rules", show_rules, "report the rules applied");
    cycle_cmd->callback([&] {
        action = [&] {
            auto h = in.load();
            std::vector<Rule> log;
            CycleFinderOptions opts{fallback, show_rules ? &log : nullptr};
            json j;
            if (all) {
                j = json::array();
                for (const auto & c : find_all_cycles(h, opts))
                    j.push_back(to_json(c));
            }
            else
                j = to_json(find_cycle_of_length(h, length ? length : h.order(), opts));
            if (show_rules)
                j = json{{"certificates", j}, {"rules", rule_names(log)}};
            out << j.dump() << "\n";
        };
    });

    auto * triangle_cmd = app.add_subcommand("find-triangle", "Berge triangle of a covering {2,3}-graph, n >= 4");
    add_input(triangle_cmd, in);
    triangle_cmd->callback([&] { action = [&] { out << to_json(find_triangle(in.load())).dump() << "\n"; }; });

    auto * oracle_cmd = app.add_subcommand("oracle", "exhaustive search");
    oracle_cmd->require_subcommand(1);
    int oracle_s = 0, oracle_t = 0;
    double oracle_cap = OracleLimits{}.max_sequences;
    auto * oracle_cycle = oracle_cmd->add_subcommand("cycle", "Berge cycle of a given length");
    add_input(oracle_cycle, in);
    oracle_cycle->add_option("-s,--length", oracle_s, "cycle length")->required();
    oracle_cycle->add_option("--cap", oracle_cap, "maximum number of base sequences");
    oracle_cycle->callback([&] {
        action = [&] {
            auto c = exists_cycle(in.load(), oracle_s, {oracle_cap});
            out << json{{"exists", c.has_value()}, {"certificate", c ? to_json(*c) : json(nullptr)}}.dump() << "\n";
        };
    });
    auto * oracle_path = oracle_cmd->add_subcommand("path", "Berge path with t base vertices");
    add_input(oracle_path, in);
    oracle_path->add_option("-t,--vertices", oracle_t, "number of base vertices")->required();
    oracle_path->add_option("--cap", oracle_cap, "maximum number of base sequences");
    oracle_path->callback([&] {
        action = [&] {
            auto p = exists_path(in.load(), oracle_t, {oracle_cap});
            out << json{{"exists", p.has_value()}, {"certificate", p ? to_json(*p) : json(nullptr)}}.dump() << "\n";
        };
    });

    auto * remark_cmd = app.add_subcommand("remark5", "covering {2,3}-graphs on 3..5 vertices missing a cycle length");
    add_jobs(remark_cmd);
    remark_cmd->callback([&] { action = [&] { out << report_json(remark5_experiment(jobs)).dump() << "\n"; }; });

    ConjectureOptions conj;
    std::string mode = "exhaustive";
    auto * conj_cmd = app.add_subcommand("conjecture", "search covering k-graphs for a missing cycle length");
    conj_cmd->add_option("-k", conj.k, "uniformity")->required();
    conj_cmd->add_option("-n", conj.n, "vertex count")->required();
    conj_cmd->add_option("--mode", mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
    conj_cmd->add_option("--budget", conj.budget, "random instances");
    conj_cmd->add_option("--seed", conj.seed, "random seed");
    add_jobs(conj_cmd);
    conj_cmd->callback([&] {
        action = [&] {
            conj.mode = mode == "random" ? SearchMode::Random : SearchMode::Exhaustive;
            conj.jobs = jobs;
            out << report_json(conjecture_search(conj)).dump() << "\n";
        };
    });

    MaximizeOptions maxopts;
    maxopts.exact_2graph = false;
    bool minimal = false;
    auto * lag_cmd = app.add_subcommand("lagrangian", "Lagrangian of a uniform hypergraph (lower bound by ascent)");
    add_input(lag_cmd, in);
    lag_cmd->add_option("--restarts", maxopts.restarts, "ascent restarts")->check(CLI::PositiveNumber);
    lag_cmd->add_option("--seed", maxopts.seed, "random seed for restarts");
    lag_cmd->add_flag("--exact-2graph", maxopts.exact_2graph, "use the clique number for 2-graphs");
    lag_cmd->add_flag("--minimal-support", minimal, "shrink the witness support");
    add_jobs(lag_cmd);
    lag_cmd->callback([&] {
        action = [&] {
            auto h = in.load();
            maxopts.jobs = jobs;
            auto r = maximize(h, maxopts);
            json j = lagrangian_json(r);
            if (minimal) {
                r = minimal_support(h, r, maxopts);
                j = lagrangian_json(r);
                j["support_covering"] = r.support_covering;
            }
            out << j.dump() << "\n";
        };
    });

    int bound_t = 0;
    std::string bound_mode = "cycle";
    auto * bound_cmd = app.add_subcommand("verify-bound", "Lagrangian bound for Berge-C_t-free or Berge-P_t-free k-graphs");
    add_input(bound_cmd, in);
    bound_cmd->add_option("-t", bound_t, "forbidden length")->required();
    bound_cmd->add_option("--mode", bound_mode, "cycle or path")->check(CLI::IsMember({"cycle", "path"}));
    bound_cmd->add_option("--restarts", maxopts.restarts, "ascent restarts")->check(CLI::PositiveNumber);
    add_jobs(bound_cmd);
    bound_cmd->callback([&] {
        action = [&] {
            maxopts.jobs = jobs;
            auto rep = verify_bound(in.load(), bound_t, bound_mode == "path" ? FreenessMode::Path : FreenessMode::Cycle, maxopts);
            json j = lagrangian_json(rep.result);
            j["k"] = rep.k;
            j["t"] = rep.t;
            j["mode"] = bound_mode;
            j["bound"] = rep.bound;
            j["bound_exact"] = lambda_complete_exact(rep.k, rep.t - 1).str();
            j["margin"] = rep.margin;
            j["holds"] = rep.holds;
            j["note"] = rep.note;
            out << j.dump() << "\n";
        };
    });

    auto * rainbow_cmd = app.add_subcommand("rainbow-export", "edge coloring of K_n induced by a covering hypergraph");
    add_input(rainbow_cmd, in);
    rainbow_cmd->callback([&] {
        action = [&] {
            auto g = to_coloring(in.load());
            auto pairs = json::array();
            for (Vertex u = 1; u <= g.order(); ++u)
                for (Vertex v = u + 1; v <= g.order(); ++v)
                    pairs.push_back({{"u", u}, {"v", v}, {"color", g.color(u, v)}});
            out << json{{"pairs", pairs}, {"boundedness", boundedness(g)}}.dump() << "\n";
        };
    });

    GeneratorOptions gen;
    bool gen_json = false;
    auto * gen_cmd = app.add_subcommand("gen", "random covering {2,3}-graph");
    gen_cmd->add_option("-n", gen.n, "vertex count")->required();
    gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--extra", gen.extra, "edges added after covering");
    gen_cmd->add_option("--pair-prob", gen.pair_prob, "chance an added edge is a 2-edge");
    gen_cmd->add_flag("--json", gen_json, "emit JSON instead of .hg text");
    gen_cmd->callback([&] {
        action = [&] {
            auto h = random_covering_rank3(gen);
            if (gen_json)
                out << to_json(h).dump() << "\n";
            else
                out << format_hg(h);
        };
    });

    CoveringQuery query;
    std::string query_sizes = "2,3";
    bool labeled = false, list = false;
    auto * enum_cmd = app.add_subcommand("enumerate", "covering hypergraphs, one per isomorphism class");
    enum_cmd->add_option("-n", query.n, "vertex count")->required();
    enum_cmd->add_option("--sizes", query_sizes, "edge sizes");
    enum_cmd->add_option("--m-min", query.m_min, "fewest edges");
    enum_cmd->add_option("--m-max", query.m_max, "most edges");
    enum_cmd->add_flag("--labeled", labeled, "every labeled hypergraph instead");
    enum_cmd->add_flag("--list", list, "print the hypergraphs, not just the count");
    enum_cmd->callback([&] {
        action = [&] {
            query.sizes = parse_size_set(query_sizes);
            query.canonical = ! labeled;
            std::uint64_t count = 0;
            auto items = json::array();
            CoveringEnumerator(query).visit_all([&](const Hypergraph & h) {
                ++count;
                if (list)
                    items.push_back(to_json(h));
            });
            json j{{"count", count}};
            if (list)
                j["hypergraphs"] = items;
            out << j.dump() << "\n";
        };
    });

    SweepOptions sweep;
    bool sweep_no_paths = false, sweep_no_cycles = false, sweep_no_oracle = false;
    auto * sweep_cmd = app.add_subcommand("sweep", "run the finders and the oracle on every covering {2,3}-graph on n vertices");
    sweep_cmd->add_option("-n", sweep.n, "vertex count")->required();
    sweep_cmd->add_flag("--no-paths", sweep_no_paths, "skip the path finder");
    sweep_cmd->add_flag("--no-cycles", sweep_no_cycles, "skip the cycle finder");
    sweep_cmd->add_flag("--no-oracle", sweep_no_oracle, "skip the oracle");
    add_jobs(sweep_cmd);
    sweep_cmd->callback([&] {
        action = [&] {
            sweep.paths = ! sweep_no_paths;
            sweep.cycles = ! sweep_no_cycles;
            sweep.oracle = ! sweep_no_oracle;
            sweep.jobs = jobs;
            auto r = rank3_sweep(sweep);
            auto examples = json::array();
            for (const auto & f : r.examples)
                examples.push_back({{"hypergraph", to_json(f.hypergraph)}, {"lengths", f.missing}, {"detail", f.detail}});
            out << json{{"instances", r.instances}, {"path_failures", r.path_failures},
                           {"cycle_failures", r.cycle_failures}, {"oracle_failures", r.oracle_failures},
                           {"examples", examples}}
                       .dump()
                << "\n";
        };
    });

    std::string cert_file;
    auto * verify_cmd = app.add_subcommand("verify", "check certificates against a hypergraph");
    add_input(verify_cmd, in);
    verify_cmd->add_option("certificate", cert_file, "certificate JSON (object or array; - for stdin)")->required();
    int verify_status = 0;
    verify_cmd->callback([&] {
        action = [&] {
            if (in.file == "-" && cert_file == "-")
                fail(ErrorKind::ParseError, "only one of the inputs can be standard input");
            auto h = in.load();
            json j;
            try {
                j = json::parse(read_text(cert_file));
            }
            catch (const json::exception & e) {
                fail(ErrorKind::ParseError, std::string("invalid certificate JSON: ") + e.what());
            }
            if (j.is_object() && j.contains("certificates"))
                j = j["certificates"];
            json result;
            bool ok = true;
            if (j.is_array()) {
                result = json::array();
                for (const auto & item : j) {
                    auto r = verify_one(h, item);
                    ok = ok && r["valid"].get<bool>();
                    result.push_back(r);
                }
            }
            else {
                result = verify_one(h, j);
                ok = result["valid"].get<bool>();
            }
            out << result.dump() << "\n";
            if (! ok)
                verify_status = 2;
        };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        action();
        return verify_status;
    }
    catch (const Error & e) {
        err << e.what() << "\n";
        return e.kind() == ErrorKind::InternalInvariantViolation ? 1 : 2;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}
