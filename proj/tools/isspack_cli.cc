#include <isspack/isspack.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using std::string;
using std::uint64_t;
using std::vector;

using Json = nlohmann::ordered_json;

namespace
{
    constexpr int exit_yes = 0;
    constexpr int exit_no = 1;
    constexpr int exit_error = 2;

    struct Failure
    {
        string message;
    };

    auto check(isspack_status status, const string & context) -> void
    {
        if (status != ISSPACK_OK) {
            string message = context + ": " + isspack_status_name(status) + ": " + isspack_last_error();
            string detail = isspack_last_error_detail();
            if (! detail.empty())
                message += "\n" + detail;
            throw Failure{ message };
        }
    }

    struct Text
    {
        char * p = nullptr;
        ~Text() { isspack_string_free(p); }
        auto str() const -> string { return p ? string(p) : string(); }
    };

    template <typename T_, void (* free_)(T_ *)>
    struct Handle
    {
        T_ * p = nullptr;
        ~Handle() { free_(p); }
    };

    using GraphHandle = Handle<isspack_graph, isspack_graph_free>;
    using InstanceHandle = Handle<isspack_instance, isspack_instance_free>;
    using IssHandle = Handle<isspack_iss, isspack_iss_free>;

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path);
        if (! in)
            throw Failure{ "cannot open " + path };
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_output(const string & path, const string & text) -> void
    {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (! (out << text))
            throw Failure{ "cannot write " + path };
    }

    auto parse_mode(const string & name) -> isspack_mode
    {
        isspack_mode mode;
        check(isspack_parse_mode(name.c_str(), &mode), "--mode");
        return mode;
    }

    auto parse_kind(const string & name) -> isspack_kind
    {
        if (name == "psp")
            return ISSPACK_KIND_PSP;
        if (name == "xcover")
            return ISSPACK_KIND_XCOVER;
        if (name == "vecsum")
            return ISSPACK_KIND_VECSUM;
        if (name == "subiso")
            return ISSPACK_KIND_SUBISO;
        throw Failure{ "unknown problem '" + name + "'" };
    }

    auto load_graph(const string & source, GraphHandle & out) -> void
    {
        if (std::filesystem::exists(source))
            check(isspack_graph_from_json(read_file(source).c_str(), &out.p), source);
        else
            check(isspack_graph_pattern(source.c_str(), &out.p), "pattern " + source);
    }

    struct Common
    {
        uint64_t seed = 20240501;
        unsigned jobs = 1;
        uint64_t time_limit_ms = 0;
        uint64_t max_nodes = 0;
        size_t max_dp_universe = 0;

        auto budget() const -> isspack_budget
        {
            isspack_budget b;
            isspack_budget_default(&b);
            b.time_limit_ms = time_limit_ms;
            if (max_nodes)
                b.max_subsets_enumerated = max_nodes;
            if (max_dp_universe)
                b.max_universe_for_dp = max_dp_universe;
            return b;
        }
    };

    struct GenIss
    {
        size_t n_elems = 0;
        bool check_pair = false;
        string out;

        auto run() const -> int
        {
            IssHandle iss;
            check(isspack_iss_build(n_elems, &iss.p), "gen-iss");
            Text json;
            check(isspack_iss_to_json(iss.p, &json.p), "gen-iss");
            write_output(out, json.str());
            if (! check_pair)
                return exit_yes;
            int passed = 0;
            Text report;
            check(isspack_iss_check(iss.p, &passed, &report.p), "gen-iss --check");
            std::cerr << report.str();
            return passed ? exit_yes : exit_no;
        }
    };

    struct Reduce
    {
        string target = "psp";
        string graph;
        string pattern;
        string gadget = "paper";
        string ordering = "all";
        string out_dir;

        auto run(const Common & common) const -> int
        {
            auto kind = parse_kind(target);
            if (kind == ISSPACK_KIND_SUBISO)
                throw Failure{ "--target must be psp, xcover or vecsum" };
            auto mode = parse_mode(gadget);
            GraphHandle g, h;
            load_graph(graph, g);
            load_graph(pattern, h);

            uint64_t count = 0;
            check(isspack_ordering_count(h.p, &count), "reduce");
            vector<uint64_t> selected;
            if (ordering == "all")
                for (uint64_t p = 0 ; p < count ; ++p)
                    selected.push_back(p);
            else {
                uint64_t p = 0;
                try {
                    p = std::stoull(ordering);
                }
                catch (const std::exception &) {
                    throw Failure{ "--ordering must be an index or 'all'" };
                }
                if (p >= count)
                    throw Failure{ "--ordering " + ordering + " out of range; the pattern has " + std::to_string(count) + " orderings" };
                selected.push_back(p);
            }

            std::filesystem::create_directories(out_dir);
            Json instances = Json::array();
            Json manifest;
            manifest["seed"] = common.seed;
            manifest["target"] = target;
            manifest["mode"] = gadget;
            manifest["orderings_total"] = count;

            for (auto p : selected) {
                InstanceHandle inst;
                check(isspack_reduce(g.p, h.p, kind, mode, p, &inst.p), "reduce ordering " + std::to_string(p));
                Text doc, stats;
                check(isspack_instance_to_json(inst.p, &doc.p), "reduce");
                check(isspack_instance_stats_json(inst.p, &stats.p), "reduce");
                string file = target + "_" + std::to_string(p) + ".json";
                write_output((std::filesystem::path(out_dir) / file).string(), doc.str());

                auto s = Json::parse(stats.str());
                if (! manifest.contains("n"))
                    for (auto key : { "n", "m", "k", "l", "n_elems", "r", "universe_size", "set_count", "v_sets", "e_sets", "ratio" })
                        manifest[key] = s[key];
                Json entry;
                entry["ordering"] = p;
                entry["file"] = file;
                entry["order"] = s["order"];
                entry["universe_size"] = s["universe_size"];
                entry["set_count"] = s["set_count"];
                if (s.contains("dim"))
                    entry["dim"] = s["dim"];
                instances.push_back(entry);
            }
            manifest["instances"] = instances;
            write_output((std::filesystem::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
            std::cout << "wrote " << selected.size() << " instance(s) and manifest.json to " << out_dir << "\n";
            return exit_yes;
        }
    };

    struct Solve
    {
        string problem;
        string in;
        string algo;
        long long r = -1;
        string witness;

        auto run(const Common & common) const -> int
        {
            auto kind = parse_kind(problem);
            InstanceHandle inst;
            check(isspack_instance_from_json(kind, read_file(in).c_str(), &inst.p), in);
            if (r >= 0)
                check(isspack_instance_set_r(inst.p, size_t(r)), "--r");

            string chosen = algo;
            if (chosen.empty())
                chosen = (kind == ISSPACK_KIND_VECSUM || kind == ISSPACK_KIND_SUBISO) ? "enum" : "bnb";

            auto budget = common.budget();
            isspack_solve_result result;
            auto status = isspack_solve(inst.p, chosen.c_str(), &budget, &result);
            std::unique_ptr<isspack_solve_result, void (*)(isspack_solve_result *)> guard(&result, isspack_solve_result_clear);
            check(status, "solve");

            Json out;
            out["problem"] = problem;
            out["algo"] = chosen;
            out["found"] = result.found != 0;
            out["value"] = result.value;
            out["nodes"] = result.nodes;
            if (result.witness_json) {
                auto w = Json::parse(result.witness_json);
                for (auto & [key, value] : w.items())
                    out[key] = value;
                if (result.found && w.contains("indices") && kind != ISSPACK_KIND_SUBISO) {
                    auto indices = w["indices"].get<vector<size_t>>();
                    Text lifted;
                    if (isspack_lift(inst.p, indices.data(), indices.size(), &lifted.p) == ISSPACK_OK)
                        out["lifted"] = Json::parse(lifted.str())["map"];
                }
            }
            std::cout << out.dump() << "\n";
            if (! witness.empty())
                write_output(witness, out.dump(2) + "\n");
            return result.found ? exit_yes : exit_no;
        }
    };

    struct Verify
    {
        int n_max = 4;
        string pattern = "k3";
        string graph;
        string mode = "tight";
        bool full = false;
        string report;

        auto run(const Common & common) const -> int
        {
            auto m = parse_mode(mode);
            GraphHandle h;
            load_graph(pattern, h);
            auto budget = common.budget();
            Text doc;
            size_t bad = 0;
            if (! graph.empty()) {
                GraphHandle g;
                load_graph(graph, g);
                int agreed = 0;
                check(isspack_verify_pair(g.p, h.p, m, full, &budget, &agreed, &doc.p), "verify");
                bad = agreed ? 0 : 1;
            }
            else
                check(isspack_verify_sweep(n_max, h.p, m, full, common.jobs, &budget, common.seed, &bad, &doc.p), "verify");

            auto j = Json::parse(doc.str());
            size_t yes = 0;
            for (auto & r : j["results"])
                yes += r["psp_answer"].get<bool>() ? 1 : 0;
            std::cout << "checked " << j["reports"] << " graph(s), " << yes << " yes, " << bad << " disagreement(s)\n";
            if (! report.empty())
                write_output(report, doc.str());
            return bad == 0 ? exit_yes : exit_no;
        }
    };

    struct Bench
    {
        vector<size_t> universes;
        vector<size_t> sets;
        size_t r = 0;
        double density = 0.0;
        string out;

        auto run(const Common & common) const -> int
        {
            isspack_bench_config config;
            isspack_bench_config_default(&config);
            if (! universes.empty()) {
                config.universes = universes.data();
                config.universe_count = universes.size();
            }
            if (! sets.empty()) {
                config.set_counts = sets.data();
                config.set_count_count = sets.size();
            }
            if (r)
                config.r = r;
            if (density > 0)
                config.density = density;
            config.seed = common.seed;
            auto budget = common.budget();
            size_t bad = 0;
            Text csv;
            check(isspack_bench(&config, &budget, &bad, &csv.p), "bench");
            write_output(out, csv.str());
            if (bad)
                std::cerr << bad << " row(s) where the two solvers disagree\n";
            return bad == 0 ? exit_yes : exit_no;
        }
    };
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Set packing reductions, gadgets and solvers" };
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", string(isspack_version()) + "\n" + isspack_gadget_formulas());

    Common common;
    app.add_option("--seed", common.seed, "Seed recorded in every artifact")->capture_default_str();
    app.add_option("--jobs", common.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--time-limit-ms", common.time_limit_ms, "Wall-clock limit per solver call, 0 for none");
    app.add_option("--max-nodes", common.max_nodes, "Search node limit per solver call");
    app.add_option("--max-dp-universe", common.max_dp_universe, "Largest universe the mask solvers accept");

    GenIss gen;
    auto gen_cmd = app.add_subcommand("gen-iss", "Build a compatible pair of intersecting set systems");
    gen_cmd->add_option("--n-elems", gen.n_elems, "Even universe size")->required();
    gen_cmd->add_flag("--check", gen.check_pair, "Validate the pair and report on stderr");
    gen_cmd->add_option("--out", gen.out, "Output file, stdout if omitted");

    Reduce reduce;
    auto reduce_cmd = app.add_subcommand("reduce", "Reduce a subgraph isomorphism instance");
    reduce_cmd->add_option("--target", reduce.target)->check(CLI::IsMember({ "psp", "xcover", "vecsum" }))->capture_default_str();
    reduce_cmd->add_option("--graph", reduce.graph, "Host graph JSON")->required();
    reduce_cmd->add_option("--pattern", reduce.pattern, "Pattern JSON or one of edge, p3, k3, c4, paw")->required();
    reduce_cmd->add_option("--gadget", reduce.gadget)->check(CLI::IsMember({ "paper", "tight" }))->capture_default_str();
    reduce_cmd->add_option("--ordering", reduce.ordering, "Ordering index or 'all'")->capture_default_str();
    reduce_cmd->add_option("--out", reduce.out_dir, "Output directory")->required();

    Solve solve;
    auto solve_cmd = app.add_subcommand("solve", "Solve an instance");
    solve_cmd->add_option("problem", solve.problem)->required()->check(CLI::IsMember({ "psp", "xcover", "vecsum", "subiso" }));
    solve_cmd->add_option("--in", solve.in, "Instance JSON")->required();
    solve_cmd->add_option("--algo", solve.algo)->check(CLI::IsMember({ "dp", "bfs", "bnb", "enum" }));
    solve_cmd->add_option("--r", solve.r, "Override the instance budget");
    solve_cmd->add_option("--witness", solve.witness, "Write the result and witness here");

    Verify verify;
    auto verify_cmd = app.add_subcommand("verify", "Check the reduction against brute force");
    verify_cmd->add_option("--n-max", verify.n_max, "Sweep every graph on up to this many vertices")->capture_default_str();
    verify_cmd->add_option("--pattern", verify.pattern, "edge, p3, k3, c4, paw or a JSON file")->capture_default_str();
    verify_cmd->add_option("--graph", verify.graph, "Check a single host graph instead of sweeping");
    verify_cmd->add_option("--mode", verify.mode)->check(CLI::IsMember({ "paper", "tight" }))->capture_default_str();
    verify_cmd->add_flag("--full", verify.full, "Process every ordering, not just up to the first yes");
    verify_cmd->add_option("--report", verify.report, "Write the JSON report here");

    Bench bench;
    auto bench_cmd = app.add_subcommand("bench", "Time the mask DP against branch and bound");
    bench_cmd->add_option("--universes", bench.universes, "Universe sizes")->delimiter(',');
    bench_cmd->add_option("--sets", bench.sets, "Set counts")->delimiter(',');
    bench_cmd->add_option("--r", bench.r, "Packing size asked for");
    bench_cmd->add_option("--density", bench.density, "Element probability");
    bench_cmd->add_option("--out", bench.out, "CSV file, stdout if omitted");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_yes : exit_error;
    }

    try {
        if (*gen_cmd)
            return gen.run();
        if (*reduce_cmd)
            return reduce.run(common);
        if (*solve_cmd)
            return solve.run(common);
        if (*verify_cmd)
            return verify.run(common);
        if (*bench_cmd)
            return bench.run(common);
    }
    catch (const Failure & f) {
        std::cerr << "error: " << f.message << "\n";
        return exit_error;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
