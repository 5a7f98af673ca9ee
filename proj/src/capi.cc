#include <isspack/isspack.h>

#include <isspack/bench.hh>
#include <isspack/errors.hh>
#include <isspack/generators.hh>
#include <isspack/io.hh>
#include <isspack/iss.hh>
#include <isspack/reduction.hh>
#include <isspack/solvers.hh>
#include <isspack/verify.hh>

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <variant>

using namespace isspack;

using std::optional;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

struct isspack_iss
{
    IssPair pair;
};

struct isspack_graph
{
    Graph g;
};

struct isspack_instance
{
    isspack_kind kind;
    std::variant<PspInstance, XcoverInstance, VectorSumInstance, SubIsoInstance> body;
    optional<ReducedPspInstance> reduction;
};

namespace
{
    thread_local string last_error;
    thread_local string last_detail;

    auto status_of(Error::Kind kind) -> isspack_status
    {
        switch (kind) {
            case Error::Kind::Argument: return ISSPACK_E_ARGUMENT;
            case Error::Kind::Range: return ISSPACK_E_RANGE;
            case Error::Kind::Budget: return ISSPACK_E_BUDGET;
            case Error::Kind::Parse: return ISSPACK_E_PARSE;
            case Error::Kind::Io: return ISSPACK_E_IO;
            case Error::Kind::Soundness: return ISSPACK_E_SOUNDNESS;
            case Error::Kind::WitnessNotFound: return ISSPACK_E_WITNESS_NOT_FOUND;
            case Error::Kind::Equivalence: return ISSPACK_E_EQUIVALENCE;
            case Error::Kind::Internal: return ISSPACK_E_INTERNAL;
        }
        return ISSPACK_E_INTERNAL;
    }

    template <typename F_>
    auto guarded(F_ && f) -> isspack_status
    {
        last_error.clear();
        last_detail.clear();
        try {
            f();
            return ISSPACK_OK;
        }
        catch (const EquivalenceFailure & e) {
            last_error = e.what();
            last_detail = e.bundle();
            return ISSPACK_E_EQUIVALENCE;
        }
        catch (const SoundnessViolation & e) {
            last_error = "[" + e.tag() + "] " + e.what();
            return ISSPACK_E_SOUNDNESS;
        }
        catch (const Error & e) {
            last_error = e.what();
            return status_of(e.kind());
        }
        catch (const nlohmann::json::exception & e) {
            last_error = e.what();
            return ISSPACK_E_PARSE;
        }
        catch (const std::bad_alloc &) {
            last_error = "out of memory";
            return ISSPACK_E_BUDGET;
        }
        catch (const std::exception & e) {
            last_error = e.what();
            return ISSPACK_E_INTERNAL;
        }
        catch (...) {
            last_error = "unknown failure";
            return ISSPACK_E_INTERNAL;
        }
    }

    auto need(const void * p, const char * what) -> void
    {
        if (! p)
            throw ArgumentError(string(what) + " must not be null");
    }

    auto dup(const string & s) -> char *
    {
        auto out = static_cast<char *>(std::malloc(s.size() + 1));
        if (! out)
            throw std::bad_alloc();
        std::memcpy(out, s.c_str(), s.size() + 1);
        return out;
    }

    auto mode_of(isspack_mode mode) -> GadgetMode
    {
        switch (mode) {
            case ISSPACK_MODE_PAPER: return GadgetMode::Paper;
            case ISSPACK_MODE_TIGHT: return GadgetMode::Tight;
        }
        throw ArgumentError("unknown gadget mode");
    }

    auto budget_of(const isspack_budget * b) -> SolveBudget
    {
        SolveBudget budget;
        if (! b)
            return budget;
        budget.max_universe_for_dp = b->max_universe_for_dp;
        budget.max_subsets_enumerated = b->max_subsets_enumerated;
        if (b->time_limit_ms)
            budget.time_limit = std::chrono::milliseconds(b->time_limit_ms);
        budget.max_vecsum_r = b->max_vecsum_r;
        budget.max_subiso_pattern = b->max_subiso_pattern;
        budget.max_subiso_host = b->max_subiso_host;
        return budget;
    }

    auto kind_name(isspack_kind kind) -> string
    {
        switch (kind) {
            case ISSPACK_KIND_PSP: return "psp";
            case ISSPACK_KIND_XCOVER: return "xcover";
            case ISSPACK_KIND_VECSUM: return "vecsum";
            case ISSPACK_KIND_SUBISO: return "subiso";
        }
        throw ArgumentError("unknown instance kind");
    }

    auto indices_json(const PackingWitness & w) -> string
    {
        Json list = Json::array();
        for (auto i : w.indices())
            list.push_back(i);
        Json j;
        j["indices"] = list;
        return j.dump();
    }

    auto reduced_instance(isspack_kind kind, ReducedPspInstance red) -> isspack_instance *
    {
        switch (kind) {
            case ISSPACK_KIND_PSP:
                red.semantics = Semantics::Packing;
                return new isspack_instance{ kind, red.inst, std::move(red) };
            case ISSPACK_KIND_XCOVER:
                red.semantics = Semantics::Cover;
                return new isspack_instance{ kind, red.as_xcover(), std::move(red) };
            case ISSPACK_KIND_VECSUM: {
                red.semantics = Semantics::Cover;
                auto vec = vectorize_instance(red);
                return new isspack_instance{ kind, std::move(vec), std::move(red) };
            }
            case ISSPACK_KIND_SUBISO:
                break;
        }
        throw ArgumentError("a reduction produces psp, xcover or vecsum instances");
    }

    auto load(isspack_kind kind, const Json & j) -> isspack_instance *
    {
        if (kind == ISSPACK_KIND_SUBISO)
            return new isspack_instance{ kind, subiso_from_json(j), std::nullopt };

        if (j.is_object() && j.contains("reduction")) {
            auto & block = j.at("reduction");
            auto recorded = block.contains("target") ? block.at("target").get<string>() : kind_name(kind);
            if (recorded != kind_name(kind))
                throw ParseError("document was reduced to " + recorded + ", not " + kind_name(kind));
            auto inst = reduced_instance(kind, reduction_from_json(block));
            bool same = false;
            if (kind == ISSPACK_KIND_VECSUM)
                same = vecsum_from_json(j) == std::get<VectorSumInstance>(inst->body);
            else {
                auto stored = family_from_json(j);
                same = stored == inst->reduction->inst.family && j.value("r", size_t{0}) == inst->reduction->inst.r;
            }
            if (! same) {
                delete inst;
                throw ParseError("stored instance differs from the one rebuilt from its reduction block");
            }
            return inst;
        }

        switch (kind) {
            case ISSPACK_KIND_PSP: return new isspack_instance{ kind, psp_from_json(j), std::nullopt };
            case ISSPACK_KIND_XCOVER: return new isspack_instance{ kind, xcover_from_json(j), std::nullopt };
            case ISSPACK_KIND_VECSUM: return new isspack_instance{ kind, vecsum_from_json(j), std::nullopt };
            case ISSPACK_KIND_SUBISO: break;
        }
        throw ArgumentError("unknown instance kind");
    }

    auto dump(const isspack_instance & inst) -> Json
    {
        Json j;
        switch (inst.kind) {
            case ISSPACK_KIND_PSP: {
                auto & p = std::get<PspInstance>(inst.body);
                j = to_json(p.family, p.r);
                break;
            }
            case ISSPACK_KIND_XCOVER: {
                auto & x = std::get<XcoverInstance>(inst.body);
                j = to_json(x.family, x.r);
                break;
            }
            case ISSPACK_KIND_VECSUM:
                j = to_json(std::get<VectorSumInstance>(inst.body));
                break;
            case ISSPACK_KIND_SUBISO:
                j = to_json(std::get<SubIsoInstance>(inst.body));
                break;
        }
        if (inst.reduction) {
            auto block = reduction_to_json(*inst.reduction);
            block["target"] = kind_name(inst.kind);
            j["reduction"] = block;
        }
        return j;
    }

    auto solve(const isspack_instance & inst, const string & algo, const SolveBudget & budget, isspack_solve_result & out) -> void
    {
        auto unsupported = [&] {
            return ArgumentError("algorithm '" + algo + "' does not apply to " + kind_name(inst.kind) + " instances");
        };

        switch (inst.kind) {
            case ISSPACK_KIND_PSP: {
                auto & p = std::get<PspInstance>(inst.body);
                if (algo == "dp") {
                    auto result = solve_set_packing_dp(p, budget);
                    out.found = result.max_size >= p.r;
                    out.value = result.max_size;
                    out.witness_json = dup(indices_json(result.witness));
                    return;
                }
                if (algo == "bnb") {
                    auto result = solve_set_packing_bnb(p, budget);
                    out.found = result.found;
                    out.nodes = result.nodes;
                    out.value = result.witness.size();
                    if (result.found)
                        out.witness_json = dup(indices_json(result.witness));
                    return;
                }
                throw unsupported();
            }
            case ISSPACK_KIND_XCOVER: {
                auto & x = std::get<XcoverInstance>(inst.body);
                if (algo == "bfs") {
                    auto result = solve_exact_cover_bfs(x, budget);
                    out.found = result && result->size <= x.r;
                    if (result) {
                        out.value = result->size;
                        out.witness_json = dup(indices_json(result->witness));
                    }
                    return;
                }
                if (algo == "bnb") {
                    auto result = solve_exact_cover_bnb(x, budget);
                    out.found = result.found;
                    out.nodes = result.nodes;
                    out.value = result.witness.size();
                    if (result.found)
                        out.witness_json = dup(indices_json(result.witness));
                    return;
                }
                throw unsupported();
            }
            case ISSPACK_KIND_VECSUM: {
                if (algo != "enum" && algo != "bnb")
                    throw unsupported();
                auto result = solve_vector_sum(std::get<VectorSumInstance>(inst.body), budget);
                out.found = result.found;
                out.nodes = result.nodes;
                out.value = result.witness.size();
                if (result.found)
                    out.witness_json = dup(indices_json(result.witness));
                return;
            }
            case ISSPACK_KIND_SUBISO: {
                if (algo != "enum")
                    throw unsupported();
                auto phi = solve_subiso_bruteforce(std::get<SubIsoInstance>(inst.body), budget);
                out.found = phi.has_value();
                if (phi) {
                    out.value = phi->size();
                    out.witness_json = dup(to_json(*phi).dump());
                }
                return;
            }
        }
        throw ArgumentError("unknown instance kind");
    }

    const size_t default_universes[] = { 10, 11, 12, 13, 14, 15, 16, 17, 18 };
    const size_t default_set_counts[] = { 64, 256, 1024 };
}

extern "C"
{
    const char * isspack_last_error(void)
    {
        return last_error.c_str();
    }

    const char * isspack_last_error_detail(void)
    {
        return last_detail.c_str();
    }

    const char * isspack_status_name(isspack_status status)
    {
        switch (status) {
            case ISSPACK_OK: return "ok";
            case ISSPACK_E_ARGUMENT: return "argument error";
            case ISSPACK_E_RANGE: return "range error";
            case ISSPACK_E_BUDGET: return "budget exceeded";
            case ISSPACK_E_PARSE: return "parse error";
            case ISSPACK_E_IO: return "io error";
            case ISSPACK_E_SOUNDNESS: return "soundness violation";
            case ISSPACK_E_WITNESS_NOT_FOUND: return "witness not found";
            case ISSPACK_E_EQUIVALENCE: return "equivalence failure";
            case ISSPACK_E_INTERNAL: return "internal error";
        }
        return "unknown status";
    }

    void isspack_string_free(char * s)
    {
        std::free(s);
    }

    const char * isspack_version(void)
    {
        return "isspack 1.0.0";
    }

    const char * isspack_gadget_formulas(void)
    {
        return "paper: N = 2*ceil(log2(n+1)) + 2\n"
               "tight: N = smallest even N with C(N, N/2)/2 >= n\n"
               "universe = (l + 2k) * N, r = k + l, vector dimension = universe + l + 2k";
    }

    isspack_status isspack_gadget_size(int n, isspack_mode mode, size_t * out)
    {
        return guarded([&] {
            need(out, "out");
            *out = base_gadget_size(n, mode_of(mode));
        });
    }

    isspack_status isspack_parse_mode(const char * name, isspack_mode * out)
    {
        return guarded([&] {
            need(name, "name");
            need(out, "out");
            *out = parse_gadget_mode(name) == GadgetMode::Paper ? ISSPACK_MODE_PAPER : ISSPACK_MODE_TIGHT;
        });
    }

    void isspack_budget_default(isspack_budget * out)
    {
        if (! out)
            return;
        SolveBudget b;
        out->max_universe_for_dp = b.max_universe_for_dp;
        out->max_subsets_enumerated = b.max_subsets_enumerated;
        out->time_limit_ms = 0;
        out->max_vecsum_r = b.max_vecsum_r;
        out->max_subiso_pattern = b.max_subiso_pattern;
        out->max_subiso_host = b.max_subiso_host;
    }

    isspack_status isspack_iss_build(size_t n_elems, isspack_iss ** out)
    {
        return guarded([&] {
            need(out, "out");
            *out = new isspack_iss{ build_compatible_iss(n_elems) };
        });
    }

    size_t isspack_iss_m_sets(const isspack_iss * iss)
    {
        return iss ? iss->pair.m_sets : 0;
    }

    isspack_status isspack_iss_to_json(const isspack_iss * iss, char ** out)
    {
        return guarded([&] {
            need(iss, "iss");
            need(out, "out");
            *out = dup(to_json(iss->pair).dump(2) + "\n");
        });
    }

    isspack_status isspack_iss_check(const isspack_iss * iss, int * all_passed, char ** report_json)
    {
        return guarded([&] {
            need(iss, "iss");
            auto report = check_compatible_pair(iss->pair);
            if (all_passed)
                *all_passed = report.all_passed() ? 1 : 0;
            if (report_json) {
                Json checks = Json::array();
                for (auto & c : report.checks) {
                    Json j;
                    j["name"] = c.name;
                    j["passed"] = c.passed;
                    if (c.first_counterexample)
                        j["first_counterexample"] = *c.first_counterexample;
                    checks.push_back(j);
                }
                Json doc;
                doc["n_elems"] = iss->pair.n_elems;
                doc["m_sets"] = iss->pair.m_sets;
                doc["checks"] = checks;
                *report_json = dup(doc.dump(2) + "\n");
            }
        });
    }

    void isspack_iss_free(isspack_iss * iss)
    {
        delete iss;
    }

    isspack_status isspack_graph_from_json(const char * text, isspack_graph ** out)
    {
        return guarded([&] {
            need(text, "text");
            need(out, "out");
            *out = new isspack_graph{ graph_from_json(parse_json(text)) };
        });
    }

    isspack_status isspack_graph_pattern(const char * name, isspack_graph ** out)
    {
        return guarded([&] {
            need(name, "name");
            need(out, "out");
            *out = new isspack_graph{ pattern_by_name(name) };
        });
    }

    isspack_status isspack_graph_random(int n, double p, uint64_t seed, isspack_graph ** out)
    {
        return guarded([&] {
            need(out, "out");
            *out = new isspack_graph{ generate_random_graph(n, p, seed) };
        });
    }

    int isspack_graph_n(const isspack_graph * g)
    {
        return g ? g->g.n() : 0;
    }

    size_t isspack_graph_edge_count(const isspack_graph * g)
    {
        return g ? g->g.edge_count() : 0;
    }

    isspack_status isspack_graph_to_json(const isspack_graph * g, char ** out)
    {
        return guarded([&] {
            need(g, "g");
            need(out, "out");
            *out = dup(to_json(g->g).dump());
        });
    }

    void isspack_graph_free(isspack_graph * g)
    {
        delete g;
    }

    isspack_status isspack_instance_from_json(isspack_kind kind, const char * text, isspack_instance ** out)
    {
        return guarded([&] {
            need(text, "text");
            need(out, "out");
            *out = load(kind, parse_json(text));
        });
    }

    isspack_status isspack_instance_random_psp(size_t universe_size, size_t set_count, double density, uint64_t seed, size_t r,
            isspack_instance ** out)
    {
        return guarded([&] {
            need(out, "out");
            *out = new isspack_instance{ ISSPACK_KIND_PSP, generate_random_psp(universe_size, set_count, density, seed, r),
                std::nullopt };
        });
    }

    isspack_kind isspack_instance_kind(const isspack_instance * inst)
    {
        return inst ? inst->kind : ISSPACK_KIND_PSP;
    }

    isspack_status isspack_instance_set_r(isspack_instance * inst, size_t r)
    {
        return guarded([&] {
            need(inst, "inst");
            if (inst->reduction)
                throw ArgumentError("the budget of a reduced instance is fixed by the reduction");
            switch (inst->kind) {
                case ISSPACK_KIND_PSP: std::get<PspInstance>(inst->body).r = r; return;
                case ISSPACK_KIND_XCOVER: std::get<XcoverInstance>(inst->body).r = r; return;
                case ISSPACK_KIND_VECSUM: {
                    auto & v = std::get<VectorSumInstance>(inst->body);
                    v = VectorSumInstance(v.dim(), v.vectors(), v.target(), r, v.labels(), v.indicator_blocks());
                    return;
                }
                case ISSPACK_KIND_SUBISO: break;
            }
            throw ArgumentError("subgraph isomorphism instances have no budget");
        });
    }

    isspack_status isspack_instance_to_json(const isspack_instance * inst, char ** out)
    {
        return guarded([&] {
            need(inst, "inst");
            need(out, "out");
            *out = dup(dump(*inst).dump() + "\n");
        });
    }

    isspack_status isspack_instance_stats_json(const isspack_instance * inst, char ** out)
    {
        return guarded([&] {
            need(inst, "inst");
            need(out, "out");
            if (! inst->reduction)
                throw ArgumentError("instance was not produced by a reduction");
            auto & red = *inst->reduction;
            auto c = compactness_of(red);
            Json order = Json::array();
            for (auto v : red.pattern.order())
                order.push_back(v);
            Json j;
            j["n"] = c.n;
            j["m"] = c.m;
            j["k"] = c.k;
            j["l"] = c.l;
            j["n_elems"] = c.n_elems;
            j["r"] = c.r;
            j["universe_size"] = c.universe_size;
            j["set_count"] = c.set_count;
            j["v_sets"] = red.v_set_count;
            j["e_sets"] = red.e_set_count;
            if (inst->kind == ISSPACK_KIND_VECSUM)
                j["dim"] = std::get<VectorSumInstance>(inst->body).dim();
            j["ratio"] = c.ratio;
            j["order"] = order;
            *out = dup(j.dump());
        });
    }

    void isspack_instance_free(isspack_instance * inst)
    {
        delete inst;
    }

    isspack_status isspack_ordering_count(const isspack_graph * h, uint64_t * out)
    {
        return guarded([&] {
            need(h, "h");
            need(out, "out");
            *out = ordering_count(h->g);
        });
    }

    isspack_status isspack_reduce(const isspack_graph * g, const isspack_graph * h, isspack_kind target, isspack_mode mode,
            uint64_t ordering, isspack_instance ** out)
    {
        return guarded([&] {
            need(g, "g");
            need(h, "h");
            need(out, "out");
            SubIsoInstance inst(g->g, h->g);
            auto pattern = ordering_at(h->g, ordering);
            *out = reduced_instance(target, build_psp_instance(inst, pattern, mode_of(mode)));
        });
    }

    isspack_status isspack_subiso_instance(const isspack_graph * g, const isspack_graph * h, isspack_instance ** out)
    {
        return guarded([&] {
            need(g, "g");
            need(h, "h");
            need(out, "out");
            *out = new isspack_instance{ ISSPACK_KIND_SUBISO, SubIsoInstance(g->g, h->g), std::nullopt };
        });
    }

    isspack_status isspack_solve(const isspack_instance * inst, const char * algo, const isspack_budget * budget,
            isspack_solve_result * out)
    {
        if (out)
            *out = isspack_solve_result{ 0, 0, 0, nullptr };
        return guarded([&] {
            need(inst, "inst");
            need(algo, "algo");
            need(out, "out");
            solve(*inst, algo, budget_of(budget), *out);
        });
    }

    void isspack_solve_result_clear(isspack_solve_result * result)
    {
        if (! result)
            return;
        std::free(result->witness_json);
        *result = isspack_solve_result{ 0, 0, 0, nullptr };
    }

    isspack_status isspack_lift(const isspack_instance * inst, const size_t * indices, size_t count, char ** out)
    {
        return guarded([&] {
            need(inst, "inst");
            need(out, "out");
            if (count)
                need(indices, "indices");
            if (! inst->reduction)
                throw ArgumentError("instance was not produced by a reduction");
            auto phi = lift_packing_to_isomorphism(*inst->reduction, PackingWitness(vector<size_t>(indices, indices + count)));
            *out = dup(to_json(phi).dump());
        });
    }

    isspack_status isspack_verify_sweep(int n_max, const isspack_graph * h, isspack_mode mode, int full, unsigned jobs,
            const isspack_budget * budget, uint64_t seed, size_t * disagreements, char ** report_json)
    {
        return guarded([&] {
            need(h, "h");
            if (n_max > max_sweep_vertices)
                throw BudgetError("exhaustive sweep is limited to at most " + std::to_string(max_sweep_vertices) + " vertices");
            VerifyOptions options{ mode_of(mode), budget_of(budget), full != 0 };
            vector<EquivalenceReport> all;
            size_t bad = 0;
            vector<string> monotone;
            for (int n = 1 ; n <= n_max ; ++n) {
                auto sweep = sweep_exhaustive(n, h->g, options, jobs);
                for (auto & r : sweep)
                    bad += r.agreed() ? 0 : 1;
                if (auto breach = check_monotone(sweep)) {
                    ++bad;
                    monotone.push_back("n = " + std::to_string(n) + ": " + *breach);
                }
                for (auto & r : sweep)
                    all.push_back(std::move(r));
            }
            if (disagreements)
                *disagreements = bad;
            if (report_json) {
                auto doc = parse_json(report_to_json_text(all, seed));
                doc["disagreements"] = bad;
                doc["monotonicity_breaches"] = monotone;
                *report_json = dup(doc.dump(2) + "\n");
            }
        });
    }

    isspack_status isspack_verify_pair(const isspack_graph * g, const isspack_graph * h, isspack_mode mode, int full,
            const isspack_budget * budget, int * agreed, char ** report_json)
    {
        return guarded([&] {
            need(g, "g");
            need(h, "h");
            VerifyOptions options{ mode_of(mode), budget_of(budget), full != 0 };
            auto report = run_equivalence(SubIsoInstance(g->g, h->g), options);
            if (agreed)
                *agreed = report.agreed() ? 1 : 0;
            if (report_json)
                *report_json = dup(report_to_json_text({ report }, 0));
        });
    }

    isspack_status isspack_compactness_sweep(const int * n_values, size_t count, const isspack_graph * h, isspack_mode mode,
            char ** out_json)
    {
        return guarded([&] {
            need(h, "h");
            need(out_json, "out_json");
            if (count)
                need(n_values, "n_values");
            auto records = compactness_sweep(vector<int>(n_values, n_values + count), h->g, mode_of(mode));
            Json list = Json::array();
            for (auto & c : records)
                list.push_back(Json{ { "n", c.n }, { "m", c.m }, { "k", c.k }, { "l", c.l }, { "n_elems", c.n_elems }, { "r", c.r },
                        { "universe_size", c.universe_size }, { "set_count", c.set_count }, { "ratio", c.ratio } });
            *out_json = dup(list.dump(2) + "\n");
        });
    }

    void isspack_bench_config_default(isspack_bench_config * out)
    {
        if (! out)
            return;
        BenchConfig d;
        out->universes = default_universes;
        out->universe_count = std::size(default_universes);
        out->set_counts = default_set_counts;
        out->set_count_count = std::size(default_set_counts);
        out->r = d.r;
        out->density = d.density;
        out->seed = d.seed;
    }

    isspack_status isspack_bench(const isspack_bench_config * config, const isspack_budget * budget, size_t * disagreements,
            char ** csv)
    {
        return guarded([&] {
            need(config, "config");
            BenchConfig c;
            c.universes.assign(config->universes, config->universes + config->universe_count);
            c.set_counts.assign(config->set_counts, config->set_counts + config->set_count_count);
            c.r = config->r;
            c.density = config->density;
            c.seed = config->seed;
            c.budget = budget_of(budget);
            auto rows = bench_dichotomy(c);
            if (disagreements) {
                size_t bad = 0;
                for (auto & row : rows)
                    bad += row.agree() ? 0 : 1;
                *disagreements = bad;
            }
            if (csv)
                *csv = dup(bench_csv(rows, c.seed));
        });
    }
}
