#include <isspack/verify.hh>
#include <isspack/errors.hh>
#include <isspack/generators.hh>
#include <isspack/io.hh>

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace isspack
{
    namespace
    {
        auto witness_json(const PackingWitness & w) -> Json
        {
            Json list = Json::array();
            for (auto i : w.indices())
                list.push_back(i);
            return list;
        }

        class Run
        {
            public:
                Run(const SubIsoInstance & inst, const VerifyOptions & options) :
                    _inst(inst),
                    _options(options)
                {
                    _report.g = inst.g();
                    _report.h = inst.h();
                    _report.mode = options.mode;
                }

                auto go() -> EquivalenceReport
                {
                    try {
                        auto phi = solve_subiso_bruteforce(_inst, _options.budget);
                        _report.subiso_answer = phi.has_value();
                        if (phi)
                            check_embedding(*phi);

                        _report.orderings_total = ordering_count(_inst.h());
                        for (uint64_t p = 0 ; p < _report.orderings_total && ! _stopped ; ++p) {
                            check_ordering(p);
                            if (_report.psp_answer && ! _options.full)
                                break;
                        }

                        if (! _stopped) {
                            if (_report.psp_answer != _report.subiso_answer)
                                disagree("subgraph isomorphism says " + yes_no(_report.subiso_answer)
                                        + " but packing over all orderings says " + yes_no(_report.psp_answer), {});
                            else if (_report.xcover_answer != _report.psp_answer || _report.vecsum_answer != _report.psp_answer)
                                disagree("answers over all orderings differ between packing, exact cover and vector sum", {});
                        }
                    }
                    catch (const SoundnessViolation & e) {
                        disagree(string("soundness check '") + e.tag() + "' failed: " + e.what(), {});
                    }
                    return std::move(_report);
                }

            private:
                static auto yes_no(bool b) -> string { return b ? "yes" : "no"; }

                auto disagree(const string & what, optional<uint64_t> ordering, const PackingWitness * witness = nullptr) -> void
                {
                    _stopped = true;
                    if (_report.first_disagreement)
                        return;
                    _report.first_disagreement = what;
                    Json bundle;
                    bundle["detail"] = what;
                    bundle["mode"] = mode_name(_options.mode);
                    bundle["g"] = to_json(_inst.g());
                    bundle["h"] = to_json(_inst.h());
                    if (ordering) {
                        bundle["ordering"] = *ordering;
                        Json order = Json::array();
                        for (auto v : ordering_at(_inst.h(), *ordering).order())
                            order.push_back(v);
                        bundle["order"] = order;
                    }
                    if (witness)
                        bundle["witness"] = witness_json(*witness);
                    _report.bundle = bundle.dump(2);
                }

                auto record(const ReducedPspInstance & red, uint64_t p, const VectorSumInstance & vec) -> void
                {
                    InstanceStats s;
                    s.ordering = p;
                    s.n_elems = red.layout.n_elems();
                    s.universe_size = red.inst.family.universe_size();
                    s.r = red.inst.r;
                    s.v_sets = red.v_set_count;
                    s.e_sets = red.e_set_count;
                    s.set_count = red.inst.family.size();
                    s.dim = vec.dim();
                    s.target_all_ones = vec.target().all();
                    _report.instances.push_back(s);
                }

                auto lift(const ReducedPspInstance & red, const PackingWitness & w, uint64_t p, const char * who) -> void
                {
                    auto phi = lift_packing_to_isomorphism(red, w);
                    if (! is_injective_homomorphism(_inst, phi))
                        disagree(string(who) + " witness lifted to a map that is not an injective homomorphism", p, &w);
                    else
                        ++_report.lift_checks_passed.lifted;
                }

                auto check_ordering(uint64_t p) -> void
                {
                    auto pattern = ordering_at(_inst.h(), p);
                    auto psp = build_psp_instance(_inst, pattern, _options.mode);
                    auto cover = psp;
                    cover.semantics = Semantics::Cover;
                    auto vec = vectorize_instance(cover);
                    record(psp, p, vec);

                    OrderingOutcome outcome;
                    outcome.ordering = p;

                    auto packing = solve_set_packing_bnb(psp.inst, _options.budget);
                    outcome.psp = packing.found;
                    if (packing.found) {
                        if (! is_packing(psp.inst.family, packing.witness) || packing.witness.size() != psp.inst.r)
                            return disagree("packing solver returned an invalid witness", p, &packing.witness);
                        lift(psp, packing.witness, p, "packing");
                    }

                    auto exact = solve_exact_cover_bnb(cover.as_xcover(), _options.budget);
                    outcome.xcover = exact.found;
                    if (exact.found) {
                        if (! is_exact_cover(cover.inst.family, exact.witness) || exact.witness.size() > cover.inst.r)
                            return disagree("exact cover solver returned an invalid witness", p, &exact.witness);
                        lift(cover, exact.witness, p, "exact cover");
                    }

                    auto sum = solve_vector_sum(vec, _options.budget);
                    outcome.vecsum = sum.found;
                    if (sum.found) {
                        if (vec.sum(sum.witness.indices()) != vec.target() || sum.witness.size() > vec.r())
                            return disagree("vector sum solver returned an invalid witness", p, &sum.witness);
                        if (! is_exact_cover(cover.inst.family, sum.witness))
                            return disagree("vector sum witness is not an exact cover of the set system", p, &sum.witness);
                        lift(cover, sum.witness, p, "vector sum");
                    }

                    _report.orderings.push_back(outcome);
                    _report.psp_answer = _report.psp_answer || outcome.psp;
                    _report.xcover_answer = _report.xcover_answer || outcome.xcover;
                    _report.vecsum_answer = _report.vecsum_answer || outcome.vecsum;

                    if (outcome.psp != outcome.xcover || outcome.psp != outcome.vecsum)
                        disagree("ordering " + to_string(p) + ": packing " + yes_no(outcome.psp) + ", exact cover "
                                + yes_no(outcome.xcover) + ", vector sum " + yes_no(outcome.vecsum), p);
                }

                auto check_embedding(const Isomorphism & phi) -> void
                {
                    if (! is_injective_homomorphism(_inst, phi))
                        return disagree("brute-force map is not an injective homomorphism", {});
                    auto pattern = sort_pattern_for(_inst, phi);
                    auto red = build_psp_instance(_inst, pattern, _options.mode);
                    auto w = embed_isomorphism_as_packing(red, phi);
                    if (w.size() != red.inst.r || ! is_packing(red.inst.family, w))
                        return disagree("embedded map is not an r-packing", {}, &w);
                    if (! is_exact_cover(red.inst.family, w))
                        return disagree("embedded map does not cover the universe exactly", {}, &w);
                    auto back = lift_packing_to_isomorphism(red, w);
                    if (back != phi)
                        return disagree("embedded packing does not lift back to the same map", {}, &w);
                    auto cover = red;
                    cover.semantics = Semantics::Cover;
                    auto vec = vectorize_instance(cover);
                    if (vec.sum(w.indices()) != vec.target())
                        return disagree("embedded packing does not sum to the vector target", {}, &w);
                    ++_report.lift_checks_passed.embedded;
                }

                const SubIsoInstance & _inst;
                const VerifyOptions & _options;
                EquivalenceReport _report;
                bool _stopped = false;
        };

        auto edge_pairs(int n) -> vector<std::pair<Vertex, Vertex>>
        {
            vector<std::pair<Vertex, Vertex>> pairs;
            for (Vertex u = 1 ; u <= n ; ++u)
                for (Vertex v = u + 1 ; v <= n ; ++v)
                    pairs.emplace_back(u, v);
            return pairs;
        }
    }

    auto run_equivalence(const SubIsoInstance & inst, const VerifyOptions & options) -> EquivalenceReport
    {
        return Run(inst, options).go();
    }

    auto verify_equivalence(const SubIsoInstance & inst, const VerifyOptions & options) -> EquivalenceReport
    {
        auto report = run_equivalence(inst, options);
        if (! report.agreed())
            throw EquivalenceFailure(*report.first_disagreement, report.bundle);
        return report;
    }

    auto parallel_for(size_t count, unsigned jobs, const std::function<void (size_t)> & body) -> void
    {
        if (jobs <= 1 || count <= 1) {
            for (size_t i = 0 ; i < count ; ++i)
                body(i);
            return;
        }

        std::atomic<size_t> next{ 0 };
        vector<std::exception_ptr> errors(count);
        auto worker = [&] {
            for (size_t i = next++ ; i < count ; i = next++) {
                try {
                    body(i);
                }
                catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };

        vector<std::thread> threads;
        for (unsigned t = 0 ; t < std::min<size_t>(jobs, count) ; ++t)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();
        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    auto sweep_exhaustive(int n, const Graph & h, const VerifyOptions & options, unsigned jobs) -> vector<EquivalenceReport>
    {
        if (n < 0 || n > max_sweep_vertices)
            throw BudgetError("exhaustive sweep is limited to at most " + to_string(max_sweep_vertices) + " vertices");
        auto pairs = edge_pairs(n).size();
        uint64_t graphs = uint64_t{1} << pairs;

        vector<EquivalenceReport> reports(graphs);
        parallel_for(graphs, jobs, [&] (size_t mask) {
            auto g = graph_from_edge_mask(n, mask);
            EquivalenceReport report;
            if (g.n() < h.n()) {
                report.g = g;
                report.h = h;
                report.mode = options.mode;
                report.orderings_total = ordering_count(h);
            }
            else
                report = run_equivalence(SubIsoInstance(g, h), options);
            report.graph_index = mask;
            reports[mask] = std::move(report);
        });
        return reports;
    }

    auto check_monotone(const vector<EquivalenceReport> & sweep) -> optional<string>
    {
        size_t pairs = 0;
        while ((size_t{1} << pairs) < sweep.size())
            ++pairs;
        if ((size_t{1} << pairs) != sweep.size())
            throw ArgumentError("monotonicity check needs a complete sweep");
        for (size_t mask = 0 ; mask < sweep.size() ; ++mask) {
            if (! sweep[mask].psp_answer)
                continue;
            for (size_t b = 0 ; b < pairs ; ++b) {
                auto super = mask | (size_t{1} << b);
                if (! sweep[super].psp_answer)
                    return "graph " + to_string(mask) + " has a packing but its supergraph " + to_string(super) + " does not";
            }
        }
        return std::nullopt;
    }

    auto compactness_of(const ReducedPspInstance & red) -> CompactnessRecord
    {
        CompactnessRecord c;
        c.n = red.source.g().n();
        c.m = red.source.g().edge_count();
        c.k = red.source.h().edge_count();
        c.l = red.source.h().n();
        c.n_elems = red.layout.n_elems();
        c.r = red.inst.r;
        c.universe_size = red.inst.family.universe_size();
        c.set_count = red.inst.family.size();
        double denom = double(c.r) * std::log2(double(c.set_count));
        c.ratio = denom > 0 ? double(c.universe_size) / denom : 0.0;
        return c;
    }

    auto compactness_sweep(const vector<int> & n_values, const Graph & h, GadgetMode mode) -> vector<CompactnessRecord>
    {
        vector<CompactnessRecord> records;
        vector<Vertex> identity(h.n());
        for (int i = 0 ; i < h.n() ; ++i)
            identity[i] = i + 1;
        for (auto n : n_values) {
            auto inst = SubIsoInstance(Graph(n, edge_pairs(n)), h);
            auto red = build_psp_instance(inst, OrderedPattern(h, identity), mode);
            auto c = compactness_of(red);
            if (c.universe_size != (size_t(c.l) + 2 * c.k) * c.n_elems || c.r != c.k + size_t(c.l))
                throw InternalError("size formulas fail at n = " + to_string(n));
            records.push_back(c);
        }
        return records;
    }

    auto report_to_json_text(const vector<EquivalenceReport> & reports, uint64_t seed) -> string
    {
        Json list = Json::array();
        size_t disagreements = 0;
        for (auto & r : reports) {
            Json j;
            if (r.graph_index)
                j["graph_index"] = *r.graph_index;
            j["g"] = to_json(r.g);
            j["h"] = to_json(r.h);
            j["mode"] = mode_name(r.mode);
            j["subiso_answer"] = r.subiso_answer;
            j["psp_answer"] = r.psp_answer;
            j["xcover_answer"] = r.xcover_answer;
            j["vecsum_answer"] = r.vecsum_answer;
            j["orderings_total"] = r.orderings_total;
            j["orderings_checked"] = r.orderings.size();
            j["lift_checks_passed"] = Json{ { "lifted", r.lift_checks_passed.lifted }, { "embedded", r.lift_checks_passed.embedded } };
            if (r.first_disagreement) {
                ++disagreements;
                j["first_disagreement"] = *r.first_disagreement;
                j["bundle"] = parse_json(r.bundle);
            }
            list.push_back(j);
        }
        Json doc;
        doc["seed"] = seed;
        doc["reports"] = reports.size();
        doc["disagreements"] = disagreements;
        doc["results"] = list;
        return doc.dump(2) + "\n";
    }
}
