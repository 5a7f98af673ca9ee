#ifndef ISSPACK_VERIFY_HH
#define ISSPACK_VERIFY_HH

#include <isspack/core.hh>
#include <isspack/reduction.hh>
#include <isspack/solvers.hh>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace isspack
{
    /// Sizes of one constructed instance, as built.
    struct InstanceStats
    {
        std::uint64_t ordering = 0;
        std::size_t n_elems = 0;
        std::size_t universe_size = 0;
        std::size_t r = 0;
        std::size_t v_sets = 0;
        std::size_t e_sets = 0;
        std::size_t set_count = 0;
        std::size_t dim = 0;
        bool target_all_ones = false;
    };

    /// Answers for one ordering.
    struct OrderingOutcome
    {
        std::uint64_t ordering = 0;
        bool psp = false;
        bool xcover = false;
        bool vecsum = false;
    };

    struct LiftCounts
    {
        /// Solver witnesses lifted to a verified injective homomorphism.
        std::size_t lifted = 0;
        /// Brute-force maps embedded to a verified packing and exact cover.
        std::size_t embedded = 0;
    };

    struct EquivalenceReport
    {
        Graph g;
        Graph h;
        GadgetMode mode = GadgetMode::Tight;
        /// Edge mask of g when it came from an exhaustive sweep.
        std::optional<std::uint64_t> graph_index;
        bool subiso_answer = false;
        bool psp_answer = false;
        bool xcover_answer = false;
        bool vecsum_answer = false;
        std::uint64_t orderings_total = 0;
        std::vector<OrderingOutcome> orderings;
        std::vector<InstanceStats> instances;
        LiftCounts lift_checks_passed;
        std::optional<std::string> first_disagreement;
        /// Self-contained JSON reproduction bundle, set on disagreement.
        std::string bundle;

        auto agreed() const -> bool { return ! first_disagreement.has_value(); }
    };

    struct VerifyOptions
    {
        GadgetMode mode = GadgetMode::Tight;
        SolveBudget budget;
        /// Process every ordering rather than stopping at the first yes.
        bool full = false;
    };

    /// Runs every check and records the first disagreement instead of
    /// throwing.
    auto run_equivalence(const SubIsoInstance & inst, const VerifyOptions & options) -> EquivalenceReport;

    /// As run_equivalence, but a disagreement raises EquivalenceFailure
    /// carrying the reproduction bundle.
    auto verify_equivalence(const SubIsoInstance & inst, const VerifyOptions & options) -> EquivalenceReport;

    inline constexpr int max_sweep_vertices = 5;

    /// Every labelled graph on n vertices, in increasing edge-mask order.
    /// Graphs with fewer vertices than the pattern are reported as all-no
    /// without building anything.
    auto sweep_exhaustive(int n, const Graph & h, const VerifyOptions & options, unsigned jobs = 1) -> std::vector<EquivalenceReport>;

    /// Checks that adding an edge never turns a yes into a no, using the
    /// packing answers of a complete sweep. Returns the first violation.
    auto check_monotone(const std::vector<EquivalenceReport> & sweep) -> std::optional<std::string>;

    struct CompactnessRecord
    {
        int n = 0;
        std::size_t m = 0;
        std::size_t k = 0;
        int l = 0;
        std::size_t n_elems = 0;
        std::size_t r = 0;
        std::size_t universe_size = 0;
        std::size_t set_count = 0;
        double ratio = 0.0;
    };

    /// Builds the instance for the complete host graph on each n with the
    /// pattern's identity ordering.
    auto compactness_sweep(const std::vector<int> & n_values, const Graph & h, GadgetMode mode) -> std::vector<CompactnessRecord>;
    auto compactness_of(const ReducedPspInstance & red) -> CompactnessRecord;

    /// Deterministic parallel map: results come back in index order whatever
    /// the worker count. The first exception, by index, is rethrown.
    auto parallel_for(std::size_t count, unsigned jobs, const std::function<void (std::size_t)> & body) -> void;

    auto report_to_json_text(const std::vector<EquivalenceReport> & reports, std::uint64_t seed) -> std::string;
}

#endif
