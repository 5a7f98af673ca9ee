#ifndef ISSPACK_SOLVERS_HH
#define ISSPACK_SOLVERS_HH

#include <isspack/core.hh>
#include <isspack/vector_sum.hh>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace isspack
{
    /// Per-call limits. Solvers throw BudgetError instead of exceeding them.
    struct SolveBudget
    {
        std::size_t max_universe_for_dp = 25;
        std::uint64_t max_subsets_enumerated = 200'000'000;
        std::optional<std::chrono::milliseconds> time_limit;
        std::size_t max_vecsum_r = 8;
        int max_subiso_pattern = 8;
        int max_subiso_host = 12;
    };

    struct PackingResult
    {
        std::size_t max_size = 0;
        PackingWitness witness;
    };

    struct DecisionResult
    {
        bool found = false;
        PackingWitness witness;
        std::uint64_t nodes = 0;
    };

    struct CoverResult
    {
        std::size_t size = 0;
        PackingWitness witness;
    };

    /// best[mask] is the largest number of pairwise disjoint non-empty sets
    /// whose union is exactly mask (-1 when no such packing exists);
    /// pred[mask] is the index of the last set added on one optimal path.
    struct PackingTable
    {
        std::size_t universe_size = 0;
        std::vector<std::int8_t> best;
        std::vector<std::uint32_t> pred;
    };

    inline constexpr std::uint32_t no_predecessor = ~std::uint32_t{0};

    /// The longest-path table over the subset lattice. Empty sets never
    /// contribute an edge.
    auto packing_dp_table(const SetFamily & family, const SolveBudget & budget = {}) -> PackingTable;

    /// Maximum packing via the subset-mask table. Among maximum packings the
    /// lexicographically smallest index list is returned.
    auto solve_set_packing_dp(const PspInstance & inst, const SolveBudget & budget = {}) -> PackingResult;

    /// Is there a packing of at least inst.r sets? Depth-first over sets in
    /// index order with a shrinking list of compatible candidates.
    auto solve_set_packing_bnb(const PspInstance & inst, const SolveBudget & budget = {}) -> DecisionResult;

    /// Minimum-cardinality exact cover by breadth-first search from the empty
    /// mask to the full mask.
    auto solve_exact_cover_bfs(const XcoverInstance & inst, const SolveBudget & budget = {}) -> std::optional<CoverResult>;

    /// Is there an exact cover using at most inst.r sets? Branches on the
    /// lowest uncovered element.
    auto solve_exact_cover_bnb(const XcoverInstance & inst, const SolveBudget & budget = {}) -> DecisionResult;

    /// Is there a set of at most r vectors summing to the target over GF(2)?
    /// Tries cardinalities 0, 1, ..., r in turn, so a found witness is of
    /// minimum size.
    auto solve_vector_sum(const VectorSumInstance & inst, const SolveBudget & budget = {}) -> DecisionResult;

    /// First injective homomorphism in lexicographic order of the image list.
    auto solve_subiso_bruteforce(const SubIsoInstance & inst, const SolveBudget & budget = {}) -> std::optional<Isomorphism>;
}

#endif
