#ifndef ISSPACK_BENCH_HH
#define ISSPACK_BENCH_HH

#include <isspack/generators.hh>
#include <isspack/solvers.hh>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace isspack
{
    struct BenchConfig
    {
        std::vector<std::size_t> universes{ 10, 11, 12, 13, 14, 15, 16, 17, 18 };
        std::vector<std::size_t> set_counts{ 64, 256, 1024 };
        std::size_t r = 3;
        double density = 0.25;
        std::uint64_t seed = default_seed;
        SolveBudget budget;
    };

    struct BenchRow
    {
        std::size_t universe = 0;
        std::size_t sets = 0;
        std::size_t r = 0;
        double dp_ms = 0.0;
        double bnb_ms = 0.0;
        bool dp_answer = false;
        bool bnb_answer = false;

        auto agree() const -> bool { return dp_answer == bnb_answer; }
    };

    /// One generated instance per grid cell, seeded from the config seed and
    /// the cell's position; both solvers answer "is there an r-packing?".
    auto bench_dichotomy(const BenchConfig & config) -> std::vector<BenchRow>;

    /// Header `universe,sets,r,dp_ms,bnb_ms,agree`, preceded by a `# seed=`
    /// comment line.
    auto bench_csv(const std::vector<BenchRow> & rows, std::uint64_t seed) -> std::string;
}

#endif
