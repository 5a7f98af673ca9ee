#include <isspack/bench.hh>

#include <chrono>
#include <cstdio>

using std::size_t;
using std::string;
using std::vector;

namespace isspack
{
    namespace
    {
        template <typename F_>
        auto time_ms(F_ && f) -> double
        {
            auto start = std::chrono::steady_clock::now();
            f();
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    }

    auto bench_dichotomy(const BenchConfig & config) -> vector<BenchRow>
    {
        vector<BenchRow> rows;
        auto budget = config.budget;
        for (auto u : config.universes)
            budget.max_universe_for_dp = std::max(budget.max_universe_for_dp, u);

        std::uint64_t cell = 0;
        for (auto u : config.universes)
            for (auto s : config.set_counts) {
                auto inst = generate_random_psp(u, s, config.density, config.seed + 0x9e3779b97f4a7c15ULL * ++cell, config.r);
                BenchRow row;
                row.universe = u;
                row.sets = s;
                row.r = config.r;
                row.dp_ms = time_ms([&] { row.dp_answer = solve_set_packing_dp(inst, budget).max_size >= config.r; });
                row.bnb_ms = time_ms([&] { row.bnb_answer = solve_set_packing_bnb(inst, budget).found; });
                rows.push_back(row);
            }
        return rows;
    }

    auto bench_csv(const vector<BenchRow> & rows, std::uint64_t seed) -> string
    {
        string out = "# seed=" + std::to_string(seed) + "\n";
        out += "universe,sets,r,dp_ms,bnb_ms,agree\n";
        for (auto & row : rows) {
            char line[160];
            std::snprintf(line, sizeof(line), "%zu,%zu,%zu,%.3f,%.3f,%d\n", row.universe, row.sets, row.r, row.dp_ms, row.bnb_ms,
                    row.agree() ? 1 : 0);
            out += line;
        }
        return out;
    }
}
