#ifndef ISSPACK_SOLVERS_SEARCH_BUDGET_HH
#define ISSPACK_SOLVERS_SEARCH_BUDGET_HH

#include <isspack/errors.hh>
#include <isspack/solvers.hh>

#include <chrono>
#include <cstdint>
#include <string>

namespace isspack::detail
{
    /// Node counter with an optional wall-clock deadline, polled every 1024
    /// expansions.
    class SearchBudget
    {
        public:
            SearchBudget(const SolveBudget & budget, const char * solver) :
                SearchBudget(budget.max_subsets_enumerated, budget.time_limit, solver)
            {
            }

            SearchBudget(std::uint64_t max_nodes, std::optional<std::chrono::milliseconds> limit, const char * solver) :
                _max_nodes(max_nodes),
                _limit(limit),
                _start(std::chrono::steady_clock::now()),
                _solver(solver)
            {
            }

            auto tick() -> void
            {
                if (++_nodes > _max_nodes)
                    throw BudgetError(std::string(_solver) + ": node budget of " + std::to_string(_max_nodes)
                            + " exhausted", _nodes);
                if (_limit && (_nodes & 1023) == 0 && std::chrono::steady_clock::now() - _start > *_limit)
                    throw BudgetError(std::string(_solver) + ": time limit of " + std::to_string(_limit->count())
                            + " ms exceeded after " + std::to_string(_nodes) + " nodes", _nodes);
            }

            auto nodes() const -> std::uint64_t { return _nodes; }

        private:
            std::uint64_t _nodes = 0;
            std::uint64_t _max_nodes;
            std::optional<std::chrono::milliseconds> _limit;
            std::chrono::steady_clock::time_point _start;
            const char * _solver;
    };
}

#endif
