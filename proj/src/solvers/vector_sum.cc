#include <isspack/solvers.hh>
#include <isspack/errors.hh>

#include "search_budget.hh"

#include <algorithm>
#include <string>

using std::size_t;
using std::to_string;
using std::vector;

namespace isspack
{
    namespace
    {
        // Branching: pick a coordinate t where the residual is 1. Whatever is
        // still to be chosen contains an odd number of vectors with bit t, so
        // it has a smallest such vector; branch on which one that is, and
        // drop the smaller candidates from the sibling branches.
        class VectorSumSearch
        {
            public:
                VectorSumSearch(const VectorSumInstance & inst, const SolveBudget & budget) :
                    _inst(inst),
                    _budget(budget, "vector sum"),
                    _columns(inst.dim(), BitSet(inst.vectors().size()))
                {
                    auto & vectors = inst.vectors();
                    for (size_t i = 0 ; i < vectors.size() ; ++i) {
                        _max_weight = std::max(_max_weight, vectors[i].cardinality());
                        for (size_t t = vectors[i].first() ; t < inst.dim() ; t = vectors[i].next(t))
                            _columns[t].set(i);
                    }
                    for (auto & block : inst.indicator_blocks()) {
                        size_t w = 0;
                        for (auto & v : vectors)
                            w = std::max(w, restrict(v, block).cardinality());
                        _block_weights.push_back(w);
                    }
                }

                auto run() -> DecisionResult
                {
                    DecisionResult result;
                    BitSet available = BitSet::full(_inst.vectors().size());
                    for (size_t limit = 0 ; limit <= _inst.r() && ! result.found ; ++limit)
                        result.found = search(_inst.target(), available, limit);
                    if (result.found)
                        result.witness = PackingWitness(_chosen);
                    result.nodes = _budget.nodes();
                    return result;
                }

            private:
                static auto ceil_div(size_t a, size_t b) -> size_t { return (a + b - 1) / b; }

                auto lower_bound(const BitSet & residual) const -> size_t
                {
                    constexpr size_t impossible = ~size_t{0} / 2;
                    size_t weight = residual.cardinality();
                    if (weight == 0)
                        return 0;
                    if (_max_weight == 0)
                        return impossible;
                    size_t bound = ceil_div(weight, _max_weight);

                    // No vector touches two blocks, so per-block needs add up.
                    size_t blocks = 0;
                    auto & list = _inst.indicator_blocks();
                    for (size_t b = 0 ; b < list.size() ; ++b) {
                        size_t here = restrict(residual, list[b]).cardinality();
                        if (here == 0)
                            continue;
                        if (_block_weights[b] == 0)
                            return impossible;
                        blocks += ceil_div(here, _block_weights[b]);
                    }
                    return std::max(bound, blocks);
                }

                auto search(const BitSet & residual, const BitSet & available, size_t picks_left) -> bool
                {
                    _budget.tick();
                    if (residual.none())
                        return true;
                    if (picks_left == 0 || lower_bound(residual) > picks_left)
                        return false;

                    size_t pivot = _inst.dim(), fewest = ~size_t{0};
                    for (size_t t = residual.first() ; t < _inst.dim() ; t = residual.next(t)) {
                        size_t count = (available & _columns[t]).cardinality();
                        if (count < fewest) {
                            fewest = count;
                            pivot = t;
                            if (count == 0)
                                return false;
                        }
                    }

                    BitSet remaining = available;
                    auto candidates = (available & _columns[pivot]).indices();
                    for (auto c : candidates) {
                        remaining.reset(c);
                        _chosen.push_back(c);
                        if (search(residual ^ _inst.vectors()[c], remaining, picks_left - 1))
                            return true;
                        _chosen.pop_back();
                    }
                    return false;
                }

                const VectorSumInstance & _inst;
                detail::SearchBudget _budget;
                vector<BitSet> _columns;
                size_t _max_weight = 0;
                vector<size_t> _block_weights;
                vector<size_t> _chosen;
        };
    }

    auto solve_vector_sum(const VectorSumInstance & inst, const SolveBudget & budget) -> DecisionResult
    {
        if (inst.r() > budget.max_vecsum_r)
            throw BudgetError("vector sum: r = " + to_string(inst.r()) + " exceeds the enumerator cap of " + to_string(budget.max_vecsum_r));
        return VectorSumSearch(inst, budget).run();
    }
}
