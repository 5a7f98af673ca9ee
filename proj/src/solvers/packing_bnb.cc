#include <isspack/solvers.hh>

#include "search_budget.hh"

#include <algorithm>

using std::size_t;
using std::vector;

namespace isspack
{
    namespace
    {
        class PackingSearch
        {
            public:
                PackingSearch(const PspInstance & inst, const SolveBudget & budget) :
                    _family(inst.family),
                    _r(inst.r),
                    _budget(budget, "packing bnb")
                {
                    _sizes.reserve(_family.size());
                    for (auto & s : _family.sets())
                        _sizes.push_back(s.cardinality());
                }

                auto run() -> DecisionResult
                {
                    DecisionResult result;
                    vector<size_t> all(_family.size());
                    for (size_t i = 0 ; i < all.size() ; ++i)
                        all[i] = i;
                    result.found = search(all, BitSet(_family.universe_size()));
                    if (result.found)
                        result.witness = PackingWitness(_chosen);
                    result.nodes = _budget.nodes();
                    return result;
                }

            private:
                auto search(const vector<size_t> & candidates, const BitSet & used) -> bool
                {
                    _budget.tick();
                    if (_chosen.size() >= _r)
                        return true;
                    size_t need = _r - _chosen.size();
                    if (candidates.size() < need)
                        return false;

                    // Any `need` compatible sets occupy at least need * (smallest
                    // candidate) free elements.
                    size_t smallest = _family.universe_size();
                    for (auto c : candidates)
                        smallest = std::min(smallest, _sizes[c]);
                    if (need * smallest > _family.universe_size() - used.cardinality())
                        return false;

                    for (size_t pos = 0 ; pos < candidates.size() ; ++pos) {
                        if (candidates.size() - pos < need)
                            break;
                        auto c = candidates[pos];
                        vector<size_t> next;
                        next.reserve(candidates.size() - pos - 1);
                        for (size_t q = pos + 1 ; q < candidates.size() ; ++q)
                            if (! _family[candidates[q]].intersects(_family[c]))
                                next.push_back(candidates[q]);
                        _chosen.push_back(c);
                        if (search(next, used | _family[c]))
                            return true;
                        _chosen.pop_back();
                    }
                    return false;
                }

                const SetFamily & _family;
                size_t _r;
                detail::SearchBudget _budget;
                vector<size_t> _sizes;
                vector<size_t> _chosen;
        };
    }

    auto solve_set_packing_bnb(const PspInstance & inst, const SolveBudget & budget) -> DecisionResult
    {
        return PackingSearch(inst, budget).run();
    }
}
