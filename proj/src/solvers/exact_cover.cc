#include <isspack/solvers.hh>
#include <isspack/errors.hh>

#include "search_budget.hh"

#include <algorithm>
#include <string>

using std::optional;
using std::size_t;
using std::to_string;
using std::uint32_t;
using std::vector;

namespace isspack
{
    auto solve_exact_cover_bfs(const XcoverInstance & inst, const SolveBudget & budget) -> optional<CoverResult>
    {
        auto & family = inst.family;
        size_t universe = family.universe_size();
        if (universe > budget.max_universe_for_dp || universe > 30)
            throw BudgetError("exact cover bfs: universe of " + to_string(universe) + " elements exceeds the mask table limit of "
                    + to_string(std::min<size_t>(budget.max_universe_for_dp, 30)));
        detail::SearchBudget clock(~std::uint64_t{0}, budget.time_limit, "exact cover bfs");

        size_t masks = size_t{1} << universe;
        uint32_t full = uint32_t(masks - 1);

        vector<uint32_t> set_masks;
        vector<size_t> set_index;
        for (size_t i = 0 ; i < family.size() ; ++i)
            if (! family[i].none()) {
                set_masks.push_back(family[i].words().empty() ? 0 : uint32_t(family[i].words()[0]));
                set_index.push_back(i);
            }

        constexpr uint32_t unseen = ~uint32_t{0};
        vector<uint32_t> parent(masks, unseen);
        parent[0] = 0;
        vector<uint32_t> frontier{ 0 }, next;

        while (! frontier.empty() && parent[full] == unseen) {
            next.clear();
            for (auto mask : frontier)
                for (size_t s = 0 ; s < set_masks.size() ; ++s) {
                    clock.tick();
                    auto m = set_masks[s];
                    if (m & mask)
                        continue;
                    auto to = mask | m;
                    if (parent[to] == unseen) {
                        parent[to] = uint32_t(s);
                        next.push_back(to);
                    }
                }
            std::swap(frontier, next);
        }

        if (universe > 0 && parent[full] == unseen)
            return std::nullopt;

        vector<size_t> chosen;
        for (uint32_t mask = full ; mask != 0 ; ) {
            auto s = parent[mask];
            chosen.push_back(set_index[s]);
            mask ^= set_masks[s];
        }
        CoverResult result;
        result.size = chosen.size();
        result.witness = PackingWitness(std::move(chosen));
        return result;
    }

    namespace
    {
        class CoverSearch
        {
            public:
                CoverSearch(const XcoverInstance & inst, const SolveBudget & budget) :
                    _family(inst.family),
                    _r(inst.r),
                    _budget(budget, "exact cover bnb"),
                    _containing(inst.family.universe_size())
                {
                    for (size_t i = 0 ; i < _family.size() ; ++i) {
                        auto & s = _family[i];
                        _largest = std::max(_largest, s.cardinality());
                        for (size_t e = s.first() ; e < s.width() ; e = s.next(e))
                            _containing[e].push_back(i);
                    }
                }

                auto run() -> DecisionResult
                {
                    DecisionResult result;
                    result.found = search(BitSet(_family.universe_size()), 0);
                    if (result.found)
                        result.witness = PackingWitness(_chosen);
                    result.nodes = _budget.nodes();
                    return result;
                }

            private:
                auto search(const BitSet & covered, size_t covered_count) -> bool
                {
                    _budget.tick();
                    size_t uncovered = _family.universe_size() - covered_count;
                    if (uncovered == 0)
                        return true;
                    if (_chosen.size() >= _r || _largest == 0)
                        return false;
                    size_t need = (uncovered + _largest - 1) / _largest;
                    if (_chosen.size() + need > _r)
                        return false;

                    size_t e = (complement(covered)).first();
                    for (auto c : _containing[e]) {
                        auto & s = _family[c];
                        if (s.intersects(covered))
                            continue;
                        _chosen.push_back(c);
                        if (search(covered | s, covered_count + s.cardinality()))
                            return true;
                        _chosen.pop_back();
                    }
                    return false;
                }

                const SetFamily & _family;
                size_t _r;
                detail::SearchBudget _budget;
                vector<vector<size_t>> _containing;
                size_t _largest = 0;
                vector<size_t> _chosen;
        };
    }

    auto solve_exact_cover_bnb(const XcoverInstance & inst, const SolveBudget & budget) -> DecisionResult
    {
        return CoverSearch(inst, budget).run();
    }
}
