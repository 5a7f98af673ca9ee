#include <isspack/solvers.hh>
#include <isspack/errors.hh>

#include "search_budget.hh"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

using std::int8_t;
using std::size_t;
using std::to_string;
using std::uint32_t;
using std::vector;

namespace isspack
{
    namespace
    {
        constexpr size_t hard_mask_limit = 30;

        auto check_universe(size_t universe, const SolveBudget & budget, const char * who) -> void
        {
            if (universe > budget.max_universe_for_dp || universe > hard_mask_limit)
                throw BudgetError(std::string(who) + ": universe of " + to_string(universe)
                        + " elements exceeds the mask table limit of " + to_string(std::min(budget.max_universe_for_dp, hard_mask_limit)));
        }

        auto to_mask(const BitSet & s) -> uint32_t
        {
            auto words = s.words();
            return words.empty() ? 0 : uint32_t(words[0]);
        }

        struct DistinctSet
        {
            uint32_t mask;
            uint32_t index;
        };

        // First occurrence of each distinct non-empty set, grouped by its
        // lowest element.
        auto group_by_lowest(const SetFamily & family) -> vector<vector<DistinctSet>>
        {
            vector<vector<DistinctSet>> groups(family.universe_size());
            std::unordered_map<uint32_t, uint32_t> first;
            for (size_t i = 0 ; i < family.size() ; ++i) {
                auto m = to_mask(family[i]);
                if (m && first.emplace(m, uint32_t(i)).second)
                    groups[std::countr_zero(m)].push_back(DistinctSet{ m, uint32_t(i) });
            }
            return groups;
        }
    }

    auto packing_dp_table(const SetFamily & family, const SolveBudget & budget) -> PackingTable
    {
        check_universe(family.universe_size(), budget, "packing dp");
        detail::SearchBudget clock(~std::uint64_t{0}, budget.time_limit, "packing dp");

        size_t universe = family.universe_size();
        size_t masks = size_t{1} << universe;
        PackingTable table;
        table.universe_size = universe;
        table.best.assign(masks, -1);
        table.pred.assign(masks, no_predecessor);
        table.best[0] = 0;

        auto groups = group_by_lowest(family);
        for (size_t mask = 1 ; mask < masks ; ++mask) {
            clock.tick();
            auto & group = groups[std::countr_zero(uint32_t(mask))];
            int8_t best = -1;
            uint32_t pred = no_predecessor;
            for (auto & s : group) {
                if (s.mask & ~uint32_t(mask))
                    continue;
                int8_t rest = table.best[mask ^ s.mask];
                if (rest >= 0 && rest + 1 > best) {
                    best = int8_t(rest + 1);
                    pred = s.index;
                }
            }
            table.best[mask] = best;
            table.pred[mask] = pred;
        }
        return table;
    }

    auto solve_set_packing_dp(const PspInstance & inst, const SolveBudget & budget) -> PackingResult
    {
        auto & family = inst.family;
        check_universe(family.universe_size(), budget, "packing dp");
        detail::SearchBudget clock(~std::uint64_t{0}, budget.time_limit, "packing dp");

        size_t universe = family.universe_size();
        size_t masks = size_t{1} << universe;
        uint32_t full = uint32_t(masks - 1);

        vector<int8_t> best(masks, -1);
        best[0] = 0;
        auto groups = group_by_lowest(family);
        for (size_t mask = 1 ; mask < masks ; ++mask) {
            clock.tick();
            int8_t value = -1;
            for (auto & s : groups[std::countr_zero(uint32_t(mask))])
                if (! (s.mask & ~uint32_t(mask)))
                    value = std::max<int8_t>(value, best[mask ^ s.mask] >= 0 ? int8_t(best[mask ^ s.mask] + 1) : int8_t(-1));
            best[mask] = value;
        }

        // within[F]: largest packing using only elements of F.
        auto & within = best;
        for (size_t mask = 0 ; mask < masks ; ++mask)
            within[mask] = std::max<int8_t>(within[mask], 0);
        for (size_t e = 0 ; e < universe ; ++e)
            for (size_t mask = 0 ; mask < masks ; ++mask)
                if (mask & (size_t{1} << e))
                    within[mask] = std::max(within[mask], within[mask ^ (size_t{1} << e)]);

        // Every maximum packing contains every empty set. The rest is built
        // greedily by index: take a set whenever some maximum packing extends
        // the current choice with it.
        vector<size_t> chosen;
        for (size_t i = 0 ; i < family.size() ; ++i)
            if (family[i].none())
                chosen.push_back(i);
        size_t empties = chosen.size();

        int remaining = within[full];
        uint32_t used = 0;
        for (size_t i = 0 ; i < family.size() && remaining > 0 ; ++i) {
            auto m = to_mask(family[i]);
            if (! m || (m & used))
                continue;
            if (1 + within[full & ~(used | m)] == remaining) {
                chosen.push_back(i);
                used |= m;
                --remaining;
            }
        }
        if (remaining != 0)
            throw InternalError("packing dp: witness reconstruction fell short by " + to_string(remaining));

        PackingResult result;
        result.max_size = empties + size_t(within[full]);
        result.witness = PackingWitness(std::move(chosen));
        return result;
    }
}
