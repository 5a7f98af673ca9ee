#include <isspack/iss.hh>
#include <isspack/errors.hh>

#include <numeric>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace isspack
{
    namespace
    {
        auto to_bitset(uint64_t mask, size_t width) -> BitSet
        {
            BitSet result(width);
            for (size_t e = 0 ; e < width ; ++e)
                if ((mask >> e) & 1)
                    result.set(e);
            return result;
        }

        // Same order as BitSet::lex_less.
        auto mask_lex_less(uint64_t a, uint64_t b) -> bool
        {
            uint64_t diff = a ^ b;
            if (! diff)
                return false;
            return (a & (diff & -diff)) != 0;
        }

        // First index i for which some j != i makes sets[i], sets[j] disjoint.
        auto first_non_intersecting(span<const BitSet> sets) -> optional<size_t>
        {
            for (size_t i = 0 ; i < sets.size() ; ++i)
                for (size_t j = i + 1 ; j < sets.size() ; ++j)
                    if (! sets[i].intersects(sets[j]))
                        return i;
            return std::nullopt;
        }

        // First i for which swapping swap_in[i] into `base` breaks the
        // intersecting property, i.e. swap_in[i] misses some base[j], j != i.
        auto first_failed_exchange(span<const BitSet> base, span<const BitSet> swap_in) -> optional<size_t>
        {
            for (size_t i = 0 ; i < base.size() ; ++i)
                for (size_t j = 0 ; j < base.size() ; ++j)
                    if (j != i && ! swap_in[i].intersects(base[j]))
                        return i;
            return std::nullopt;
        }
    }

    auto complement_pair_count(size_t n_elems) -> uint64_t
    {
        if (n_elems == 0 || n_elems % 2 || n_elems > 62)
            throw ArgumentError("complement pairs need an even universe size in [2, 62], got " + to_string(n_elems));
        unsigned __int128 c = 1;
        for (uint64_t i = 1 ; i <= n_elems / 2 ; ++i)
            c = c * (n_elems / 2 + i) / i;
        return uint64_t(c / 2);
    }

    auto build_compatible_iss(size_t n_elems, size_t cap) -> IssPair
    {
        if (n_elems < 2 || n_elems % 2)
            throw ArgumentError("gadget universe size must be even and at least 2, got " + to_string(n_elems));
        if (n_elems > cap || n_elems > 62)
            throw ArgumentError("gadget universe size " + to_string(n_elems) + " exceeds the cap of " + to_string(cap));

        IssPair pair;
        pair.n_elems = n_elems;
        size_t half = n_elems / 2;
        uint64_t full = (n_elems == 64) ? ~uint64_t{0} : ((uint64_t{1} << n_elems) - 1);

        // A subset is marked exactly when its complement came earlier in the
        // walk: the complement was then either taken (marking both) or itself
        // marked by its own complement, which is this subset and comes later.
        // So the mark table reduces to one order comparison.
        vector<size_t> pick(half);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            uint64_t mask = 0;
            for (auto e : pick)
                mask |= uint64_t{1} << e;
            uint64_t other = full & ~mask;
            if (! mask_lex_less(other, mask)) {
                pair.s_a.push_back(to_bitset(mask, n_elems));
                pair.s_b.push_back(to_bitset(other, n_elems));
            }

            size_t k = half;
            while (k > 0 && pick[k - 1] == n_elems - half + k - 1)
                --k;
            if (k == 0)
                break;
            ++pick[k - 1];
            for (size_t t = k ; t < half ; ++t)
                pick[t] = pick[t - 1] + 1;
        }

        pair.m_sets = pair.s_a.size();
        if (pair.m_sets != complement_pair_count(n_elems))
            throw InternalError("greedy gadget produced " + to_string(pair.m_sets) + " sets, expected "
                    + to_string(complement_pair_count(n_elems)));
        return pair;
    }

    auto is_intersecting_family(span<const BitSet> sets) -> bool
    {
        for (size_t i = 1 ; i < sets.size() ; ++i)
            if (sets[i].width() != sets[0].width())
                throw ArgumentError("family mixes widths " + to_string(sets[0].width()) + " and " + to_string(sets[i].width()));
        return ! first_non_intersecting(sets).has_value();
    }

    auto ValidationReport::all_passed() const -> bool
    {
        for (auto & c : checks)
            if (! c.passed)
                return false;
        return true;
    }

    auto ValidationReport::find(const string & name) const -> const PropertyCheck &
    {
        for (auto & c : checks)
            if (c.name == name)
                return c;
        throw ArgumentError("no check named " + name);
    }

    auto check_compatible_pair(const IssPair & pair) -> ValidationReport
    {
        ValidationReport report;
        auto record = [&] (string name, optional<size_t> where) {
            report.checks.push_back(PropertyCheck{ std::move(name), ! where.has_value(), where });
        };

        if (pair.s_a.size() != pair.s_b.size())
            throw ArgumentError("pair sides differ in size: " + to_string(pair.s_a.size()) + " vs " + to_string(pair.s_b.size()));

        record("a_is_iss", first_non_intersecting(pair.s_a));
        record("b_is_iss", first_non_intersecting(pair.s_b));

        optional<size_t> overlap;
        for (size_t i = 0 ; i < pair.s_a.size() && ! overlap ; ++i)
            if (pair.s_a[i].intersects(pair.s_b[i]))
                overlap = i;
        record("complement_disjointness", overlap);

        auto exchange_a = first_failed_exchange(pair.s_a, pair.s_b);
        auto exchange_b = first_failed_exchange(pair.s_b, pair.s_a);
        optional<size_t> exchange = exchange_a;
        if (exchange_b && (! exchange || *exchange_b < *exchange))
            exchange = exchange_b;
        record("complement_exchange", exchange);

        return report;
    }
}
