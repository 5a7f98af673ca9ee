#ifndef ISSPACK_ISS_HH
#define ISSPACK_ISS_HH

#include <isspack/bitset.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isspack
{
    /// A compatible pair of intersecting set systems over {0, ..., n_elems-1}.
    /// The bijection between the two systems is positional: s_b[i] is the
    /// partner (and complement) of s_a[i].
    struct IssPair
    {
        std::size_t n_elems = 0;
        std::size_t m_sets = 0;
        std::vector<BitSet> s_a;
        std::vector<BitSet> s_b;
    };

    inline constexpr std::size_t default_iss_cap = 32;

    /// C(n, n/2) / 2, the number of complement pairs of half-size subsets.
    auto complement_pair_count(std::size_t n_elems) -> std::uint64_t;

    /// Greedy construction: walk the half-size subsets of the universe in
    /// lexicographic order of their element lists; every subset not yet
    /// marked goes into s_a, its complement into s_b, and both are marked.
    auto build_compatible_iss(std::size_t n_elems, std::size_t cap = default_iss_cap) -> IssPair;

    /// True iff every two distinct sets share an element.
    auto is_intersecting_family(std::span<const BitSet> sets) -> bool;

    struct PropertyCheck
    {
        std::string name;
        bool passed = true;
        std::optional<std::size_t> first_counterexample;
    };

    struct ValidationReport
    {
        std::vector<PropertyCheck> checks;

        auto all_passed() const -> bool;
        auto find(const std::string & name) const -> const PropertyCheck &;
    };

    /// Checks, in order: "a_is_iss", "b_is_iss", "complement_disjointness"
    /// and "complement_exchange" (both the s_a-side and s_b-side swaps).
    auto check_compatible_pair(const IssPair & pair) -> ValidationReport;
}

#endif
