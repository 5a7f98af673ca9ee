#include <doctest.h>

#include <isspack/errors.hh>
#include <isspack/iss.hh>

#include "helpers.hh"

using namespace isspack;
using namespace testing_support;

namespace
{
    auto sets_1(std::size_t n, const std::vector<std::vector<std::size_t>> & lists) -> std::vector<BitSet>
    {
        return family_1(n, lists).sets();
    }
}

TEST_CASE("small gadgets")
{
    auto p2 = build_compatible_iss(2);
    CHECK(p2.m_sets == 1);
    CHECK(p2.s_a == sets_1(2, { { 1 } }));
    CHECK(p2.s_b == sets_1(2, { { 2 } }));

    auto p4 = build_compatible_iss(4);
    CHECK(p4.m_sets == 3);
    CHECK(p4.s_a == sets_1(4, { { 1, 2 }, { 1, 3 }, { 1, 4 } }));
    CHECK(p4.s_b == sets_1(4, { { 3, 4 }, { 2, 4 }, { 2, 3 } }));

    auto p6 = build_compatible_iss(6);
    CHECK(p6.m_sets == 10);
    CHECK(p6.m_sets >= 4);
}

TEST_CASE("greedy agrees with the mark-table oracle")
{
    for (int n = 2 ; n <= 14 ; n += 2) {
        CAPTURE(n);
        auto pair = build_compatible_iss(n);
        auto expected = oracle::marked_greedy_iss(n);
        REQUIRE(pair.s_a.size() == expected.a.size());
        for (std::size_t i = 0 ; i < pair.s_a.size() ; ++i) {
            CHECK(mask_of(pair.s_a[i]) == expected.a[i]);
            CHECK(mask_of(pair.s_b[i]) == expected.b[i]);
        }
        CHECK(complement_pair_count(n) == oracle::binomial(n, n / 2) / 2);
    }
}

TEST_CASE("gadget size preconditions")
{
    CHECK_THROWS_AS(build_compatible_iss(0), ArgumentError);
    CHECK_THROWS_AS(build_compatible_iss(5), ArgumentError);
    CHECK_THROWS_AS(build_compatible_iss(34), ArgumentError);
    CHECK_THROWS_AS(build_compatible_iss(12, 10), ArgumentError);
}

TEST_CASE("intersecting families")
{
    auto a = sets_1(4, { { 1, 2 }, { 1, 3 }, { 1, 4 } });
    CHECK(is_intersecting_family(a));
    CHECK_FALSE(is_intersecting_family(sets_1(2, { { 1 }, { 2 } })));
    CHECK(is_intersecting_family(build_compatible_iss(6).s_a));
    CHECK(is_intersecting_family(std::vector<BitSet>{}));
    std::vector<BitSet> mixed{ BitSet(3), BitSet(4) };
    CHECK_THROWS_AS(is_intersecting_family(mixed), ArgumentError);
}

TEST_CASE("pair validation")
{
    auto report = check_compatible_pair(build_compatible_iss(8));
    CHECK(report.all_passed());
    CHECK(report.checks.size() == 4);

    auto broken = build_compatible_iss(8);
    broken.s_b[0] = broken.s_a[0];
    auto bad = check_compatible_pair(broken);
    CHECK_FALSE(bad.all_passed());
    CHECK_FALSE(bad.find("complement_disjointness").passed);
    CHECK(bad.find("complement_disjointness").first_counterexample == std::size_t{0});

    IssPair opposed;
    opposed.n_elems = 4;
    opposed.m_sets = 2;
    opposed.s_a = sets_1(4, { { 1, 2 }, { 3, 4 } });
    opposed.s_b = sets_1(4, { { 3, 4 }, { 1, 2 } });
    auto r = check_compatible_pair(opposed);
    CHECK_FALSE(r.find("a_is_iss").passed);
    CHECK_THROWS_AS(r.find("nope"), ArgumentError);
}
