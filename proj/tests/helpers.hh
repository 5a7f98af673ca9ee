#ifndef ISSPACK_TESTS_HELPERS_HH
#define ISSPACK_TESTS_HELPERS_HH

#include <isspack/core.hh>

#include "oracles.hh"

#include <vector>

namespace testing_support
{
    inline auto family_of(const std::vector<oracle::Mask> & masks, std::size_t universe) -> isspack::SetFamily
    {
        isspack::SetFamily family(universe);
        for (auto m : masks) {
            isspack::BitSet s(universe);
            for (std::size_t e = 0 ; e < universe ; ++e)
                if (m >> e & 1)
                    s.set(e);
            family.add(s);
        }
        return family;
    }

    inline auto mask_of(const isspack::BitSet & s) -> oracle::Mask
    {
        oracle::Mask m = 0;
        for (auto e : s.indices())
            m |= oracle::Mask{1} << e;
        return m;
    }

    /// Sets given as 1-based element lists, the way examples are written.
    inline auto family_1(std::size_t universe, const std::vector<std::vector<std::size_t>> & sets) -> isspack::SetFamily
    {
        isspack::SetFamily family(universe);
        for (auto & list : sets) {
            isspack::BitSet s(universe);
            for (auto e : list)
                s.set(e - 1);
            family.add(s);
        }
        return family;
    }

    inline auto witness(std::vector<std::size_t> indices) -> isspack::PackingWitness
    {
        return isspack::PackingWitness(std::move(indices));
    }

    inline auto path3() -> isspack::Graph
    {
        return isspack::Graph(3, { { 1, 2 }, { 2, 3 } });
    }

    inline auto matrix_of(const isspack::Graph & g) -> oracle::Matrix
    {
        std::vector<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
        return oracle::matrix(g.n(), edges);
    }
}

#endif
