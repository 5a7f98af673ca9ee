#ifndef ISSPACK_GENERATORS_HH
#define ISSPACK_GENERATORS_HH

#include <isspack/core.hh>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace isspack
{
    inline constexpr std::uint64_t default_seed = 20240501;

    /// Each element lands in each set independently with probability
    /// density. Output depends only on the arguments.
    auto generate_random_psp(std::size_t universe_size, std::size_t set_count, double density, std::uint64_t seed,
            std::size_t r = 1) -> PspInstance;

    /// G(n, p): each pair u < v, in lexicographic order, is an edge with
    /// probability p.
    auto generate_random_graph(int n, double p, std::uint64_t seed) -> Graph;

    /// The graph on n vertices whose edges are the set bits of mask, bit b
    /// standing for the b-th pair (u, v), u < v, in lexicographic order.
    auto graph_from_edge_mask(int n, std::uint64_t mask) -> Graph;

    /// edge, p3, k3, c4, paw.
    auto pattern_names() -> const std::vector<std::string> &;
    auto pattern_by_name(const std::string & name) -> Graph;
}

#endif
