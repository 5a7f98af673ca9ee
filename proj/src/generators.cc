#include <isspack/generators.hh>
#include <isspack/errors.hh>

#include <random>

using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace isspack
{
    namespace
    {
        // The standard distributions are allowed to differ between library
        // implementations; this one is fixed.
        auto uniform(std::mt19937_64 & rng) -> double
        {
            return double(rng() >> 11) * 0x1.0p-53;
        }

        auto check_probability(double p, const char * what) -> void
        {
            if (! (p > 0.0 && p < 1.0))
                throw ArgumentError(string(what) + " must lie strictly between 0 and 1");
        }
    }

    auto generate_random_psp(size_t universe_size, size_t set_count, double density, uint64_t seed, size_t r) -> PspInstance
    {
        check_probability(density, "density");
        std::mt19937_64 rng(seed);
        SetFamily family(universe_size);
        for (size_t s = 0 ; s < set_count ; ++s) {
            BitSet set(universe_size);
            for (size_t e = 0 ; e < universe_size ; ++e)
                if (uniform(rng) < density)
                    set.set(e);
            family.add(std::move(set));
        }
        return PspInstance{ std::move(family), r };
    }

    auto generate_random_graph(int n, double p, uint64_t seed) -> Graph
    {
        check_probability(p, "edge probability");
        if (n < 0)
            throw ArgumentError("negative vertex count");
        std::mt19937_64 rng(seed);
        Graph g(n);
        for (Vertex u = 1 ; u <= n ; ++u)
            for (Vertex v = u + 1 ; v <= n ; ++v)
                if (uniform(rng) < p)
                    g.add_edge(u, v);
        return g;
    }

    auto graph_from_edge_mask(int n, uint64_t mask) -> Graph
    {
        if (n < 0 || n * (n - 1) / 2 > 63)
            throw RangeError("edge masks cover at most 63 vertex pairs");
        Graph g(n);
        int bit = 0;
        for (Vertex u = 1 ; u <= n ; ++u)
            for (Vertex v = u + 1 ; v <= n ; ++v, ++bit)
                if (mask >> bit & 1)
                    g.add_edge(u, v);
        if (bit < 64 && (mask >> bit) != 0)
            throw RangeError("edge mask has bits beyond the vertex pairs");
        return g;
    }

    auto pattern_names() -> const vector<string> &
    {
        static const vector<string> names{ "edge", "p3", "k3", "c4", "paw" };
        return names;
    }

    auto pattern_by_name(const string & name) -> Graph
    {
        if (name == "edge")
            return Graph(2, { { 1, 2 } });
        if (name == "p3")
            return Graph(3, { { 1, 2 }, { 2, 3 } });
        if (name == "k3")
            return Graph(3, { { 1, 2 }, { 1, 3 }, { 2, 3 } });
        if (name == "c4")
            return Graph(4, { { 1, 2 }, { 2, 3 }, { 3, 4 }, { 1, 4 } });
        if (name == "paw")
            return Graph(4, { { 1, 2 }, { 1, 3 }, { 2, 3 }, { 3, 4 } });
        throw ArgumentError("unknown pattern '" + name + "'");
    }
}
