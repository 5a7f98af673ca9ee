#include <isspack/core.hh>
#include <isspack/errors.hh>

#include <algorithm>
#include <string>

using std::pair;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace isspack
{
    SetFamily::SetFamily(size_t universe_size) :
        _universe_size(universe_size)
    {
    }

    SetFamily::SetFamily(size_t universe_size, vector<BitSet> sets, vector<SetLabel> labels) :
        _universe_size(universe_size),
        _sets(std::move(sets)),
        _labels(std::move(labels))
    {
        for (size_t i = 0 ; i < _sets.size() ; ++i)
            if (_sets[i].width() != _universe_size)
                throw ArgumentError("set " + to_string(i) + " has width " + to_string(_sets[i].width())
                        + " but the universe has " + to_string(_universe_size) + " elements");
        if (! _labels.empty() && _labels.size() != _sets.size())
            throw ArgumentError("got " + to_string(_labels.size()) + " labels for " + to_string(_sets.size()) + " sets");
    }

    auto SetFamily::add(BitSet s) -> size_t
    {
        if (! _labels.empty())
            throw ArgumentError("labelled family needs a label for every set");
        if (s.width() != _universe_size)
            throw ArgumentError("set width " + to_string(s.width()) + " does not match universe " + to_string(_universe_size));
        _sets.push_back(std::move(s));
        return _sets.size() - 1;
    }

    auto SetFamily::add(BitSet s, SetLabel label) -> size_t
    {
        if (_labels.size() != _sets.size())
            throw ArgumentError("cannot add a labelled set to an unlabelled family");
        if (s.width() != _universe_size)
            throw ArgumentError("set width " + to_string(s.width()) + " does not match universe " + to_string(_universe_size));
        _sets.push_back(std::move(s));
        _labels.push_back(label);
        return _sets.size() - 1;
    }

    auto SetFamily::label(size_t i) const -> const SetLabel &
    {
        if (i >= _labels.size())
            throw RangeError("no label for set " + to_string(i));
        return _labels[i];
    }

    Graph::Graph(int n) :
        _n(n),
        _adj(n > 0 ? n : 0),
        _matrix(n > 0 ? size_t(n) * size_t(n) : 0, false)
    {
        if (n < 0)
            throw ArgumentError("negative vertex count");
    }

    Graph::Graph(int n, const vector<pair<Vertex, Vertex>> & edges) :
        Graph(n)
    {
        for (auto & [u, v] : edges)
            add_edge(u, v);
    }

    auto Graph::check_vertex(Vertex v) const -> void
    {
        if (v < 1 || v > _n)
            throw RangeError("vertex " + to_string(v) + " outside 1.." + to_string(_n));
    }

    auto Graph::add_edge(Vertex u, Vertex v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw ArgumentError("self-loop at vertex " + to_string(u));
        if (adjacent(u, v))
            throw ArgumentError("duplicate edge " + to_string(u) + "-" + to_string(v));
        _edges.emplace_back(std::min(u, v), std::max(u, v));
        _matrix[size_t(u - 1) * _n + (v - 1)] = true;
        _matrix[size_t(v - 1) * _n + (u - 1)] = true;
        auto insert_sorted = [] (vector<Vertex> & list, Vertex x) {
            list.insert(std::lower_bound(list.begin(), list.end(), x), x);
        };
        insert_sorted(_adj[u - 1], v);
        insert_sorted(_adj[v - 1], u);
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        check_vertex(u);
        check_vertex(v);
        return _matrix[size_t(u - 1) * _n + (v - 1)];
    }

    auto Graph::neighbours(Vertex v) const -> const vector<Vertex> &
    {
        check_vertex(v);
        return _adj[v - 1];
    }

    auto Graph::degree(Vertex v) const -> int
    {
        return int(neighbours(v).size());
    }

    SubIsoInstance::SubIsoInstance(Graph g, Graph h) :
        _g(std::move(g)),
        _h(std::move(h))
    {
        if (_h.edge_count() == 0)
            throw ArgumentError("pattern graph needs at least one edge");
        for (Vertex v = 1 ; v <= _h.n() ; ++v)
            if (_h.degree(v) == 0)
                throw ArgumentError("pattern vertex " + to_string(v) + " is isolated");
    }

    PackingWitness::PackingWitness(vector<size_t> indices) :
        _indices(std::move(indices))
    {
        std::sort(_indices.begin(), _indices.end());
        if (std::adjacent_find(_indices.begin(), _indices.end()) != _indices.end())
            throw ArgumentError("witness repeats a set index");
    }

    auto Isomorphism::is_injective() const -> bool
    {
        auto sorted = _map;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    namespace
    {
        auto check_indices(const SetFamily & family, const PackingWitness & w) -> void
        {
            for (auto i : w.indices())
                if (i >= family.size())
                    throw RangeError("witness index " + to_string(i) + " outside family of " + to_string(family.size()) + " sets");
        }

        auto disjoint_union(const SetFamily & family, const PackingWitness & w) -> std::optional<BitSet>
        {
            BitSet seen(family.universe_size());
            for (auto i : w.indices()) {
                if (seen.intersects(family[i]))
                    return std::nullopt;
                seen |= family[i];
            }
            return seen;
        }
    }

    auto is_packing(const SetFamily & family, const PackingWitness & w) -> bool
    {
        check_indices(family, w);
        return disjoint_union(family, w).has_value();
    }

    auto is_exact_cover(const SetFamily & family, const PackingWitness & w) -> bool
    {
        check_indices(family, w);
        auto covered = disjoint_union(family, w);
        return covered && covered->all();
    }

    auto is_injective_homomorphism(const SubIsoInstance & inst, const Isomorphism & phi) -> bool
    {
        if (phi.size() != size_t(inst.h().n()))
            throw ArgumentError("map has " + to_string(phi.size()) + " entries but the pattern has "
                    + to_string(inst.h().n()) + " vertices");
        for (auto v : phi.map())
            if (v < 1 || v > inst.g().n())
                return false;
        if (! phi.is_injective())
            return false;
        for (auto & [a, b] : inst.h().edges())
            if (! inst.g().adjacent(phi(a), phi(b)))
                return false;
        return true;
    }
}
