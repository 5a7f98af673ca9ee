#ifndef ISSPACK_CORE_HH
#define ISSPACK_CORE_HH

#include <isspack/bitset.hh>

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace isspack
{
    /// Graph vertices are numbered 1..n.
    using Vertex = int;

    /// Provenance of a vertex set: G-vertex alpha plays the pattern vertex at
    /// position i, and the chain continues with G-vertex beta at the next
    /// position (cyclically).
    struct VSetLabel
    {
        Vertex alpha = 0;
        int i = 0;
        Vertex beta = 0;

        auto operator== (const VSetLabel &) const -> bool = default;
    };

    /// Provenance of an edge set: oriented G-edge (alpha, beta) plays the
    /// pattern edge between positions i < j.
    struct ESetLabel
    {
        Vertex alpha = 0;
        Vertex beta = 0;
        int i = 0;
        int j = 0;

        auto operator== (const ESetLabel &) const -> bool = default;
    };

    using SetLabel = std::variant<VSetLabel, ESetLabel>;

    /// A universe {0, ..., universe_size-1} and an ordered list of subsets,
    /// optionally tagged with provenance labels (either none or one per set).
    class SetFamily
    {
        public:
            SetFamily() = default;
            explicit SetFamily(std::size_t universe_size);
            SetFamily(std::size_t universe_size, std::vector<BitSet> sets, std::vector<SetLabel> labels = {});

            auto add(BitSet s) -> std::size_t;
            auto add(BitSet s, SetLabel label) -> std::size_t;

            auto universe_size() const -> std::size_t { return _universe_size; }
            auto size() const -> std::size_t { return _sets.size(); }
            auto sets() const -> const std::vector<BitSet> & { return _sets; }
            auto operator[] (std::size_t i) const -> const BitSet & { return _sets.at(i); }
            auto has_labels() const -> bool { return ! _labels.empty(); }
            auto labels() const -> const std::vector<SetLabel> & { return _labels; }
            auto label(std::size_t i) const -> const SetLabel &;

            auto operator== (const SetFamily &) const -> bool = default;

        private:
            std::size_t _universe_size = 0;
            std::vector<BitSet> _sets;
            std::vector<SetLabel> _labels;
    };

    /// Simple undirected graph on vertices 1..n.
    class Graph
    {
        public:
            Graph() = default;
            explicit Graph(int n);
            Graph(int n, const std::vector<std::pair<Vertex, Vertex>> & edges);

            auto add_edge(Vertex u, Vertex v) -> void;

            auto n() const -> int { return _n; }
            auto edge_count() const -> std::size_t { return _edges.size(); }
            /// Edges in insertion order, each stored with the smaller endpoint first.
            auto edges() const -> const std::vector<std::pair<Vertex, Vertex>> & { return _edges; }
            auto adjacent(Vertex u, Vertex v) const -> bool;
            /// Neighbours in ascending order.
            auto neighbours(Vertex v) const -> const std::vector<Vertex> &;
            auto degree(Vertex v) const -> int;

            auto operator== (const Graph &) const -> bool = default;

        private:
            auto check_vertex(Vertex v) const -> void;

            int _n = 0;
            std::vector<std::pair<Vertex, Vertex>> _edges;
            std::vector<std::vector<Vertex>> _adj;
            std::vector<bool> _matrix;
    };

    /// Host graph g and pattern graph h. The pattern has at least one edge
    /// and no isolated vertices.
    class SubIsoInstance
    {
        public:
            SubIsoInstance(Graph g, Graph h);

            auto g() const -> const Graph & { return _g; }
            auto h() const -> const Graph & { return _h; }

        private:
            Graph _g;
            Graph _h;
    };

    struct PspInstance
    {
        SetFamily family;
        std::size_t r = 0;
    };

    struct XcoverInstance
    {
        SetFamily family;
        std::size_t r = 0;
    };

    /// Positions into a family's set list, kept sorted and distinct.
    class PackingWitness
    {
        public:
            PackingWitness() = default;
            explicit PackingWitness(std::vector<std::size_t> indices);

            auto indices() const -> const std::vector<std::size_t> & { return _indices; }
            auto size() const -> std::size_t { return _indices.size(); }

            auto operator== (const PackingWitness &) const -> bool = default;

        private:
            std::vector<std::size_t> _indices;
    };

    /// Claimed map from pattern vertices to host vertices: map()[v - 1] is the
    /// image of pattern vertex v.
    class Isomorphism
    {
        public:
            Isomorphism() = default;
            explicit Isomorphism(std::vector<Vertex> map) : _map(std::move(map)) { }

            auto map() const -> const std::vector<Vertex> & { return _map; }
            auto operator() (Vertex v) const -> Vertex { return _map.at(v - 1); }
            auto size() const -> std::size_t { return _map.size(); }
            auto is_injective() const -> bool;

            auto operator== (const Isomorphism &) const -> bool = default;

        private:
            std::vector<Vertex> _map;
    };

    auto is_packing(const SetFamily & family, const PackingWitness & w) -> bool;
    auto is_exact_cover(const SetFamily & family, const PackingWitness & w) -> bool;
    auto is_injective_homomorphism(const SubIsoInstance & inst, const Isomorphism & phi) -> bool;
}

#endif
