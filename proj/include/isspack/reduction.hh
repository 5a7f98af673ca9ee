#ifndef ISSPACK_REDUCTION_HH
#define ISSPACK_REDUCTION_HH

#include <isspack/core.hh>
#include <isspack/iss.hh>
#include <isspack/vector_sum.hh>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace isspack
{
    enum class GadgetMode
    {
        Paper,  ///< N = 2 * ceil(log2(n + 1)) + 2
        Tight   ///< smallest even N with C(N, N/2) / 2 >= n
    };

    auto mode_name(GadgetMode mode) -> std::string;
    auto parse_gadget_mode(const std::string & s) -> GadgetMode;

    /// Per-copy gadget universe size for a host graph on n vertices.
    auto base_gadget_size(int n, GadgetMode mode) -> std::size_t;

    /// Process-wide cache of built gadgets, keyed by universe size.
    auto shared_gadget(std::size_t n_elems) -> std::shared_ptr<const IssPair>;

    /// The pattern graph with its vertices arranged in positions 1..l.
    /// Everything downstream speaks positions, not pattern vertex ids.
    class OrderedPattern
    {
        public:
            OrderedPattern() = default;
            /// order[i - 1] is the pattern vertex placed at position i.
            OrderedPattern(Graph h, std::vector<Vertex> order);

            auto h() const -> const Graph & { return _h; }
            auto size() const -> int { return int(_order.size()); }
            auto order() const -> const std::vector<Vertex> & { return _order; }
            auto vertex_at(int i) const -> Vertex { return _order.at(i - 1); }
            auto position_of(Vertex v) const -> int { return _position.at(v - 1); }
            auto degree_at(int i) const -> int { return int(_neighbour_positions.at(i - 1).size()); }
            /// Positions adjacent to position i, ascending.
            auto neighbour_positions(int i) const -> const std::vector<int> & { return _neighbour_positions.at(i - 1); }
            /// 1-based rank of position j among the neighbours of position i.
            auto neighbour_rank(int i, int j) const -> int;
            /// Pattern edges as position pairs (i, j) with i < j, sorted.
            auto edges() const -> const std::vector<std::pair<int, int>> & { return _edges; }
            auto adjacent(int i, int j) const -> bool;

            auto operator== (const OrderedPattern & other) const -> bool { return _h == other._h && _order == other._order; }

        private:
            Graph _h;
            std::vector<Vertex> _order;
            std::vector<int> _position;
            std::vector<std::vector<int>> _neighbour_positions;
            std::vector<std::pair<int, int>> _edges;
    };

    inline constexpr int default_ordering_cap = 8;

    auto ordering_count(const Graph & h, int cap = default_ordering_cap) -> std::uint64_t;
    /// The index-th permutation of 1..l in lexicographic order.
    auto ordering_at(const Graph & h, std::uint64_t index, int cap = default_ordering_cap) -> OrderedPattern;
    auto enumerate_orderings(const Graph & h, int cap = default_ordering_cap) -> std::vector<OrderedPattern>;

    /// Where each gadget copy lives in the reduced universe. Position i owns a
    /// chain slot (i, 0) followed by one slot (i, j) per neighbour position j,
    /// in ascending j; positions are laid out in order 1..l.
    class GadgetLayout
    {
        public:
            GadgetLayout() = default;
            GadgetLayout(const OrderedPattern & pattern, std::size_t n_elems);

            auto n_elems() const -> std::size_t { return _n_elems; }
            auto universe_size() const -> std::size_t { return _universe_size; }
            /// Slot (i, 0) is the chain gadget; (i, j) the copy for neighbour j.
            auto block(int i, int j) const -> Block;

            struct Slot
            {
                int i;
                int j;
                Block block;
            };

            auto slots() const -> const std::vector<Slot> & { return _slots; }
            auto u0() const -> BitSet;
            auto u1() const -> BitSet;

        private:
            std::size_t _n_elems = 0;
            std::size_t _universe_size = 0;
            std::vector<Slot> _slots;
            std::unordered_map<std::uint64_t, std::size_t> _slot_index;
    };

    enum class Semantics
    {
        Packing,
        Cover
    };

    /// Output of the reduction for one ordering, with full provenance.
    struct ReducedPspInstance
    {
        SubIsoInstance source;
        PspInstance inst;
        GadgetLayout layout;
        OrderedPattern pattern;
        std::shared_ptr<const IssPair> gadget;
        GadgetMode mode = GadgetMode::Paper;
        Semantics semantics = Semantics::Packing;
        std::size_t v_set_count = 0;
        std::size_t e_set_count = 0;

        auto find(const SetLabel & label) const -> std::optional<std::size_t>;
        auto as_xcover() const -> XcoverInstance { return XcoverInstance{ inst.family, inst.r }; }

        std::unordered_map<std::uint64_t, std::size_t> label_index;
    };

    /// Rebuild the bit-vector a label stands for from the gadget and layout.
    auto materialize(const ReducedPspInstance & red, const SetLabel & label) -> BitSet;

    auto build_psp_instance(const SubIsoInstance & inst, const OrderedPattern & pattern, GadgetMode mode) -> ReducedPspInstance;
    auto build_xcover_instance(const SubIsoInstance & inst, const OrderedPattern & pattern, GadgetMode mode) -> ReducedPspInstance;

    /// Orders the pattern so that the images of phi increase with position.
    auto sort_pattern_for(const SubIsoInstance & inst, const Isomorphism & phi) -> OrderedPattern;

    /// The l V-sets and k E-sets selected by phi. Requires phi to be an
    /// injective homomorphism whose images increase along red.pattern.
    auto embed_isomorphism_as_packing(const ReducedPspInstance & red, const Isomorphism & phi) -> PackingWitness;

    /// Recovers phi from an r-packing (or exact cover, under cover semantics)
    /// and checks each structural consequence on the way. A failed check
    /// raises SoundnessViolation tagged with the property that broke.
    auto lift_packing_to_isomorphism(const ReducedPspInstance & red, const PackingWitness & w) -> Isomorphism;

    /// Characteristic vectors plus one V-indicator bit per V-set and two
    /// E-indicator bits per E-set; target is all ones.
    auto vectorize_instance(const ReducedPspInstance & red) -> VectorSumInstance;
}

#endif
