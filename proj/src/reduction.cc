#include <isspack/reduction.hh>
#include <isspack/errors.hh>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

using std::optional;
using std::pair;
using std::shared_ptr;
using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace isspack
{
    namespace
    {
        auto slot_key(int i, int j) -> uint64_t
        {
            return (uint64_t(uint32_t(i)) << 32) | uint32_t(j);
        }

        auto label_key(const SetLabel & label) -> uint64_t
        {
            // kind:1 | alpha:20 | beta:20 | i:11 | j:11
            auto pack = [] (uint64_t kind, uint64_t a, uint64_t b, uint64_t i, uint64_t j) {
                return (kind << 62) | (a << 42) | (b << 22) | (i << 11) | j;
            };
            if (auto v = std::get_if<VSetLabel>(&label))
                return pack(0, v->alpha, v->beta, v->i, 0);
            auto & e = std::get<ESetLabel>(label);
            return pack(1, e.alpha, e.beta, e.i, e.j);
        }

        auto describe(const SetLabel & label) -> string
        {
            if (auto v = std::get_if<VSetLabel>(&label))
                return "V(alpha=" + to_string(v->alpha) + ", i=" + to_string(v->i) + ", beta=" + to_string(v->beta) + ")";
            auto & e = std::get<ESetLabel>(label);
            return "E(alpha=" + to_string(e.alpha) + ", beta=" + to_string(e.beta)
                + ", i=" + to_string(e.i) + ", j=" + to_string(e.j) + ")";
        }

        auto factorial(int l) -> uint64_t
        {
            uint64_t f = 1;
            for (int i = 2 ; i <= l ; ++i)
                f *= uint64_t(i);
            return f;
        }

        auto next_position(const OrderedPattern & pattern, int i) -> int
        {
            return i == pattern.size() ? 1 : i + 1;
        }
    }

    auto mode_name(GadgetMode mode) -> string
    {
        return mode == GadgetMode::Paper ? "paper" : "tight";
    }

    auto parse_gadget_mode(const string & s) -> GadgetMode
    {
        if (s == "paper")
            return GadgetMode::Paper;
        if (s == "tight")
            return GadgetMode::Tight;
        throw ArgumentError("unknown gadget mode '" + s + "' (expected paper or tight)");
    }

    auto base_gadget_size(int n, GadgetMode mode) -> size_t
    {
        if (n < 1)
            throw ArgumentError("host graph needs at least one vertex");
        if (mode == GadgetMode::Paper) {
            // ceil(log2(n + 1)) is the bit length of n.
            size_t bits = 0;
            for (uint64_t x = uint64_t(n) ; x ; x >>= 1)
                ++bits;
            return 2 * bits + 2;
        }
        for (size_t N = 2 ; ; N += 2)
            if (complement_pair_count(N) >= uint64_t(n))
                return N;
    }

    auto shared_gadget(size_t n_elems) -> shared_ptr<const IssPair>
    {
        static std::mutex mutex;
        static std::map<size_t, shared_ptr<const IssPair>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto & slot = cache[n_elems];
        if (! slot)
            slot = std::make_shared<const IssPair>(build_compatible_iss(n_elems));
        return slot;
    }

    OrderedPattern::OrderedPattern(Graph h, vector<Vertex> order) :
        _h(std::move(h)),
        _order(std::move(order))
    {
        int l = _h.n();
        if (int(_order.size()) != l)
            throw ArgumentError("ordering has " + to_string(_order.size()) + " entries for " + to_string(l) + " pattern vertices");
        _position.assign(l, 0);
        for (int i = 1 ; i <= l ; ++i) {
            Vertex v = _order[i - 1];
            if (v < 1 || v > l || _position[v - 1] != 0)
                throw ArgumentError("ordering is not a permutation of 1.." + to_string(l));
            _position[v - 1] = i;
        }
        _neighbour_positions.resize(l);
        for (int i = 1 ; i <= l ; ++i) {
            for (auto w : _h.neighbours(_order[i - 1]))
                _neighbour_positions[i - 1].push_back(_position[w - 1]);
            std::sort(_neighbour_positions[i - 1].begin(), _neighbour_positions[i - 1].end());
        }
        for (auto & [a, b] : _h.edges())
            _edges.emplace_back(std::min(_position[a - 1], _position[b - 1]), std::max(_position[a - 1], _position[b - 1]));
        std::sort(_edges.begin(), _edges.end());
    }

    auto OrderedPattern::neighbour_rank(int i, int j) const -> int
    {
        auto & list = neighbour_positions(i);
        auto it = std::lower_bound(list.begin(), list.end(), j);
        if (it == list.end() || *it != j)
            throw ArgumentError("positions " + to_string(i) + " and " + to_string(j) + " are not adjacent");
        return int(it - list.begin()) + 1;
    }

    auto OrderedPattern::adjacent(int i, int j) const -> bool
    {
        auto & list = neighbour_positions(i);
        return std::binary_search(list.begin(), list.end(), j);
    }

    auto ordering_count(const Graph & h, int cap) -> uint64_t
    {
        if (h.n() > cap)
            throw BudgetError("pattern has " + to_string(h.n()) + " vertices; ordering enumeration is capped at " + to_string(cap));
        return factorial(h.n());
    }

    auto ordering_at(const Graph & h, uint64_t index, int cap) -> OrderedPattern
    {
        auto total = ordering_count(h, cap);
        if (index >= total)
            throw RangeError("ordering index " + to_string(index) + " outside 0.." + to_string(total - 1));
        vector<Vertex> pool(h.n());
        std::iota(pool.begin(), pool.end(), 1);
        vector<Vertex> order;
        for (int remaining = h.n() ; remaining > 0 ; --remaining) {
            uint64_t block = factorial(remaining - 1);
            auto pick = index / block;
            index %= block;
            order.push_back(pool[pick]);
            pool.erase(pool.begin() + long(pick));
        }
        return OrderedPattern(h, std::move(order));
    }

    auto enumerate_orderings(const Graph & h, int cap) -> vector<OrderedPattern>
    {
        ordering_count(h, cap);
        vector<OrderedPattern> result;
        vector<Vertex> order(h.n());
        std::iota(order.begin(), order.end(), 1);
        do
            result.emplace_back(h, order);
        while (std::next_permutation(order.begin(), order.end()));
        return result;
    }

    GadgetLayout::GadgetLayout(const OrderedPattern & pattern, size_t n_elems) :
        _n_elems(n_elems)
    {
        size_t offset = 0;
        auto add = [&] (int i, int j) {
            _slot_index.emplace(slot_key(i, j), _slots.size());
            _slots.push_back(Slot{ i, j, Block{ offset, offset + n_elems } });
            offset += n_elems;
        };
        for (int i = 1 ; i <= pattern.size() ; ++i) {
            add(i, 0);
            for (auto j : pattern.neighbour_positions(i))
                add(i, j);
        }
        _universe_size = offset;
    }

    auto GadgetLayout::block(int i, int j) const -> Block
    {
        auto it = _slot_index.find(slot_key(i, j));
        if (it == _slot_index.end())
            throw RangeError("no gadget slot (" + to_string(i) + ", " + to_string(j) + ")");
        return _slots[it->second].block;
    }

    auto GadgetLayout::u0() const -> BitSet
    {
        BitSet result(_universe_size);
        for (auto & s : _slots)
            if (s.j == 0)
                result.place(s.block.first, BitSet::full(s.block.size()));
        return result;
    }

    auto GadgetLayout::u1() const -> BitSet
    {
        return BitSet::full(_universe_size) - u0();
    }

    auto ReducedPspInstance::find(const SetLabel & label) const -> optional<size_t>
    {
        auto it = label_index.find(label_key(label));
        if (it == label_index.end())
            return std::nullopt;
        return it->second;
    }

    auto materialize(const ReducedPspInstance & red, const SetLabel & label) -> BitSet
    {
        auto & gadget = *red.gadget;
        auto & pattern = red.pattern;
        int n = red.source.g().n();
        BitSet result(red.layout.universe_size());
        auto check_vertex = [&] (Vertex a) {
            if (a < 1 || a > n || size_t(a) > gadget.m_sets)
                throw ArgumentError("label refers to host vertex " + to_string(a) + " outside 1.." + to_string(n));
        };
        auto check_position = [&] (int i) {
            if (i < 1 || i > pattern.size())
                throw ArgumentError("label refers to position " + to_string(i) + " outside 1.." + to_string(pattern.size()));
        };

        if (auto v = std::get_if<VSetLabel>(&label)) {
            check_vertex(v->alpha);
            check_vertex(v->beta);
            check_position(v->i);
            result.place(red.layout.block(v->i, 0).first, gadget.s_a[v->alpha - 1]);
            for (auto j : pattern.neighbour_positions(v->i))
                result.place(red.layout.block(v->i, j).first, gadget.s_a[v->alpha - 1]);
            result.place(red.layout.block(next_position(pattern, v->i), 0).first, gadget.s_b[v->beta - 1]);
        }
        else {
            auto & e = std::get<ESetLabel>(label);
            check_vertex(e.alpha);
            check_vertex(e.beta);
            check_position(e.i);
            check_position(e.j);
            result.place(red.layout.block(e.i, e.j).first, gadget.s_b[e.alpha - 1]);
            result.place(red.layout.block(e.j, e.i).first, gadget.s_b[e.beta - 1]);
        }
        return result;
    }

    namespace
    {
        auto build(const SubIsoInstance & inst, const OrderedPattern & pattern, GadgetMode mode, Semantics semantics)
            -> ReducedPspInstance
        {
            if (! (pattern.h() == inst.h()))
                throw ArgumentError("ordering was built for a different pattern graph");
            auto & g = inst.g();
            int n = g.n();
            int l = pattern.size();
            size_t k = inst.h().edge_count();
            if (l < 2)
                throw ArgumentError("pattern needs at least two vertices");

            size_t N = base_gadget_size(n, mode);
            auto gadget = shared_gadget(N);
            if (gadget->m_sets < size_t(n))
                throw InternalError("gadget with " + to_string(gadget->m_sets) + " sets cannot name "
                        + to_string(n) + " host vertices");

            GadgetLayout layout(pattern, N);
            ReducedPspInstance red{
                inst,
                PspInstance{ SetFamily(layout.universe_size()), k + size_t(l) },
                layout,
                pattern,
                gadget,
                mode,
                semantics,
                0, 0,
                {}
            };

            std::unordered_set<BitSet> seen;
            auto add = [&] (SetLabel label) {
                auto s = materialize(red, label);
                if (! seen.insert(s).second)
                    throw InternalError("two labels produce the same set; second is " + describe(label));
                red.label_index.emplace(label_key(label), red.inst.family.size());
                red.inst.family.add(std::move(s), label);
            };

            for (int i = 1 ; i <= l ; ++i)
                for (Vertex alpha = 1 ; alpha <= n ; ++alpha)
                    for (Vertex beta = 1 ; beta <= n ; ++beta)
                        if (i < l ? beta > alpha : beta < alpha) {
                            add(VSetLabel{ alpha, i, beta });
                            ++red.v_set_count;
                        }

            auto g_edges = g.edges();
            std::sort(g_edges.begin(), g_edges.end());
            for (auto & [i, j] : pattern.edges())
                for (auto & [a, b] : g_edges) {
                    add(ESetLabel{ a, b, i, j });
                    add(ESetLabel{ b, a, i, j });
                    red.e_set_count += 2;
                }

            size_t expected_universe = (size_t(l) + 2 * k) * N;
            size_t expected_v = size_t(l) * size_t(n) * size_t(n - 1) / 2;
            size_t expected_e = 2 * g.edge_count() * k;
            if (red.inst.family.universe_size() != expected_universe || red.v_set_count != expected_v
                    || red.e_set_count != expected_e || red.inst.r != k + size_t(l))
                throw InternalError("reduced instance violates its size formulas");
            return red;
        }
    }

    auto build_psp_instance(const SubIsoInstance & inst, const OrderedPattern & pattern, GadgetMode mode) -> ReducedPspInstance
    {
        return build(inst, pattern, mode, Semantics::Packing);
    }

    auto build_xcover_instance(const SubIsoInstance & inst, const OrderedPattern & pattern, GadgetMode mode) -> ReducedPspInstance
    {
        return build(inst, pattern, mode, Semantics::Cover);
    }

    auto sort_pattern_for(const SubIsoInstance & inst, const Isomorphism & phi) -> OrderedPattern
    {
        if (phi.size() != size_t(inst.h().n()))
            throw ArgumentError("map has " + to_string(phi.size()) + " entries for " + to_string(inst.h().n()) + " pattern vertices");
        if (! phi.is_injective())
            throw ArgumentError("map is not injective");
        vector<Vertex> order(inst.h().n());
        std::iota(order.begin(), order.end(), 1);
        std::sort(order.begin(), order.end(), [&] (Vertex a, Vertex b) { return phi(a) < phi(b); });
        return OrderedPattern(inst.h(), std::move(order));
    }

    auto embed_isomorphism_as_packing(const ReducedPspInstance & red, const Isomorphism & phi) -> PackingWitness
    {
        auto & pattern = red.pattern;
        int l = pattern.size();
        if (phi.size() != size_t(l))
            throw ArgumentError("map has " + to_string(phi.size()) + " entries for " + to_string(l) + " pattern vertices");

        vector<Vertex> alpha(l + 1);
        for (int i = 1 ; i <= l ; ++i)
            alpha[i] = phi(pattern.vertex_at(i));

        vector<size_t> indices;
        auto take = [&] (const SetLabel & label) {
            auto index = red.find(label);
            if (! index)
                throw WitnessNotFound("the reduced instance has no set " + describe(label)
                        + "; the map is not an injective homomorphism sorted by this ordering");
            indices.push_back(*index);
        };
        for (int i = 1 ; i <= l ; ++i)
            take(VSetLabel{ alpha[i], i, alpha[next_position(pattern, i)] });
        for (auto & [i, j] : pattern.edges())
            take(ESetLabel{ alpha[i], alpha[j], i, j });
        return PackingWitness(std::move(indices));
    }

    auto lift_packing_to_isomorphism(const ReducedPspInstance & red, const PackingWitness & w) -> Isomorphism
    {
        auto & family = red.inst.family;
        auto & pattern = red.pattern;
        auto & gadget = *red.gadget;
        int l = pattern.size();
        size_t k = pattern.edges().size();

        if (! family.has_labels())
            throw ArgumentError("reduced instance carries no labels");

        if (red.semantics == Semantics::Packing) {
            if (w.size() != red.inst.r)
                throw ArgumentError("witness has " + to_string(w.size()) + " sets, lifting needs exactly r = " + to_string(red.inst.r));
            if (! is_packing(family, w))
                throw ArgumentError("witness sets are not pairwise disjoint");
        }
        else {
            if (! is_exact_cover(family, w))
                throw ArgumentError("witness is not an exact cover");
            if (w.size() > red.inst.r)
                throw ArgumentError("cover has " + to_string(w.size()) + " sets, more than r = " + to_string(red.inst.r));
        }

        vector<VSetLabel> vsets;
        vector<ESetLabel> esets;
        for (auto index : w.indices()) {
            auto & label = family.label(index);
            if (materialize(red, label) != family[index])
                throw SoundnessViolation("label-faithfulness", "set " + to_string(index) + " differs from " + describe(label));
            if (auto v = std::get_if<VSetLabel>(&label)) {
                auto chain = restrict(family[index], red.layout.block(v->i, 0));
                if (chain != gadget.s_a[v->alpha - 1])
                    throw SoundnessViolation("v-set-partition", "set " + to_string(index) + " does not restrict to its chain gadget set");
                vsets.push_back(*v);
            }
            else
                esets.push_back(std::get<ESetLabel>(label));
        }

        if (vsets.size() != size_t(l) || esets.size() != k)
            throw SoundnessViolation("lemma-2-counts", "found " + to_string(vsets.size()) + " V-sets and "
                    + to_string(esets.size()) + " E-sets, expected " + to_string(l) + " and " + to_string(k));

        BitSet covered(family.universe_size());
        for (auto index : w.indices())
            covered |= family[index];
        if (! covered.all())
            throw SoundnessViolation("lemma-3-coverage", to_string(family.universe_size() - covered.cardinality())
                    + " elements left uncovered");

        vector<optional<VSetLabel>> at(l + 1);
        for (auto & v : vsets) {
            if (at[v.i])
                throw SoundnessViolation("lemma-4-chain", "two V-sets at position " + to_string(v.i));
            at[v.i] = v;
        }
        for (int i = 1 ; i <= l ; ++i) {
            int next = next_position(pattern, i);
            if (at[i]->beta != at[next]->alpha)
                throw SoundnessViolation("lemma-4-chain", "position " + to_string(i) + " continues with host vertex "
                        + to_string(at[i]->beta) + " but position " + to_string(next) + " holds " + to_string(at[next]->alpha));
            if (i < l && ! (at[i]->alpha < at[next]->alpha))
                throw SoundnessViolation("lemma-4-chain", "host vertices do not increase at position " + to_string(i));
        }

        vector<Vertex> map(l);
        for (int i = 1 ; i <= l ; ++i)
            map[pattern.vertex_at(i) - 1] = at[i]->alpha;
        Isomorphism phi(std::move(map));
        if (! is_injective_homomorphism(red.source, phi))
            throw SoundnessViolation("lemma-5-homomorphism", "recovered map is not an injective homomorphism");
        return phi;
    }

    auto vectorize_instance(const ReducedPspInstance & red) -> VectorSumInstance
    {
        auto & family = red.inst.family;
        if (! family.has_labels() && family.size() > 0)
            throw ArgumentError("vectorizing needs a labelled reduced instance");

        auto & pattern = red.pattern;
        size_t universe = family.universe_size();
        size_t l = size_t(pattern.size());
        size_t k = pattern.edges().size();
        size_t dim = universe + l + 2 * k;

        // E-indicator offset of position i is the degree sum of positions < i.
        vector<size_t> degree_prefix(l + 1, 0);
        for (size_t i = 1 ; i < l ; ++i)
            degree_prefix[i] = degree_prefix[i - 1] + size_t(pattern.degree_at(int(i)));

        auto e_bit = [&] (int i, int j) {
            return universe + l + degree_prefix[i - 1] + size_t(pattern.neighbour_rank(i, j)) - 1;
        };

        vector<BitSet> vectors;
        vectors.reserve(family.size());
        for (size_t s = 0 ; s < family.size() ; ++s) {
            BitSet v(dim);
            v.place(0, family[s]);
            auto & label = family.label(s);
            if (auto vl = std::get_if<VSetLabel>(&label))
                v.set(universe + size_t(vl->i) - 1);
            else {
                auto & el = std::get<ESetLabel>(label);
                v.set(e_bit(el.i, el.j));
                v.set(e_bit(el.j, el.i));
            }
            vectors.push_back(std::move(v));
        }

        return VectorSumInstance(dim, std::move(vectors), BitSet::full(dim), red.inst.r, family.labels(),
                { Block{ universe, universe + l }, Block{ universe + l, dim } });
    }
}
