#ifndef ISSPACK_VECTOR_SUM_HH
#define ISSPACK_VECTOR_SUM_HH

#include <isspack/bitset.hh>
#include <isspack/core.hh>

#include <cstddef>
#include <vector>

namespace isspack
{
    /// Vectors over GF(2) of a common dimension, a target, and a cardinality
    /// budget r. Optional indicator blocks name coordinate ranges that solvers
    /// may use for counting bounds; the instance checks that no vector
    /// touches two different blocks.
    class VectorSumInstance
    {
        public:
            VectorSumInstance() = default;
            VectorSumInstance(std::size_t dim, std::vector<BitSet> vectors, BitSet target, std::size_t r,
                    std::vector<SetLabel> labels = {}, std::vector<Block> indicator_blocks = {});

            auto dim() const -> std::size_t { return _dim; }
            auto vectors() const -> const std::vector<BitSet> & { return _vectors; }
            auto target() const -> const BitSet & { return _target; }
            auto r() const -> std::size_t { return _r; }
            auto labels() const -> const std::vector<SetLabel> & { return _labels; }
            auto indicator_blocks() const -> const std::vector<Block> & { return _blocks; }

            /// XOR of the chosen vectors.
            auto sum(const std::vector<std::size_t> & indices) const -> BitSet;

            auto operator== (const VectorSumInstance &) const -> bool = default;

        private:
            std::size_t _dim = 0;
            std::vector<BitSet> _vectors;
            BitSet _target;
            std::size_t _r = 0;
            std::vector<SetLabel> _labels;
            std::vector<Block> _blocks;
    };
}

#endif
