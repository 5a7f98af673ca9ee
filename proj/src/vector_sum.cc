#include <isspack/vector_sum.hh>
#include <isspack/errors.hh>

#include <string>

using std::size_t;
using std::to_string;
using std::vector;

namespace isspack
{
    VectorSumInstance::VectorSumInstance(size_t dim, vector<BitSet> vectors, BitSet target, size_t r,
            vector<SetLabel> labels, vector<Block> indicator_blocks) :
        _dim(dim),
        _vectors(std::move(vectors)),
        _target(std::move(target)),
        _r(r),
        _labels(std::move(labels)),
        _blocks(std::move(indicator_blocks))
    {
        if (_target.width() != _dim)
            throw ArgumentError("target has length " + to_string(_target.width()) + ", expected " + to_string(_dim));
        for (size_t i = 0 ; i < _vectors.size() ; ++i)
            if (_vectors[i].width() != _dim)
                throw ArgumentError("vector " + to_string(i) + " has length " + to_string(_vectors[i].width())
                        + ", expected " + to_string(_dim));
        if (! _labels.empty() && _labels.size() != _vectors.size())
            throw ArgumentError("got " + to_string(_labels.size()) + " labels for " + to_string(_vectors.size()) + " vectors");

        for (size_t b = 0 ; b < _blocks.size() ; ++b) {
            if (_blocks[b].first > _blocks[b].last || _blocks[b].last > _dim)
                throw ArgumentError("indicator block " + to_string(b) + " outside the dimension");
            for (size_t c = 0 ; c < b ; ++c)
                if (_blocks[b].first < _blocks[c].last && _blocks[c].first < _blocks[b].last)
                    throw ArgumentError("indicator blocks " + to_string(c) + " and " + to_string(b) + " overlap");
        }
        for (size_t i = 0 ; i < _vectors.size() ; ++i) {
            int touched = -1;
            for (size_t b = 0 ; b < _blocks.size() ; ++b)
                if (restrict(_vectors[i], _blocks[b]).cardinality() > 0) {
                    if (touched >= 0)
                        throw ArgumentError("vector " + to_string(i) + " touches two indicator blocks");
                    touched = int(b);
                }
        }
    }

    auto VectorSumInstance::sum(const vector<size_t> & indices) const -> BitSet
    {
        BitSet result(_dim);
        for (auto i : indices) {
            if (i >= _vectors.size())
                throw RangeError("vector index " + to_string(i) + " outside " + to_string(_vectors.size()));
            result ^= _vectors[i];
        }
        return result;
    }
}
