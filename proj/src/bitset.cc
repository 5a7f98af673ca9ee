#include <isspack/bitset.hh>
#include <isspack/errors.hh>

#include <bit>
#include <string>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace isspack
{
    namespace
    {
        auto words_for(size_t width) -> size_t
        {
            return (width + BitSet::word_bits - 1) / BitSet::word_bits;
        }
    }

    BitSet::BitSet(size_t width) :
        _width(width),
        _words(words_for(width), 0)
    {
    }

    auto BitSet::full(size_t width) -> BitSet
    {
        BitSet result(width);
        for (auto & w : result._words)
            w = ~Word{0};
        result.trim();
        return result;
    }

    auto BitSet::from_indices(size_t width, std::span<const size_t> indices) -> BitSet
    {
        BitSet result(width);
        for (auto i : indices)
            result.set(i);
        return result;
    }

    auto BitSet::from_indices(size_t width, std::initializer_list<size_t> indices) -> BitSet
    {
        return from_indices(width, std::span<const size_t>(indices.begin(), indices.size()));
    }

    auto BitSet::test(size_t i) const -> bool
    {
        if (i >= _width)
            throw RangeError("bit index " + to_string(i) + " outside width " + to_string(_width));
        return (_words[i / word_bits] >> (i % word_bits)) & 1;
    }

    auto BitSet::set(size_t i) -> BitSet &
    {
        if (i >= _width)
            throw RangeError("bit index " + to_string(i) + " outside width " + to_string(_width));
        _words[i / word_bits] |= Word{1} << (i % word_bits);
        return *this;
    }

    auto BitSet::reset(size_t i) -> BitSet &
    {
        if (i >= _width)
            throw RangeError("bit index " + to_string(i) + " outside width " + to_string(_width));
        _words[i / word_bits] &= ~(Word{1} << (i % word_bits));
        return *this;
    }

    auto BitSet::cardinality() const -> size_t
    {
        size_t result = 0;
        for (auto w : _words)
            result += std::popcount(w);
        return result;
    }

    auto BitSet::none() const -> bool
    {
        for (auto w : _words)
            if (w)
                return false;
        return true;
    }

    auto BitSet::all() const -> bool
    {
        return cardinality() == _width;
    }

    auto BitSet::intersects(const BitSet & other) const -> bool
    {
        check_width(other);
        for (size_t i = 0 ; i < _words.size() ; ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    auto BitSet::is_subset_of(const BitSet & other) const -> bool
    {
        check_width(other);
        for (size_t i = 0 ; i < _words.size() ; ++i)
            if (_words[i] & ~other._words[i])
                return false;
        return true;
    }

    auto BitSet::first() const -> size_t
    {
        for (size_t i = 0 ; i < _words.size() ; ++i)
            if (_words[i])
                return i * word_bits + std::countr_zero(_words[i]);
        return _width;
    }

    auto BitSet::next(size_t i) const -> size_t
    {
        ++i;
        if (i >= _width)
            return _width;
        size_t w = i / word_bits;
        Word masked = _words[w] & (~Word{0} << (i % word_bits));
        while (true) {
            if (masked)
                return w * word_bits + std::countr_zero(masked);
            if (++w == _words.size())
                return _width;
            masked = _words[w];
        }
    }

    auto BitSet::indices() const -> vector<size_t>
    {
        vector<size_t> result;
        result.reserve(cardinality());
        for (size_t i = first() ; i < _width ; i = next(i))
            result.push_back(i);
        return result;
    }

    auto BitSet::operator|= (const BitSet & other) -> BitSet &
    {
        check_width(other);
        for (size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto BitSet::operator&= (const BitSet & other) -> BitSet &
    {
        check_width(other);
        for (size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto BitSet::operator^= (const BitSet & other) -> BitSet &
    {
        check_width(other);
        for (size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] ^= other._words[i];
        return *this;
    }

    auto BitSet::operator-= (const BitSet & other) -> BitSet &
    {
        check_width(other);
        for (size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] &= ~other._words[i];
        return *this;
    }

    auto BitSet::place(size_t offset, const BitSet & part) -> BitSet &
    {
        if (offset + part.width() > _width)
            throw RangeError("cannot place width " + to_string(part.width()) + " at offset "
                    + to_string(offset) + " in width " + to_string(_width));
        for (size_t i = part.first() ; i < part.width() ; i = part.next(i))
            set(offset + i);
        return *this;
    }

    auto BitSet::lex_less(const BitSet & other) const -> bool
    {
        check_width(other);
        for (size_t i = 0 ; i < _words.size() ; ++i) {
            Word diff = _words[i] ^ other._words[i];
            if (diff) {
                Word lowest = diff & -diff;
                return (_words[i] & lowest) != 0;
            }
        }
        return false;
    }

    auto BitSet::hash() const -> size_t
    {
        size_t h = std::hash<size_t>{}(_width);
        for (auto w : _words)
            h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    auto BitSet::check_width(const BitSet & other) const -> void
    {
        if (other._width != _width)
            throw ArgumentError("bitset width mismatch: " + to_string(_width) + " vs " + to_string(other._width));
    }

    auto BitSet::trim() -> void
    {
        if (_width % word_bits && ! _words.empty())
            _words.back() &= (Word{1} << (_width % word_bits)) - 1;
    }

    auto operator| (BitSet a, const BitSet & b) -> BitSet { return a |= b; }
    auto operator& (BitSet a, const BitSet & b) -> BitSet { return a &= b; }
    auto operator^ (BitSet a, const BitSet & b) -> BitSet { return a ^= b; }
    auto operator- (BitSet a, const BitSet & b) -> BitSet { return a -= b; }

    auto restrict(const BitSet & s, Block block) -> BitSet
    {
        if (block.first > block.last || block.last > s.width())
            throw RangeError("block [" + to_string(block.first) + ", " + to_string(block.last)
                    + ") outside width " + to_string(s.width()));
        BitSet result(block.size());
        size_t start = block.first == 0 ? s.first() : s.next(block.first - 1);
        for (size_t i = start ; i < block.last ; i = s.next(i))
            result.set(i - block.first);
        return result;
    }

    auto complement(const BitSet & s) -> BitSet
    {
        return BitSet::full(s.width()) - s;
    }
}
