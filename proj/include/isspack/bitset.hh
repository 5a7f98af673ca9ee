#ifndef ISSPACK_BITSET_HH
#define ISSPACK_BITSET_HH

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace isspack
{
    /// Half-open index range [first, last) inside a universe.
    struct Block
    {
        std::size_t first = 0;
        std::size_t last = 0;

        auto size() const -> std::size_t { return last - first; }
        auto contains(std::size_t e) const -> bool { return e >= first && e < last; }

        auto operator== (const Block &) const -> bool = default;
    };

    /// Fixed-width membership vector over a universe {0, ..., width-1}.
    /// Bits at or beyond width are always clear.
    class BitSet
    {
        public:
            using Word = std::uint64_t;
            static constexpr std::size_t word_bits = 64;

            BitSet() = default;
            explicit BitSet(std::size_t width);

            static auto full(std::size_t width) -> BitSet;
            static auto from_indices(std::size_t width, std::span<const std::size_t> indices) -> BitSet;
            static auto from_indices(std::size_t width, std::initializer_list<std::size_t> indices) -> BitSet;

            auto width() const -> std::size_t { return _width; }
            auto test(std::size_t i) const -> bool;
            auto set(std::size_t i) -> BitSet &;
            auto reset(std::size_t i) -> BitSet &;

            auto cardinality() const -> std::size_t;
            auto none() const -> bool;
            auto all() const -> bool;
            auto intersects(const BitSet & other) const -> bool;
            auto is_subset_of(const BitSet & other) const -> bool;

            /// Lowest set index, or width() when empty.
            auto first() const -> std::size_t;
            /// Lowest set index strictly greater than i, or width().
            auto next(std::size_t i) const -> std::size_t;
            auto indices() const -> std::vector<std::size_t>;

            auto operator|= (const BitSet & other) -> BitSet &;
            auto operator&= (const BitSet & other) -> BitSet &;
            auto operator^= (const BitSet & other) -> BitSet &;
            /// Set difference.
            auto operator-= (const BitSet & other) -> BitSet &;

            /// Copy `part` into positions [offset, offset + part.width()).
            auto place(std::size_t offset, const BitSet & part) -> BitSet &;

            auto words() const -> std::span<const Word> { return _words; }

            auto operator== (const BitSet & other) const -> bool = default;

            /// Order by element lists: the set whose smallest differing
            /// element is present comes first, so {0,1} < {0,2} < {1,2}.
            auto lex_less(const BitSet & other) const -> bool;

            auto hash() const -> std::size_t;

        private:
            auto check_width(const BitSet & other) const -> void;
            auto trim() -> void;

            std::size_t _width = 0;
            std::vector<Word> _words;
    };

    auto operator| (BitSet a, const BitSet & b) -> BitSet;
    auto operator& (BitSet a, const BitSet & b) -> BitSet;
    auto operator^ (BitSet a, const BitSet & b) -> BitSet;
    auto operator- (BitSet a, const BitSet & b) -> BitSet;

    /// s restricted to block, re-based so that block.first becomes index 0.
    auto restrict(const BitSet & s, Block block) -> BitSet;

    auto complement(const BitSet & s) -> BitSet;
}

template <>
struct std::hash<isspack::BitSet>
{
    auto operator() (const isspack::BitSet & s) const -> std::size_t { return s.hash(); }
};

#endif
