#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>

namespace ircolor {

using BitWord = std::uint64_t;

inline constexpr int bits_per_word = 64;

/**
 * A bitset with a fixed capacity of Words * 64 bits. Only the operations the
 * solvers need are provided; all of them are value-semantic and constexpr.
 *
 * Ordering compares the sets as unsigned integers (highest word first), which
 * is the "bitmask order" used by every enumeration in the library.
 */
template <unsigned Words>
class FixedBitSet
{
  public:
    static constexpr int capacity = static_cast<int>(Words) * bits_per_word;

    constexpr FixedBitSet() = default;

    static constexpr auto single(int i) -> FixedBitSet
    {
        FixedBitSet s;
        s.set(i);
        return s;
    }

    /// The set {0, 1, ..., n-1}.
    static constexpr auto prefix(int n) -> FixedBitSet
    {
        FixedBitSet s;
        for (unsigned w = 0; w < Words; ++w) {
            int lo = static_cast<int>(w) * bits_per_word;
            if (n >= lo + bits_per_word)
                s.words_[w] = ~BitWord{0};
            else if (n > lo)
                s.words_[w] = (BitWord{1} << (n - lo)) - 1;
        }
        return s;
    }

    constexpr auto set(int i) -> void { words_[i / bits_per_word] |= BitWord{1} << (i % bits_per_word); }
    constexpr auto reset(int i) -> void { words_[i / bits_per_word] &= ~(BitWord{1} << (i % bits_per_word)); }
    [[nodiscard]] constexpr auto test(int i) const -> bool
    {
        return (words_[i / bits_per_word] >> (i % bits_per_word)) & 1U;
    }

    [[nodiscard]] constexpr auto count() const -> int
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    [[nodiscard]] constexpr auto empty() const -> bool
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    [[nodiscard]] constexpr auto any() const -> bool { return ! empty(); }

    /// Lowest set bit, or -1 when empty.
    [[nodiscard]] constexpr auto first() const -> int
    {
        for (unsigned w = 0; w < Words; ++w)
            if (words_[w])
                return static_cast<int>(w) * bits_per_word + std::countr_zero(words_[w]);
        return -1;
    }

    /// Highest set bit, or -1 when empty.
    [[nodiscard]] constexpr auto last() const -> int
    {
        for (unsigned w = Words; w-- > 0;)
            if (words_[w])
                return static_cast<int>(w) * bits_per_word + (bits_per_word - 1 - std::countl_zero(words_[w]));
        return -1;
    }

    [[nodiscard]] constexpr auto is_subset_of(const FixedBitSet & other) const -> bool
    {
        for (unsigned w = 0; w < Words; ++w)
            if (words_[w] & ~other.words_[w])
                return false;
        return true;
    }

    [[nodiscard]] constexpr auto intersects(const FixedBitSet & other) const -> bool
    {
        for (unsigned w = 0; w < Words; ++w)
            if (words_[w] & other.words_[w])
                return true;
        return false;
    }

    [[nodiscard]] constexpr auto word(unsigned w) const -> BitWord { return words_[w]; }

    constexpr auto operator|=(const FixedBitSet & o) -> FixedBitSet &
    {
        for (unsigned w = 0; w < Words; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }

    constexpr auto operator&=(const FixedBitSet & o) -> FixedBitSet &
    {
        for (unsigned w = 0; w < Words; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }

    constexpr auto operator^=(const FixedBitSet & o) -> FixedBitSet &
    {
        for (unsigned w = 0; w < Words; ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }

    /// Set difference.
    constexpr auto operator-=(const FixedBitSet & o) -> FixedBitSet &
    {
        for (unsigned w = 0; w < Words; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend constexpr auto operator|(FixedBitSet a, const FixedBitSet & b) -> FixedBitSet { return a |= b; }
    friend constexpr auto operator&(FixedBitSet a, const FixedBitSet & b) -> FixedBitSet { return a &= b; }
    friend constexpr auto operator^(FixedBitSet a, const FixedBitSet & b) -> FixedBitSet { return a ^= b; }
    friend constexpr auto operator-(FixedBitSet a, const FixedBitSet & b) -> FixedBitSet { return a -= b; }

    friend constexpr auto operator==(const FixedBitSet &, const FixedBitSet &) -> bool = default;

    friend constexpr auto operator<=>(const FixedBitSet & a, const FixedBitSet & b) -> std::strong_ordering
    {
        for (unsigned w = Words; w-- > 0;)
            if (auto c = a.words_[w] <=> b.words_[w]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    /// Calls f(i) for every set bit i in increasing order.
    template <typename F>
    constexpr auto for_each(F && f) const -> void
    {
        for (unsigned w = 0; w < Words; ++w) {
            BitWord bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                f(static_cast<int>(w) * bits_per_word + b);
            }
        }
    }

    class const_iterator
    {
      public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        constexpr const_iterator() = default;
        constexpr explicit const_iterator(FixedBitSet rest) : rest_(rest) {}

        constexpr auto operator*() const -> int { return rest_.first(); }
        constexpr auto operator++() -> const_iterator &
        {
            rest_.reset(rest_.first());
            return *this;
        }
        constexpr auto operator++(int) -> const_iterator
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend constexpr auto operator==(const const_iterator &, const const_iterator &) -> bool = default;

      private:
        FixedBitSet rest_;
    };

    [[nodiscard]] constexpr auto begin() const -> const_iterator { return const_iterator{*this}; }
    [[nodiscard]] constexpr auto end() const -> const_iterator { return const_iterator{}; }

    [[nodiscard]] auto hash() const -> std::size_t
    {
        std::size_t h = 0;
        for (auto w : words_)
            h = h * 0x9E3779B97F4A7C15ULL + std::hash<BitWord>{}(w);
        return h;
    }

  private:
    std::array<BitWord, Words> words_{};
};

/// Capacity of the vertex sets used throughout the library.
inline constexpr int max_vertices = 128;

using VertexSet = FixedBitSet<max_vertices / bits_per_word>;

} // namespace ircolor

template <unsigned Words>
struct std::hash<ircolor::FixedBitSet<Words>>
{
    auto operator()(const ircolor::FixedBitSet<Words> & s) const -> std::size_t { return s.hash(); }
};
