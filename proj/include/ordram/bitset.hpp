#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ordram
{
    /// Dynamically sized bit set used for down-set membership vectors and poset rows.
    class Bitset
    {
        private:
            std::size_t _size = 0;
            std::vector<std::uint64_t> _words;

            static constexpr std::size_t bits_per_word = 64;

        public:
            Bitset() = default;

            explicit Bitset(std::size_t size) :
                _size(size),
                _words((size + bits_per_word - 1) / bits_per_word, 0)
            {
            }

            auto size() const -> std::size_t { return _size; }

            auto set(std::size_t a) -> void
            {
                _words[a / bits_per_word] |= (std::uint64_t{1} << (a % bits_per_word));
            }

            auto reset(std::size_t a) -> void
            {
                _words[a / bits_per_word] &= ~(std::uint64_t{1} << (a % bits_per_word));
            }

            auto test(std::size_t a) const -> bool
            {
                return (_words[a / bits_per_word] >> (a % bits_per_word)) & 1;
            }

            auto count() const -> std::size_t
            {
                std::size_t result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto none() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto is_subset_of(const Bitset & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            auto operator|= (const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            auto operator&= (const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
                return *this;
            }

            auto subtract(const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~other._words[i];
                return *this;
            }

            /// Lowest set index, or size() when empty.
            auto find_first() const -> std::size_t
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i])
                        return i * bits_per_word + std::countr_zero(_words[i]);
                return _size;
            }

            /// Lowest set index strictly above a, or size().
            auto find_next(std::size_t a) const -> std::size_t
            {
                std::size_t b = a + 1;
                if (b >= _size)
                    return _size;
                std::size_t w = b / bits_per_word;
                std::uint64_t word = _words[w] & (~std::uint64_t{0} << (b % bits_per_word));
                while (true) {
                    if (word)
                        return w * bits_per_word + std::countr_zero(word);
                    if (++w >= _words.size())
                        return _size;
                    word = _words[w];
                }
            }

            /// Lowest index set in *this but not in other, or size().
            auto first_not_in(const Bitset & other) const -> std::size_t
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (auto w = _words[i] & ~other._words[i])
                        return i * bits_per_word + std::countr_zero(w);
                return _size;
            }

            auto members() const -> std::vector<std::size_t>
            {
                std::vector<std::size_t> result;
                for (auto a = find_first() ; a < _size ; a = find_next(a))
                    result.push_back(a);
                return result;
            }

            auto hash() const -> std::size_t
            {
                std::size_t h = _size * 0x9e3779b97f4a7c15ULL;
                for (auto w : _words)
                    h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
                return h;
            }

            auto operator== (const Bitset & other) const -> bool = default;
    };

    struct BitsetHash
    {
        auto operator() (const Bitset & b) const -> std::size_t { return b.hash(); }
    };
}
