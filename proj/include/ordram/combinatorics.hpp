#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ordram
{
    /// binom(n, r) as an unsigned 64-bit value; throws BudgetExceeded on overflow.
    auto binomial(std::int64_t n, std::int64_t r) -> std::uint64_t;

    /// Advances a strictly increasing tuple over [1..n] to its lexicographic
    /// successor. Returns false after the last tuple.
    auto next_combination(std::span<int> tuple, int n) -> bool;

    /// Colexicographic successor (ordered by maximum element first).
    auto next_combination_colex(std::span<int> tuple, int n) -> bool;

    auto first_combination(int r) -> std::vector<int>;

    /// Lexicographic ranks of the r-subsets of [1..n], O(r) per query.
    class SubsetIndexer
    {
        private:
            int _n = 0, _r = 0;
            std::uint64_t _count = 0;
            // _cum[j][v] = sum over u in [1..v] of binom(n - u, r - j - 1), for position j (0-based)
            std::vector<std::vector<std::uint64_t>> _cum;

        public:
            SubsetIndexer() = default;
            SubsetIndexer(int n, int r);

            auto n() const -> int { return _n; }
            auto r() const -> int { return _r; }
            auto count() const -> std::uint64_t { return _count; }

            auto rank(std::span<const int> tuple) const -> std::uint64_t;
            auto unrank(std::uint64_t rank) const -> std::vector<int>;
    };
}
