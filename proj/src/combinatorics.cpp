#include <ordram/combinatorics.hpp>
#include <ordram/errors.hpp>

#include <limits>
#include <string>

namespace ordram
{
    auto binomial(std::int64_t n, std::int64_t r) -> std::uint64_t
    {
        if (r < 0 || n < 0 || r > n)
            return 0;
        if (r > n - r)
            r = n - r;
        unsigned __int128 result = 1;
        for (std::int64_t i = 1 ; i <= r ; ++i) {
            result = result * static_cast<unsigned __int128>(n - r + i) / static_cast<unsigned __int128>(i);
            if (result > std::numeric_limits<std::uint64_t>::max())
                throw BudgetExceeded("binomial(" + std::to_string(n) + ", " + std::to_string(r) + ") overflows 64 bits");
        }
        return static_cast<std::uint64_t>(result);
    }

    auto first_combination(int r) -> std::vector<int>
    {
        std::vector<int> result(r);
        for (int i = 0 ; i < r ; ++i)
            result[i] = i + 1;
        return result;
    }

    auto next_combination(std::span<int> tuple, int n) -> bool
    {
        int r = static_cast<int>(tuple.size());
        int i = r - 1;
        while (i >= 0 && tuple[i] == n - r + i + 1)
            --i;
        if (i < 0)
            return false;
        ++tuple[i];
        for (int j = i + 1 ; j < r ; ++j)
            tuple[j] = tuple[j - 1] + 1;
        return true;
    }

    auto next_combination_colex(std::span<int> tuple, int n) -> bool
    {
        int r = static_cast<int>(tuple.size());
        int i = 0;
        while (i < r && ((i + 1 < r && tuple[i] + 1 == tuple[i + 1]) || (i + 1 == r && tuple[i] == n)))
            ++i;
        if (i >= r)
            return false;
        ++tuple[i];
        for (int j = 0 ; j < i ; ++j)
            tuple[j] = j + 1;
        return true;
    }

    SubsetIndexer::SubsetIndexer(int n, int r) :
        _n(n),
        _r(r),
        _count(binomial(n, r)),
        _cum(r, std::vector<std::uint64_t>(n + 1, 0))
    {
        for (int j = 0 ; j < r ; ++j)
            for (int v = 1 ; v <= n ; ++v)
                _cum[j][v] = _cum[j][v - 1] + binomial(n - v, r - j - 1);
    }

    auto SubsetIndexer::rank(std::span<const int> tuple) const -> std::uint64_t
    {
        std::uint64_t result = 0;
        int previous = 0;
        for (int j = 0 ; j < _r ; ++j) {
            result += _cum[j][tuple[j] - 1] - _cum[j][previous];
            previous = tuple[j];
        }
        return result;
    }

    auto SubsetIndexer::unrank(std::uint64_t rank) const -> std::vector<int>
    {
        std::vector<int> result(_r);
        int previous = 0;
        for (int j = 0 ; j < _r ; ++j) {
            int v = previous + 1;
            while (true) {
                std::uint64_t block = binomial(_n - v, _r - j - 1);
                if (rank < block)
                    break;
                rank -= block;
                ++v;
            }
            result[j] = v;
            previous = v;
        }
        return result;
    }
}
