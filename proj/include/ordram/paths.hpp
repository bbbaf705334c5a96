#pragma once

#include <vector>

namespace ordram
{
    /// i(k, l): the m >= 2 with (m-2)/(m-1) < l/k <= (m-1)/m, or 1 when l = 0.
    auto intersection_number(int k, int l) -> int;

    /// l' = l - (k - l)(i - 2), the size of the last reduction block.
    auto l_prime(int k, int l) -> int;

    struct PathFamilySpec
    {
        int k = 2, l = 1;
        std::vector<int> sizes;

        auto i() const -> int { return intersection_number(k, l); }
        auto lprime() const -> int { return l_prime(k, l); }
        auto colors() const -> int { return static_cast<int>(sizes.size()); }
        auto validate() const -> void;
    };
}
