#include <ordram/errors.hpp>
#include <ordram/paths.hpp>

#include <string>

namespace ordram
{
    auto intersection_number(int k, int l) -> int
    {
        if (! (k > l && l >= 0))
            throw InvalidArgument("intersection number needs k > l >= 0, got k=" + std::to_string(k) + " l=" + std::to_string(l));
        if (l == 0)
            return 1;
        // (m-2)k < l(m-1) and lm <= k(m-1)
        for (int m = 2 ; ; ++m)
            if ((m - 2) * k < l * (m - 1) && l * m <= k * (m - 1))
                return m;
    }

    auto l_prime(int k, int l) -> int
    {
        return l - (k - l) * (intersection_number(k, l) - 2);
    }

    auto PathFamilySpec::validate() const -> void
    {
        if (! (k > l && l >= 0))
            throw InvalidArgument("path family needs k > l >= 0");
        if (sizes.empty())
            throw InvalidArgument("path family needs at least one color");
        for (auto e : sizes)
            if (e < 1)
                throw InvalidArgument("path lengths must be positive");
    }
}
