#include <ordram/bigint.hpp>
#include <ordram/errors.hpp>

namespace ordram
{
    namespace
    {
        // refuse anything that would need more than this many bits
        const BigInt max_result_bits = BigInt{1} << 26;
    }

    auto pow2(const BigInt & exponent) -> BigInt
    {
        if (exponent < 0)
            throw InvalidArgument("negative exponent");
        if (exponent > max_result_bits)
            throw BudgetExceeded("2^" + exponent.str() + " is too large to represent");
        BigInt result = 1;
        result <<= exponent.convert_to<unsigned>();
        return result;
    }

    auto pow(const BigInt & base, const BigInt & exponent) -> BigInt
    {
        if (exponent < 0)
            throw InvalidArgument("negative exponent");
        if (base == 0)
            return exponent == 0 ? 1 : 0;
        if (base == 1 || exponent == 0)
            return 1;
        auto bits = msb(abs(base)) + 1;
        if (exponent * bits > max_result_bits)
            throw BudgetExceeded(base.str() + "^" + exponent.str() + " is too large to represent");
        return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
    }
}
