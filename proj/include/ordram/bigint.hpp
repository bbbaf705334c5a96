#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace ordram
{
    using BigInt = boost::multiprecision::cpp_int;

    inline auto to_string(const BigInt & value) -> std::string
    {
        return value.str();
    }

    inline auto to_u64(const BigInt & value) -> std::optional<std::uint64_t>
    {
        if (value < 0 || value > std::numeric_limits<std::uint64_t>::max())
            return std::nullopt;
        return value.convert_to<std::uint64_t>();
    }

    /// 2^exponent, refusing exponents whose result would not fit in memory.
    auto pow2(const BigInt & exponent) -> BigInt;

    auto pow(const BigInt & base, const BigInt & exponent) -> BigInt;
}
