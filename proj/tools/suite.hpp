#pragma once

#include <string>
#include <vector>

namespace ordram::suite
{
    struct Options
    {
        int parallel = 1;
        double search_seconds = 900;    // per exists_avoider call in criterion 3
        unsigned seed = 20240611;
    };

    struct Outcome
    {
        int id = 0;
        bool pass = false;
        bool partial = false;
        std::string detail;
        double seconds = 0;
    };

    inline constexpr int criterion_count = 10;

    auto run(int id, const Options & options) -> Outcome;

    /// "PASS criterion 3 (1.2s): ..." or FAIL / PARTIAL.
    auto format(const Outcome & o) -> std::string;
}
