#pragma once

#include <ordram/bigint.hpp>
#include <ordram/paths.hpp>
#include <ordram/poset.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ordram
{
    struct BoundReport
    {
        std::optional<BigInt> lower, upper, exact;
        std::string provenance;
    };

    auto to_json_string(const BoundReport & r) -> std::string;

    /// tow_0(n) = n, tow_h(n) = 2^{tow_{h-1}(n)}.
    auto tower(int h, const BigInt & n) -> BigInt;

    auto exact_loose_path(const PathFamilySpec & spec, Deadline deadline = std::nullopt) -> BigInt;

    /// Exact value when |Q_i| can be counted, otherwise the tower bounds.
    auto loose_path_report(const PathFamilySpec & spec, Deadline deadline = std::nullopt) -> BoundReport;

    auto corollary_i2(int k, int l, const std::vector<int> & sizes) -> BigInt;

    /// (k - l)(|Q_i| + 1) + l - (k - l)(i - 1), checked against exact_loose_path.
    auto theorem_main_relation(int k, int l, const std::vector<int> & sizes, Deadline deadline = std::nullopt) -> BigInt;

    struct TowerBounds
    {
        BoundReport primary;        // additive constant l - (k - l)(i - 1)
        BoundReport alternate;      // additive constant l - (k - l)(i - 2)
        BigInt lprime_primary, lprime_alternate;
    };

    auto tower_bounds(int e, int t, int k, int l) -> TowerBounds;

    struct ExponentBound
    {
        BigInt numerator, denominator;  // reduced exponent
        BigInt value;                   // 2 to the ceiling of the exponent
    };

    auto bound_clique_path(int n, int p, int t) -> ExponentBound;
    auto bound_arbitrary_path(int p, int t) -> ExponentBound;

    auto exact_nested_matching(int k, const std::vector<int> & sizes) -> BigInt;
    auto bound_nestable_matching(int e, int k, int t) -> BigInt;
    auto unordered_matching_value(const std::vector<int> & sizes) -> BigInt;
    auto gg_path_value(int n, int m) -> BigInt;
    auto cfls_matching_bound(int e, int t) -> BigInt;

    /// ceil(lg x) for x >= 1.
    auto ceil_lg(std::int64_t x) -> int;
}
