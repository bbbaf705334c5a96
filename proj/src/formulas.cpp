#include <ordram/errors.hpp>
#include <ordram/formulas.hpp>

#include "json.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

using std::string;
using std::vector;

namespace ordram
{
    auto to_json_string(const BoundReport & r) -> string
    {
        nlohmann::json j;
        auto field = [&] (const char * name, const std::optional<BigInt> & v) {
            if (! v)
                j[name] = nullptr;
            else if (auto small = to_u64(*v) ; small && *small < (std::uint64_t{1} << 53))
                j[name] = *small;
            else
                j[name] = to_string(*v);
        };
        field("lower", r.lower);
        field("upper", r.upper);
        field("exact", r.exact);
        j["provenanceNote"] = r.provenance;
        return j.dump();
    }

    auto ceil_lg(std::int64_t x) -> int
    {
        if (x < 1)
            throw InvalidArgument("ceil_lg needs a positive argument");
        int result = 0;
        while ((std::int64_t{1} << result) < x)
            ++result;
        return result;
    }

    auto tower(int h, const BigInt & n) -> BigInt
    {
        if (h < 0)
            throw InvalidArgument("tower height must be nonnegative");
        BigInt value = n;
        for (int i = 0 ; i < h ; ++i)
            value = pow2(value);
        return value;
    }

    auto exact_loose_path(const PathFamilySpec & spec, Deadline deadline) -> BigInt
    {
        spec.validate();
        if (spec.l < 1)
            throw InvalidArgument("exact value needs k > l >= 1");
        int k = spec.k, l = spec.l, i = spec.i();
        auto q = size_Q(i, spec.sizes, deadline);
        return BigInt(k - l) * q + l - BigInt(k - l) * (i - 2);
    }

    auto loose_path_report(const PathFamilySpec & spec, Deadline deadline) -> BoundReport
    {
        BoundReport report;
        try {
            report.exact = exact_loose_path(spec, deadline);
            report.lower = report.upper = report.exact;
            report.provenance = "exact: (k-l)|Q_i| + l - (k-l)(i-2)";
            return report;
        }
        catch (const BudgetExceeded &) {
        }

        int k = spec.k, l = spec.l;
        if (! (k < 2 * l) || spec.sizes.empty())
            throw BudgetExceeded("|Q_i| is out of reach and no tower bound applies");
        int t = spec.colors();
        auto [lo, hi] = std::minmax_element(spec.sizes.begin(), spec.sizes.end());
        auto low = tower_bounds(std::max(2, *lo), t, k, l);
        auto high = tower_bounds(std::max(2, *hi), t, k, l);
        if (*lo >= 2)
            report.lower = low.primary.lower;
        report.upper = high.primary.upper;
        report.provenance = "tower bounds with the smallest and largest e; |Q_i| out of reach";
        return report;
    }

    auto corollary_i2(int k, int l, const vector<int> & sizes) -> BigInt
    {
        if (! (0 < 2 * l && 2 * l <= k))
            throw InvalidArgument("corollary needs 0 < 2l <= k");
        BigInt product = 1;
        for (auto e : sizes) {
            if (e < 1)
                throw InvalidArgument("path lengths must be positive");
            product *= e;
        }
        BigInt value = BigInt(k - l) * product + l;
        if (value != exact_loose_path(PathFamilySpec{k, l, sizes}))
            throw InvariantViolation("corollary disagrees with the exact value");
        return value;
    }

    auto theorem_main_relation(int k, int l, const vector<int> & sizes, Deadline deadline) -> BigInt
    {
        PathFamilySpec spec{k, l, sizes};
        spec.validate();
        if (l < 1)
            throw InvalidArgument("relation needs k > l >= 1");
        int i = spec.i();
        BigInt tight = size_Q(i, sizes, deadline) + 1;
        BigInt value = BigInt(k - l) * tight + l - BigInt(k - l) * (i - 1);
        if (value != exact_loose_path(spec, deadline))
            throw InvariantViolation("relation disagrees with the exact value");
        return value;
    }

    auto tower_bounds(int e, int t, int k, int l) -> TowerBounds
    {
        if (! (k < 2 * l && 2 * l < 2 * k))
            throw InvalidArgument("tower bounds need k < 2l < 2k");
        if (e < 2 || t < 1)
            throw InvalidArgument("tower bounds need e >= 2 and t >= 1");
        int i = intersection_number(k, l);

        // floor(e^{t-1} / (2 sqrt t)) = floor(sqrt(e^{2t-2} / 4t))
        BigInt et = boost::multiprecision::pow(BigInt(e), t - 1);
        BigInt q = boost::multiprecision::sqrt(BigInt(et * et / (4 * t)));
        std::optional<BigInt> low, high;
        try {
            low = BigInt(k - l) * tower(i - 2, q);
        }
        catch (const BudgetExceeded &) {
        }
        try {
            high = BigInt(k - l) * tower(i - 2, 2 * et);
        }
        catch (const BudgetExceeded &) {
        }
        string missing = high ? "" : "; bounds too large to represent are omitted";

        TowerBounds result;
        result.lprime_primary = BigInt(l) - BigInt(k - l) * (i - 1);
        result.lprime_alternate = BigInt(l) - BigInt(k - l) * (i - 2);
        for (auto * r : {&result.primary, &result.alternate}) {
            auto & shift = r == &result.primary ? result.lprime_primary : result.lprime_alternate;
            if (low)
                r->lower = *low + shift;
            if (high)
                r->upper = *high + shift;
        }
        result.primary.provenance = "tower corollary with l' = l - (k-l)(i-1); e^{t-1}/2sqrt(t) floored" + missing;
        result.alternate.provenance = "tower corollary with l' = l - (k-l)(i-2) as in the exact formula" + missing;
        return result;
    }

    namespace
    {
        auto exponent_bound(const BigInt & numerator, const BigInt & denominator) -> ExponentBound
        {
            auto g = boost::multiprecision::gcd(numerator, denominator);
            ExponentBound result{numerator / g, denominator / g, 0};
            BigInt ceiling = (result.numerator + result.denominator - 1) / result.denominator;
            result.value = pow2(ceiling);
            return result;
        }
    }

    auto bound_clique_path(int n, int p, int t) -> ExponentBound
    {
        if (n < 1 || p < 1 || t < 2)
            throw InvalidArgument("clique-path bound needs n, p >= 1 and t >= 2");
        BigInt top = boost::multiprecision::pow(BigInt(p + 1), t - 1) * (BigInt(n) * p - 1) + 1;
        return exponent_bound(top, p);
    }

    auto bound_arbitrary_path(int p, int t) -> ExponentBound
    {
        if (p < 2 || t < 2)
            throw InvalidArgument("arbitrary-path bound needs p >= 2 and t >= 2");
        int q = ceil_lg(p);
        BigInt top = boost::multiprecision::pow(BigInt(q + 1), t - 1) * (BigInt(q) * q - 1) + 1;
        return exponent_bound(top, q);
    }

    auto exact_nested_matching(int k, const vector<int> & sizes) -> BigInt
    {
        if (k < 1 || sizes.empty())
            throw InvalidArgument("nested matching value needs k >= 1 and at least one color");
        BigInt sum = 1;
        for (auto e : sizes) {
            if (e < 1)
                throw InvalidArgument("matching sizes must be positive");
            sum += e - 1;
        }
        return k * sum;
    }

    auto bound_nestable_matching(int e, int k, int t) -> BigInt
    {
        if (k < 3 || e < 2 || t < 1)
            throw InvalidArgument("nestable matching bound needs k >= 3, e >= 2, t >= 1");
        if (t == 1)
            return BigInt(e) * k;
        BigInt exponent = boost::multiprecision::pow(BigInt(2 * e - 1), t - 1);
        return pow(BigInt(e) * k, exponent);
    }

    auto unordered_matching_value(const vector<int> & sizes) -> BigInt
    {
        if (sizes.empty())
            throw InvalidArgument("need at least one matching size");
        if (! std::is_sorted(sizes.begin(), sizes.end(), std::greater<>()))
            throw InvalidArgument("matching sizes must be sorted in descending order");
        BigInt value = sizes.front() + 1;
        for (auto e : sizes) {
            if (e < 1)
                throw InvalidArgument("matching sizes must be positive");
            value += e - 1;
        }
        return value;
    }

    auto gg_path_value(int n, int m) -> BigInt
    {
        if (m < 1 || n < m)
            throw InvalidArgument("path value needs n >= m >= 1");
        return BigInt(n) + m / 2 + 2;
    }

    auto cfls_matching_bound(int e, int t) -> BigInt
    {
        if (e < 1 || t < 1)
            throw InvalidArgument("matching bound needs e, t >= 1");
        BigInt exponent = boost::multiprecision::pow(BigInt(ceil_lg(2 * e)), t - 1);
        return pow(BigInt(2 * e), exponent);
    }
}
