#include <ordram/coloring.hpp>
#include <ordram/errors.hpp>
#include <ordram/formulas.hpp>

#include <doctest.h>

using namespace ordram;

TEST_SUITE("formulas")
{
    TEST_CASE("towers")
    {
        CHECK(tower(0, 7) == 7);
        CHECK(tower(1, 3) == 8);
        CHECK(tower(2, 2) == 16);
        CHECK(tower(3, 2) == 65536);
        CHECK(tower(2, 3) == 256);
        CHECK_THROWS_AS(tower(6, 2), BudgetExceeded);
    }

    TEST_CASE("exact loose paths")
    {
        CHECK(exact_loose_path({2, 1, {2, 2}}) == 5);
        CHECK(exact_loose_path({3, 2, {2, 2}}) == 7);
        CHECK(exact_loose_path({4, 2, {2, 2}}) == 10);
        // tight graph paths: product of sizes plus one
        CHECK(exact_loose_path({2, 1, {3, 4, 2}}) == 25);
        CHECK_THROWS_AS(exact_loose_path({3, 0, {2, 2}}), InvalidArgument);
    }

    TEST_CASE("corollary for intersection number two")
    {
        CHECK(corollary_i2(2, 1, {2, 2}) == 5);
        CHECK(corollary_i2(3, 1, {2, 2}) == 9);
        CHECK(corollary_i2(4, 2, {3, 2}) == 14);
        CHECK_THROWS_AS(corollary_i2(3, 2, {2, 2}), InvalidArgument);
    }

    TEST_CASE("corollary agrees with the exact value on its domain")
    {
        for (int k = 2 ; k <= 10 ; ++k)
            for (int l = 1 ; 2 * l <= k ; ++l)
                for (std::vector<int> sizes : {std::vector<int>{2, 2}, {3, 2}, {4}, {2, 3, 4}, {1, 3}})
                    CHECK(corollary_i2(k, l, sizes) == exact_loose_path({k, l, sizes}));
    }

    TEST_CASE("main relation")
    {
        CHECK(theorem_main_relation(3, 2, {2, 2}) == 7);
        CHECK(theorem_main_relation(2, 1, {2, 2}) == 5);
        CHECK(theorem_main_relation(4, 2, {2, 2}) == 10);
        for (int k = 2 ; k <= 5 ; ++k)
            for (int l = 1 ; l < k ; ++l)
                for (std::vector<int> sizes : {std::vector<int>{2}, {3}, {2, 2}, {3, 2}, {3, 3}}) {
                    if (size_Q(intersection_number(k, l), sizes) > 100000)
                        continue;
                    CHECK(theorem_main_relation(k, l, sizes) == exact_loose_path({k, l, sizes}));
                }
    }

    TEST_CASE("exact value matches the construction size")
    {
        for (int k = 2 ; k <= 4 ; ++k)
            for (int l = 1 ; l < k ; ++l)
                for (std::vector<int> sizes : {std::vector<int>{2, 2}, {3, 2}}) {
                    PathFamilySpec spec{k, l, sizes};
                    CHECK(BigInt(construct_path_avoider(spec).n() + 1) == exact_loose_path(spec));
                }
    }

    TEST_CASE("loose path report")
    {
        auto small = loose_path_report({3, 2, {2, 2}});
        CHECK(small.exact == 7);
        CHECK(! small.provenance.empty());
        auto json = to_json_string(small);
        CHECK(json.find("\"exact\"") != std::string::npos);
    }

    TEST_CASE("tower bounds")
    {
        CHECK_THROWS_AS(tower_bounds(2, 2, 4, 2), InvalidArgument);
        auto b = tower_bounds(2, 2, 3, 2);
        CHECK(b.lprime_alternate == 1);
        CHECK(b.lprime_primary == 0);
        REQUIRE(b.primary.upper);
        // (k - l) tow_1(2 e^{t-1}) + l'
        CHECK(*b.primary.upper == 16 + b.lprime_primary);
        CHECK(*b.alternate.upper == 16 + b.lprime_alternate);
    }

    TEST_CASE("tower bounds are ordered and bracket the exact value")
    {
        for (int e = 2 ; e <= 5 ; ++e)
            for (int t = 1 ; t <= 4 ; ++t)
                for (auto [k, l] : {std::pair{3, 2}, {4, 3}, {5, 4}, {5, 3}}) {
                    auto b = tower_bounds(e, t, k, l);
                    for (auto * r : {&b.primary, &b.alternate})
                        if (r->lower && r->upper)
                            CHECK(*r->lower <= *r->upper);
                }
        // containment where the exact value is computable, t >= 2
        for (auto [k, l] : {std::pair{3, 2}, {4, 3}})
            for (int e = 2 ; e <= 3 ; ++e) {
                std::vector<int> sizes(2, e);
                if (size_Q(intersection_number(k, l), sizes) > 100000)
                    continue;
                auto exact = exact_loose_path({k, l, sizes});
                auto b = tower_bounds(e, 2, k, l);
                REQUIRE(b.primary.lower);
                REQUIRE(b.primary.upper);
                CHECK(*b.primary.lower <= exact);
                CHECK(exact <= *b.primary.upper);
            }
    }

    TEST_CASE("pinned exceptions to the tower bounds")
    {
        // t = 1: the upper bound is below the exact value
        auto one = tower_bounds(3, 1, 3, 2);
        CHECK(*one.primary.upper == 4);
        CHECK(exact_loose_path({3, 2, {3}}) == 5);
        // tow_4(0) = 16 exceeds the exact value 13
        auto big = tower_bounds(2, 2, 6, 5);
        CHECK(*big.primary.lower == 16);
        CHECK(exact_loose_path({6, 5, {2, 2}}) == 13);
    }

    TEST_CASE("clique and path bounds")
    {
        CHECK(bound_clique_path(1, 3, 2).value == 8);
        CHECK(bound_clique_path(2, 1, 2).value == 8);
        CHECK(bound_clique_path(2, 2, 2).value == 32);
        CHECK(bound_arbitrary_path(4, 2).value == 32);
        CHECK(bound_arbitrary_path(2, 2).value == 2);
        CHECK(bound_arbitrary_path(8, 2).value == 2048);
        auto r = bound_clique_path(2, 3, 3);
        // exponent ((p+1)^{t-1}(np-1)+1)/p = (16*5+1)/3 = 27
        CHECK(r.numerator == 27);
        CHECK(r.denominator == 1);
    }

    TEST_CASE("fractional exponents round up")
    {
        // ((q+1)^{t-1}(q^2-1)+1)/q with q = 2, t = 3: (9*3+1)/2 = 14
        CHECK(bound_arbitrary_path(4, 3).value == BigInt(1) << 14);
        // q = 3, t = 2: (4*8+1)/3 = 11
        auto odd = bound_arbitrary_path(5, 2);
        CHECK(odd.numerator == 11);
        CHECK(odd.denominator == 1);
        // n = 2, p = 3, t = 2: (4*5+1)/3 = 7
        CHECK(bound_clique_path(2, 3, 2).value == 128);
        // n = 3, p = 2, t = 2: (3*5+1)/2 = 8
        CHECK(bound_clique_path(3, 2, 2).value == 256);
        // n = 2, p = 2, t = 3: (9*3+1)/2 = 14
        CHECK(bound_clique_path(2, 2, 3).value == 16384);
        // a non-integral case: n = 2, p = 4, t = 2: (5*7+1)/4 = 9
        CHECK(bound_clique_path(2, 4, 2).value == 512);
        // n = 3, p = 4, t = 2: (5*11+1)/4 = 14
        CHECK(bound_clique_path(3, 4, 2).value == 16384);
    }

    TEST_CASE("nested matchings")
    {
        CHECK(exact_nested_matching(2, {2, 2}) == 6);
        CHECK(exact_nested_matching(3, {2, 2}) == 9);
        for (int k = 1 ; k <= 5 ; ++k)
            CHECK(exact_nested_matching(k, {1, 1, 1}) == k);
        for (int k = 1 ; k <= 4 ; ++k)
            for (std::vector<int> sizes : {std::vector<int>{2, 2}, {3, 2}, {2, 2, 2}})
                CHECK(exact_nested_matching(k, sizes) == construct_matching_avoider(k, std::vector<int>(sizes.size(), 1 % (k + 1)), sizes).n() + 1);
    }

    TEST_CASE("nestable matchings")
    {
        CHECK(bound_nestable_matching(2, 3, 1) == 6);
        CHECK(bound_nestable_matching(2, 3, 2) == 216);
        CHECK(bound_nestable_matching(3, 3, 2) == 59049);
    }

    TEST_CASE("unordered comparisons")
    {
        CHECK(unordered_matching_value({2, 2}) == 5);
        CHECK(unordered_matching_value({3, 2}) == 7);
        CHECK(unordered_matching_value({1, 1}) == 2);
        CHECK(gg_path_value(3, 2) == 6);
        CHECK(gg_path_value(1, 1) == 3);
        CHECK(gg_path_value(4, 4) == 8);
        // ordered values dominate the unordered ones
        CHECK(exact_nested_matching(2, {3, 2}) >= unordered_matching_value({3, 2}));
        CHECK(exact_loose_path({2, 1, {4, 4}}) >= gg_path_value(4, 4));
        CHECK(exact_loose_path({2, 1, {4, 3}}) >= gg_path_value(4, 3));
    }

    TEST_CASE("ceil lg")
    {
        CHECK(ceil_lg(1) == 0);
        CHECK(ceil_lg(2) == 1);
        CHECK(ceil_lg(3) == 2);
        CHECK(ceil_lg(8) == 3);
        CHECK(ceil_lg(9) == 4);
    }
}
