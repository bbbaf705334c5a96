#include "oracles.hpp"

#include <ordram/formulas.hpp>
#include <ordram/search.hpp>

#include <doctest.h>

using namespace ordram;

namespace
{
    auto crossing() -> OrderedHypergraph
    {
        return OrderedHypergraph(4, 2, {{1, 3}, {2, 4}});
    }

    auto pair_of(const OrderedHypergraph & g) -> std::vector<OrderedHypergraph>
    {
        return {g, g};
    }

    // Fixed before the search engine existed, from the brute-force oracle over 2-colorings of K_N, N <= 7.
    constexpr int crossing_matching_value = 5;
}

TEST_SUITE("search")
{
    TEST_CASE("avoider existence examples")
    {
        auto p = pair_of(build_path(2, 1, 2));
        auto found = exists_avoider(4, 2, p);
        CHECK(found.outcome == SearchOutcome::found);
        REQUIRE(found.witness);
        CHECK(verify_avoids(*found.witness, p).ok);
        CHECK(exists_avoider(5, 2, p).outcome == SearchOutcome::none);

        auto m = pair_of(build_nested_matching(2, 1, 2));
        CHECK(exists_avoider(5, 2, m).outcome == SearchOutcome::found);
        CHECK(exists_avoider(6, 2, m).outcome == SearchOutcome::none);
    }

    TEST_CASE("search agrees with the brute-force oracle")
    {
        std::vector<std::vector<OrderedHypergraph>> families{
            pair_of(build_path(2, 1, 2)), pair_of(build_nested_matching(2, 1, 2)), pair_of(crossing()),
            {build_path(2, 1, 3), build_path(2, 1, 2)}, {build_path(2, 0, 2), crossing()},
            {build_path(2, 1, 2), build_path(2, 1, 2), build_path(2, 1, 2)}};
        for (auto & targets : families)
            for (int N = 2 ; N <= 6 ; ++N) {
                if (targets.size() == 3 && N > 5)
                    continue;
                auto r = exists_avoider(N, 2, targets);
                REQUIRE(r.outcome != SearchOutcome::timeout);
                CHECK((r.outcome == SearchOutcome::found) == oracle::avoider_exists(N, 2, targets));
                if (r.witness)
                    CHECK(oracle::avoids(*r.witness, targets));
            }
    }

    TEST_CASE("3-uniform search agrees with the oracle")
    {
        auto targets = pair_of(build_path(3, 2, 2));
        for (int N = 3 ; N <= 6 ; ++N)
            CHECK((exists_avoider(N, 3, targets).outcome == SearchOutcome::found) == oracle::avoider_exists(N, 3, targets));
    }

    TEST_CASE("ordered Ramsey values")
    {
        auto a = ordered_ramsey_exact(pair_of(build_path(2, 1, 2)));
        CHECK(a.value == 5);
        REQUIRE(a.witness);
        CHECK(a.witness->n() == 4);

        auto b = ordered_ramsey_exact(pair_of(build_path(3, 2, 2)));
        CHECK(b.value == 7);
        REQUIRE(b.witness);
        CHECK(verify_avoids(*b.witness, pair_of(build_path(3, 2, 2))).ok);

        auto c = ordered_ramsey_exact(pair_of(crossing()));
        CHECK(c.value == crossing_matching_value);
    }

    TEST_CASE("crossing matching fixture matches the oracle")
    {
        auto targets = pair_of(crossing());
        CHECK(oracle::avoider_exists(crossing_matching_value - 1, 2, targets));
        CHECK(! oracle::avoider_exists(crossing_matching_value, 2, targets));
    }

    TEST_CASE("values are reported only after exhaustion")
    {
        auto r = ordered_ramsey_exact(pair_of(build_path(2, 1, 3)));
        REQUIRE(r.value);
        REQUIRE(! r.per_n.empty());
        CHECK(r.per_n.back().N == *r.value);
        CHECK(r.per_n.back().outcome == SearchOutcome::none);
        for (std::size_t a = 0 ; a + 1 < r.per_n.size() ; ++a)
            CHECK(r.per_n[a].outcome == SearchOutcome::found);
        CHECK(r.value == exact_loose_path({2, 1, {3, 3}}));
    }

    TEST_CASE("closed forms agree with search")
    {
        for (std::vector<int> sizes : {std::vector<int>{2, 2}, {3, 2}, {2, 3}, {3, 3}, {2, 2, 2}}) {
            std::vector<OrderedHypergraph> targets;
            for (int e : sizes)
                targets.push_back(build_path(2, 1, e));
            CHECK(ordered_ramsey_exact(targets).value == exact_loose_path({2, 1, sizes}));
        }
        for (std::vector<int> sizes : {std::vector<int>{2, 2}, {3, 2}}) {
            std::vector<OrderedHypergraph> targets;
            for (int e : sizes)
                targets.push_back(build_nested_matching(2, 0, e));
            CHECK(ordered_ramsey_exact(targets).value == exact_nested_matching(2, sizes));
        }
    }

    TEST_CASE("monotonicity spot check")
    {
        auto targets = pair_of(build_nested_matching(2, 1, 2));
        for (int N = 6 ; N <= 8 ; ++N)
            CHECK(exists_avoider(N, 2, targets).outcome == SearchOutcome::none);
    }

    TEST_CASE("timeouts are never reported as none")
    {
        // exhausting N = 10 here takes about 2e5 nodes
        auto targets = pair_of(build_path(2, 1, 3));
        SearchBudget tiny;
        tiny.max_nodes = 2000;
        auto r = exists_avoider(10, 2, targets, tiny);
        CHECK(r.outcome == SearchOutcome::timeout);
        CHECK(! r.witness);

        auto full = ordered_ramsey_exact(targets, tiny);
        CHECK(! full.value);
        REQUIRE(full.bracket);
        CHECK(full.bracket->first == 9);
        CHECK(full.bracket->second == 10);

        SearchBudget quick;
        quick.max_seconds = 1e-6;
        CHECK(exists_avoider(10, 2, targets, quick).outcome == SearchOutcome::timeout);
    }

    TEST_CASE("parallel search is schedule independent")
    {
        auto targets = std::vector<OrderedHypergraph>{build_path(2, 1, 3), build_path(2, 1, 3)};
        SearchBudget one, many;
        many.parallel = 4;
        for (int N = 6 ; N <= 10 ; ++N) {
            auto a = exists_avoider(N, 2, targets, one);
            auto b = exists_avoider(N, 2, targets, many);
            CHECK(a.outcome == b.outcome);
            if (a.witness && b.witness)
                CHECK(*a.witness == *b.witness);
        }
        auto m = pair_of(crossing());
        for (int N = 3 ; N <= 5 ; ++N) {
            auto a = exists_avoider(N, 2, m, one);
            auto b = exists_avoider(N, 2, m, many);
            CHECK(a.outcome == b.outcome);
            if (a.witness && b.witness)
                CHECK(*a.witness == *b.witness);
        }
    }

    TEST_CASE("symmetry breaking keeps outcomes")
    {
        SearchBudget sym;
        sym.symmetry_breaking = true;
        auto targets = pair_of(build_path(2, 1, 3));
        for (int N = 8 ; N <= 10 ; ++N)
            CHECK(exists_avoider(N, 2, targets, sym).outcome == exists_avoider(N, 2, targets).outcome);
    }

    TEST_CASE("seeds")
    {
        auto targets = pair_of(build_path(2, 1, 2));
        auto seed = construct_path_avoider({2, 1, {2, 2}});
        auto r = exists_avoider(4, 2, targets, {}, seed);
        CHECK(r.outcome == SearchOutcome::found);
        REQUIRE(r.witness);
        CHECK(*r.witness == seed);

        auto constructed = constructed_avoider(pair_of(build_path(3, 2, 2)));
        REQUIRE(constructed);
        CHECK(constructed->n() == 6);
        CHECK(! constructed_avoider({crossing(), crossing()}));
    }
}
