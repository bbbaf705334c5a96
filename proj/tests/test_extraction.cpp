#include <ordram/extraction.hpp>
#include <ordram/errors.hpp>
#include <ordram/formulas.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace ordram;

TEST_SUITE("extraction")
{
    TEST_CASE("ordered path graphs")
    {
        auto p = ordered_path_graph({2, 4, 1, 3});
        CHECK(p.n() == 4);
        CHECK(p.sorted_edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 4}});
        CHECK(clique_path_exponent(2, 2, 2) == 5);
        CHECK(clique_path_exponent(1, 3, 2) == 3);
    }

    TEST_CASE("clique or path base case")
    {
        // n = 1: 2^p vertices, either a color-1 edge or the whole path in another color
        std::mt19937_64 rng(1);
        for (int p = 1 ; p <= 3 ; ++p) {
            std::vector<int> ordering(1 << p);
            std::iota(ordering.begin(), ordering.end(), 1);
            for (int trial = 0 ; trial < 30 ; ++trial) {
                std::shuffle(ordering.begin(), ordering.end(), rng);
                std::uniform_int_distribution<int> pick(1, 2);
                auto c = make_coloring(1 << p, 2, 2, [&] (const std::vector<int> &) { return pick(rng); });
                auto out = extract_clique_or_path(c, 1, p, ordering);
                CHECK(verify_clique_or_path(c, 1, ordering, out));
            }
        }
    }

    TEST_CASE("all edges in color two give the path")
    {
        std::vector<int> ordering{3, 1, 4, 2};
        auto c = make_coloring(32, 2, 2, [] (const std::vector<int> &) { return 2; });
        auto out = extract_clique_or_path(c, 2, 2, ordering);
        CHECK(out.kind == CliqueOrPath::Kind::path);
        CHECK(out.color == 2);
        CHECK(verify_clique_or_path(c, 2, ordering, out));
    }

    TEST_CASE("all edges in color one give the clique")
    {
        std::vector<int> ordering{1, 2, 3, 4};
        auto c = make_coloring(32, 2, 2, [] (const std::vector<int> &) { return 1; });
        auto out = extract_clique_or_path(c, 2, 2, ordering);
        CHECK(out.kind == CliqueOrPath::Kind::clique);
        CHECK(out.vertices.size() == 4);
        CHECK(verify_clique_or_path(c, 2, ordering, out));
    }

    TEST_CASE("clique or path on random colorings")
    {
        std::mt19937_64 rng(2);
        std::vector<int> ordering{1, 2, 3, 4};
        auto n = bound_clique_path(2, 2, 2).value.convert_to<int>();
        REQUIRE(n == 32);
        for (int trial = 0 ; trial < 50 ; ++trial) {
            std::shuffle(ordering.begin(), ordering.end(), rng);
            std::uniform_int_distribution<int> pick(1, 2);
            auto c = make_coloring(n, 2, 2, [&] (const std::vector<int> &) { return pick(rng); });
            auto out = extract_clique_or_path(c, 2, 2, ordering);
            CHECK(verify_clique_or_path(c, 2, ordering, out));
        }
    }

    TEST_CASE("clique or path refuses small hosts")
    {
        EdgeColoring c(31, 2, 2);
        CHECK_THROWS_AS(extract_clique_or_path(c, 2, 2, {1, 2, 3, 4}), InvalidArgument);
    }

    TEST_CASE("G or matching base cases")
    {
        EdgeColoring one(1 + 2, 3, 2);
        auto edge = build_complete(3, 3);
        auto g0 = extract_G_or_matching(one, 0, {edge}, 3);
        CHECK(g0.kind == GOrMatching::Kind::g);
        CHECK(g0.vertices.size() == 1);

        for (int color = 1 ; color <= 2 ; ++color) {
            auto c = make_coloring(3, 3, 2, [&] (const std::vector<int> &) { return color; });
            auto out = extract_G_or_matching(c, 1, {edge}, 3);
            CHECK(verify_G_or_matching(c, 1, {edge}, out));
            CHECK((out.kind == GOrMatching::Kind::g) == (color == 1));
        }
    }

    TEST_CASE("G or matching on random colorings")
    {
        std::mt19937_64 rng(4);
        auto m = build_nested_matching(3, 1, 2);
        for (int trial = 0 ; trial < 30 ; ++trial) {
            std::uniform_int_distribution<int> pick(1, 2);
            auto c = make_coloring(9, 3, 2, [&] (const std::vector<int> &) { return pick(rng); });
            auto out = extract_G_or_matching(c, 1, {m}, 9);
            CHECK(verify_G_or_matching(c, 1, {m}, out));
        }
        // two levels: N = 9^2
        for (int trial = 0 ; trial < 3 ; ++trial) {
            std::uniform_int_distribution<int> pick(1, 8);
            auto c = make_coloring(81, 3, 2, [&] (const std::vector<int> &) { return pick(rng) == 1 ? 2 : 1; });
            auto out = extract_G_or_matching(c, 2, {m}, 9);
            CHECK(verify_G_or_matching(c, 2, {m}, out));
        }
    }

    TEST_CASE("G or matching refuses small hosts")
    {
        EdgeColoring c(8, 3, 2);
        CHECK_THROWS_AS(extract_G_or_matching(c, 1, {build_nested_matching(3, 1, 2)}, 9), InvalidArgument);
    }
}
