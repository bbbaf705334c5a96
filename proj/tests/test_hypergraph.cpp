#include "oracles.hpp"

#include <ordram/coloring.hpp>
#include <ordram/errors.hpp>
#include <ordram/hypergraph.hpp>

#include <doctest.h>

#include <random>

using namespace ordram;

namespace
{
    auto edges_of(const OrderedHypergraph & g) -> std::vector<Edge>
    {
        return g.sorted_edges();
    }

    auto random_coloring(int n, int k, int t, std::mt19937_64 & rng) -> EdgeColoring
    {
        std::uniform_int_distribution<int> pick(1, t);
        return make_coloring(n, k, t, [&] (const std::vector<int> &) { return pick(rng); });
    }
}

TEST_SUITE("hypergraph")
{
    TEST_CASE("intersection number")
    {
        CHECK(intersection_number(2, 1) == 2);
        CHECK(intersection_number(3, 2) == 3);
        CHECK(intersection_number(4, 3) == 4);
        CHECK(intersection_number(5, 4) == 5);
        CHECK(intersection_number(5, 0) == 1);
        CHECK(intersection_number(4, 2) == 2);
        CHECK(intersection_number(3, 1) == 2);
        CHECK_THROWS_AS(intersection_number(2, 2), InvalidArgument);
    }

    TEST_CASE("defining inequality of the intersection number")
    {
        for (int k = 2 ; k <= 12 ; ++k)
            for (int l = 1 ; l < k ; ++l) {
                int m = intersection_number(k, l);
                // (m-2)/(m-1) < l/k <= (m-1)/m, cross-multiplied
                CHECK((m - 2) * k < l * (m - 1));
                CHECK(l * m <= (m - 1) * k);
                CHECK(l_prime(k, l) == l - (k - l) * (m - 2));
                CHECK(l_prime(k, l) >= 1);
            }
    }

    TEST_CASE("paths")
    {
        CHECK(edges_of(build_path(2, 1, 3)) == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
        auto loose = build_path(3, 1, 2);
        CHECK(loose.n() == 5);
        CHECK(edges_of(loose) == std::vector<Edge>{{1, 2, 3}, {3, 4, 5}});
        CHECK(edges_of(build_path(3, 0, 2)) == std::vector<Edge>{{1, 2, 3}, {4, 5, 6}});
        CHECK_THROWS_AS(build_path(3, 3, 2), InvalidArgument);
        CHECK_THROWS_AS(build_path(3, 1, 0), InvalidArgument);
    }

    TEST_CASE("path degree equals the intersection number once e >= k")
    {
        for (int k = 2 ; k <= 6 ; ++k)
            for (int l = 1 ; l < k ; ++l)
                for (int e = k ; e <= k + 2 ; ++e)
                    CHECK(build_path(k, l, e).max_degree() == intersection_number(k, l));
    }

    TEST_CASE("nested matchings")
    {
        for (int k = 1 ; k <= 4 ; ++k)
            for (int r = 0 ; r <= k ; ++r) {
                auto m = build_nested_matching(k, r, 1);
                REQUIRE(m.edge_count() == 1);
                CHECK(m.edges()[0] == first_combination(k));
            }
        CHECK(edges_of(build_nested_matching(2, 1, 2)) == std::vector<Edge>{{1, 4}, {2, 3}});
        for (int k = 1 ; k <= 4 ; ++k)
            for (int e = 1 ; e <= 4 ; ++e) {
                CHECK(build_nested_matching(k, 0, e).same_edges(build_path(k, 0, e)));
                CHECK(build_nested_matching(k, k, e).same_edges(build_path(k, 0, e)));
                for (int r = 0 ; r <= k ; ++r) {
                    auto m = build_nested_matching(k, r, e);
                    CHECK(m.n() == k * e);
                    CHECK(m.is_matching());
                    CHECK(m.reversed().same_edges(build_nested_matching(k, k - r, e)));
                }
            }
        CHECK_THROWS_AS(build_nested_matching(3, 4, 2), InvalidArgument);
    }

    TEST_CASE("G")
    {
        auto g0 = build_G(0, 3, GMode::concatenation);
        CHECK(g0.n() == 1);
        CHECK(g0.edge_count() == 0);
        for (int s = 1 ; s <= 4 ; ++s)
            CHECK(build_G(s, 2, GMode::blowup).same_edges(build_complete(1 << s, 2)));
        auto g23 = build_G(2, 3, GMode::blowup);
        CHECK(g23.n() == 9);
        CHECK(g23.edge_count() == 30);
        CHECK_THROWS_AS(build_G(20, 3, GMode::concatenation), BudgetExceeded);
    }

    TEST_CASE("both G constructions agree")
    {
        for (int k = 2 ; k <= 9 ; ++k) {
            long long n = 1;
            // G_2^k has k^k transversal edges; beyond k = 6 only s <= 1 is small enough to materialize
            for (int s = 0 ; n <= 81 && (s <= 1 || k <= 6) ; ++s, n *= k)
                CHECK(build_G(s, k, GMode::concatenation).same_edges(build_G(s, k, GMode::blowup)));
        }
    }

    TEST_CASE("implicit G host matches the explicit graph")
    {
        for (auto [s, k] : {std::pair{2, 3}, {3, 3}, {2, 4}, {3, 2}}) {
            auto g = build_G(s, k, GMode::concatenation);
            GHost host(s, k);
            CHECK(host.n() == g.n());
            for (auto & e : oracle::all_edges(g.n(), k))
                CHECK(host.has_edge(e.data()) == g.has_edge(e));
        }
    }

    TEST_CASE("complete graphs")
    {
        CHECK(build_complete(3, 2).edge_count() == 3);
        CHECK(build_complete(4, 3).edge_count() == 4);
        CHECK(build_complete(6, 3).edge_count() == 20);
        auto k63 = build_complete(6, 3);
        CHECK(std::is_sorted(k63.edges().begin(), k63.edges().end()));
    }

    TEST_CASE("containment examples")
    {
        auto edge = build_complete(3, 3);
        auto id = contains_ordered(edge, edge);
        REQUIRE(id);
        CHECK(id->map == std::vector<int>{1, 2, 3});

        OrderedHypergraph fan(3, 2, {{1, 2}, {1, 3}});
        CHECK(! contains_ordered(fan, build_path(2, 1, 2)));

        auto m = build_nested_matching(2, 1, 2);
        auto self = contains_ordered(m, m);
        REQUIRE(self);
        CHECK(self->map == std::vector<int>{1, 2, 3, 4});
    }

    TEST_CASE("complete hosts contain everything that fits")
    {
        std::vector<OrderedHypergraph> family;
        for (int k = 2 ; k <= 3 ; ++k) {
            for (int l = 0 ; l < k ; ++l)
                family.push_back(build_path(k, l, 2));
            for (int r = 0 ; r <= k ; ++r)
                family.push_back(build_nested_matching(k, r, 2));
            family.push_back(build_G(2, k, GMode::blowup));
        }
        for (auto & g : family)
            for (int N = g.k() ; N <= g.n() + 2 ; ++N)
                CHECK(contains_ordered(CompleteHost(N, g.k()), g).embedding.has_value() == (g.n() <= N));
    }

    TEST_CASE("backtracking agrees with map enumeration")
    {
        std::mt19937_64 rng(3);
        std::vector<OrderedHypergraph> patterns{
            build_path(2, 1, 3), build_path(3, 1, 2), build_path(3, 2, 2), build_nested_matching(2, 1, 2),
            OrderedHypergraph(4, 2, {{1, 3}, {2, 4}}), build_nested_matching(3, 1, 2)};
        for (int trial = 0 ; trial < 60 ; ++trial)
            for (auto & p : patterns) {
                int n = 6 + trial % 3;
                auto c = random_coloring(n, p.k(), 2, rng);
                auto edges = oracle::all_edges(n, p.k());
                std::vector<int> colors;
                for (auto & e : edges)
                    colors.push_back(c.color(e));
                auto host = color_class(c, 1);
                auto found = contains_ordered(host, p);
                CHECK(found.has_value() == oracle::contains(n, oracle::color_class(edges, colors, 1), p));
                if (found)
                    CHECK(is_embedding(HypergraphHost(host), p, *found));
            }
    }

    TEST_CASE("structural G matcher agrees with backtracking")
    {
        std::mt19937_64 rng(5);
        for (auto [s, k] : {std::pair{1, 3}, {2, 3}, {2, 2}, {3, 2}, {2, 4}}) {
            auto g = build_G(s, k, GMode::blowup);
            for (int trial = 0 ; trial < 40 ; ++trial) {
                // random small k-uniform pattern
                int n = k + static_cast<int>(rng() % (k + 2));
                auto all = oracle::all_edges(n, k);
                std::vector<Edge> chosen;
                for (auto & e : all)
                    if (rng() % 4 == 0)
                        chosen.push_back(e);
                if (chosen.empty())
                    chosen.push_back(all.front());
                OrderedHypergraph pattern(n, k, chosen);
                auto structural = contains_in_G(s, k, pattern);
                auto generic = contains_ordered(HypergraphHost(g), pattern);
                CHECK(structural.embedding.has_value() == generic.embedding.has_value());
                if (structural.embedding)
                    CHECK(is_embedding(HypergraphHost(g), pattern, *structural.embedding));
            }
        }
    }

    TEST_CASE("monotone path dynamic program agrees with backtracking")
    {
        std::mt19937_64 rng(9);
        for (int trial = 0 ; trial < 200 ; ++trial) {
            int k = 2 + trial % 2;
            int N = k + 3 + trial % (10 - k - 2);
            int l = static_cast<int>(rng() % k);
            auto c = random_coloring(N, k, 2, rng);
            int h = longest_monotone_path(c, 1, l);
            auto host = color_class(c, 1);
            for (int e = 1 ; e <= h + 1 ; ++e) {
                auto path = build_path(k, l, e);
                if (path.n() > N)
                    break;
                CHECK(contains_ordered(host, path).has_value() == (h >= e));
            }
        }
    }

    TEST_CASE("longest monotone path examples")
    {
        auto ones = make_coloring(4, 2, 1, [] (const std::vector<int> &) { return 1; });
        CHECK(longest_monotone_path(ones, 1, 1) == 3);
        auto avoider = construct_path_avoider({2, 1, {2, 2}});
        CHECK(avoider.n() == 4);
        CHECK(longest_monotone_path(avoider, 1, 1) <= 1);
        CHECK(longest_monotone_path(avoider, 2, 1) <= 1);
    }

    TEST_CASE("non-nestable example")
    {
        auto m = non_nestable_example(4);
        CHECK(edges_of(m) == std::vector<Edge>{{1, 2, 5, 6}, {3, 4, 7, 8}});
        for (int k = 4 ; k <= 7 ; ++k) {
            auto g = non_nestable_example(k);
            CHECK(g.k() == k);
            CHECK(g.n() == 2 * k);
            CHECK(g.edge_count() == 2);
            CHECK(g.is_matching());
        }
        CHECK_THROWS_AS(non_nestable_example(3), InvalidArgument);
    }

    TEST_CASE("hypergraph file roundtrip")
    {
        auto g = build_nested_matching(3, 1, 3);
        auto text = write_hypergraph(g);
        CHECK(text.rfind("ohg v1 k=3 n=9\n", 0) == 0);
        auto back = read_hypergraph(text);
        CHECK(back.n() == g.n());
        CHECK(back.same_edges(g));
        CHECK_THROWS_AS(read_hypergraph("ohg v1 k=2 n=3\n1 4\n"), ParseError);
        CHECK_THROWS_AS(read_hypergraph("ohg v1 k=2 n=3\n2 1\n"), ParseError);
    }

    TEST_CASE("invalid hypergraphs are rejected")
    {
        CHECK_THROWS_AS(OrderedHypergraph(3, 2, {{2, 1}}), InvalidArgument);
        CHECK_THROWS_AS(OrderedHypergraph(3, 2, {{1, 2}, {1, 2}}), InvalidArgument);
        CHECK_THROWS_AS(OrderedHypergraph(3, 2, {{1, 4}}), InvalidArgument);
    }
}
