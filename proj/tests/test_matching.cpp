#include "oracles.hpp"

#include <ordram/errors.hpp>
#include <ordram/matching.hpp>

#include <doctest.h>

#include <random>

using namespace ordram;

namespace
{
    auto random_matching(int k, int e, std::mt19937_64 & rng) -> OrderedHypergraph
    {
        std::vector<int> vertices(k * e);
        for (int v = 0 ; v < k * e ; ++v)
            vertices[v] = v + 1;
        std::shuffle(vertices.begin(), vertices.end(), rng);
        std::vector<Edge> edges;
        for (int a = 0 ; a < e ; ++a) {
            Edge edge(vertices.begin() + a * k, vertices.begin() + (a + 1) * k);
            std::sort(edge.begin(), edge.end());
            edges.push_back(edge);
        }
        return OrderedHypergraph(k * e, k, edges);
    }

    auto check_embedding(const OrderedHypergraph & m, const GEmbedding & g) -> void
    {
        auto e = static_cast<int>(m.edge_count());
        CHECK(g.s == 2 * e - 1);
        CHECK(is_embedding(GHost(g.s, m.k()), m, g.embedding));
        CHECK(contains_in_G(g.s, m.k(), m).embedding.has_value());
    }
}

TEST_SUITE("matching")
{
    TEST_CASE("pair classes")
    {
        CHECK(classify_pair({1, 3}, {2, 4}) == PairClass::interlace);
        CHECK(classify_pair({1, 4}, {2, 3}) == PairClass::nest);
        CHECK(classify_pair({1, 2, 5, 6}, {3, 4, 7, 8}) == PairClass::neither);
        CHECK(classify_pair({1, 2}, {3, 4}) == PairClass::nest);
        CHECK(classify_pair({1, 3, 5}, {2, 4, 6}) == PairClass::interlace);
        CHECK_THROWS_AS(classify_pair({1, 3}, {3, 4}), InvalidArgument);
    }

    TEST_CASE("pair classes are symmetric")
    {
        std::mt19937_64 rng(1);
        for (int k = 2 ; k <= 5 ; ++k)
            for (int trial = 0 ; trial < 200 ; ++trial) {
                auto m = random_matching(k, 2, rng);
                auto & a = m.edges()[0];
                auto & b = m.edges()[1];
                CHECK(classify_pair(a, b) == classify_pair(b, a));
            }
    }

    TEST_CASE("simply interlacing")
    {
        std::mt19937_64 rng(2);
        for (int trial = 0 ; trial < 100 ; ++trial)
            CHECK(is_simply_interlacing(random_matching(2, 1 + trial % 6, rng)).ok);
        for (int k = 1 ; k <= 5 ; ++k)
            for (int r = 0 ; r <= k ; ++r)
                for (int e = 1 ; e <= 4 ; ++e)
                    CHECK(is_simply_interlacing(build_nested_matching(k, r, e)).ok);
        auto bad = is_simply_interlacing(non_nestable_example(4));
        CHECK(! bad.ok);
        REQUIRE(bad.violation);
        CHECK(classify_pair(bad.violation->first, bad.violation->second) == PairClass::neither);
        CHECK_THROWS_AS(is_simply_interlacing(build_path(2, 1, 2)), InvalidArgument);
    }

    TEST_CASE("nestings from the spanning-edge construction")
    {
        auto single = build_complete(3, 3);
        auto a = find_k_nesting_simply_interlacing(single);
        CHECK(a.spanning.size() == 1);
        for (auto & child : a.children)
            CHECK(! child);
        CHECK(verify_knesting(single, a));

        auto nested = build_nested_matching(3, 1, 2);
        auto b = find_k_nesting_simply_interlacing(nested);
        CHECK(verify_knesting(nested, b));
        CHECK(nested.sorted_edges() == std::vector<Edge>{{1, 2, 6}, {3, 4, 5}});
        CHECK(b.spanning == std::vector<Edge>{{1, 2, 6}});
        int children = 0;
        for (auto & child : b.children)
            children += child.has_value();
        CHECK(children == 1);

        OrderedHypergraph inter(6, 3, {{1, 3, 5}, {2, 4, 6}});
        auto c = find_k_nesting_simply_interlacing(inter);
        CHECK(c.spanning.size() == 2);
        for (auto & child : c.children)
            CHECK(! child);
        CHECK(verify_knesting(inter, c));

        CHECK_THROWS_AS(find_k_nesting_simply_interlacing(non_nestable_example(4)), InvalidArgument);
        CHECK_THROWS_AS(find_k_nesting_simply_interlacing(build_nested_matching(2, 1, 2)), InvalidArgument);
    }

    TEST_CASE("nesting validation rejects straddling edges")
    {
        OrderedHypergraph m(6, 3, {{1, 2, 3}, {4, 5, 6}});
        KNesting bad{{{1, 2}, {3, 4}, {5, 6}}, {}, {std::nullopt, std::nullopt, std::nullopt}};
        CHECK(! verify_knesting(m, bad));
        auto good = is_k_nestable(m);
        REQUIRE(good.nesting);
        CHECK(verify_knesting(m, *good.nesting));
    }

    TEST_CASE("nestability search")
    {
        std::mt19937_64 rng(3);
        for (int trial = 0 ; trial < 60 ; ++trial) {
            auto m = random_matching(2, 1 + trial % 6, rng);
            auto r = is_k_nestable(m);
            REQUIRE(r.nesting);
            CHECK(verify_knesting(m, *r.nesting));
        }
        for (int k = 4 ; k <= 6 ; ++k)
            CHECK(! is_k_nestable(non_nestable_example(k)).nesting);
    }

    TEST_CASE("simply-interlacing nestings re-validate in the general search")
    {
        std::mt19937_64 rng(4);
        for (int k = 3 ; k <= 4 ; ++k)
            for (int e = 1 ; e <= 5 ; ++e)
                for (int trial = 0 ; trial < 20 ; ++trial) {
                    auto m = random_simply_interlacing(k, e, rng);
                    REQUIRE(is_simply_interlacing(m).ok);
                    CHECK(m.n() == k * e);
                    auto nesting = find_k_nesting_simply_interlacing(m);
                    CHECK(verify_knesting(m, nesting));
                    CHECK(is_k_nestable(m).nesting.has_value());
                }
    }

    TEST_CASE("embedding into G")
    {
        auto single = build_complete(3, 3);
        auto a = embed_into_G(single, find_k_nesting_simply_interlacing(single));
        CHECK(a.s == 1);
        CHECK(a.embedding.map == std::vector<int>{1, 2, 3});

        auto nested = build_nested_matching(3, 1, 2);
        auto b = embed_into_G(nested, find_k_nesting_simply_interlacing(nested));
        check_embedding(nested, b);
        CHECK(GHost(b.s, 3).n() == 27);

        OrderedHypergraph inter(6, 3, {{1, 3, 5}, {2, 4, 6}});
        check_embedding(inter, embed_into_G(inter, find_k_nesting_simply_interlacing(inter)));

        CHECK_THROWS_AS(embed_into_G(build_nested_matching(2, 1, 2), *is_k_nestable(build_nested_matching(2, 1, 2)).nesting), InvalidArgument);
    }

    TEST_CASE("embeddings of random simply-interlacing matchings")
    {
        std::mt19937_64 rng(5);
        for (int k = 3 ; k <= 4 ; ++k)
            for (int e = 1 ; e <= 4 ; ++e)
                for (int trial = 0 ; trial < 10 ; ++trial) {
                    auto m = random_simply_interlacing(k, e, rng);
                    check_embedding(m, embed_into_G(m, find_k_nesting_simply_interlacing(m)));
                }
    }

    TEST_CASE("general nestings embed too")
    {
        std::mt19937_64 rng(6);
        int embedded = 0;
        for (int trial = 0 ; trial < 200 ; ++trial) {
            auto m = random_matching(3, 3, rng);
            auto r = is_k_nestable(m);
            if (! r.nesting)
                continue;
            ++embedded;
            check_embedding(m, embed_into_G(m, *r.nesting));
        }
        CHECK(embedded > 0);
    }

    TEST_CASE("nesting json")
    {
        auto m = build_nested_matching(3, 1, 2);
        auto text = knesting_to_json(find_k_nesting_simply_interlacing(m));
        CHECK(text.find("intervals") != std::string::npos);
        CHECK(text.find("spanning") != std::string::npos);
    }
}
