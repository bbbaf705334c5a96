#pragma once

#include <ordram/hypergraph.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ordram
{
    enum class PairClass { interlace, nest, neither };

    auto to_string(PairClass c) -> std::string;

    auto classify_pair(const Edge & a, const Edge & b) -> PairClass;

    struct InterlacingCheck
    {
        bool ok = true;
        std::optional<std::pair<Edge, Edge>> violation;
    };

    auto is_simply_interlacing(const OrderedHypergraph & m) -> InterlacingCheck;

    /// Intervals are in the coordinates of the matching being nested and partition
    /// [min V, max V]. An empty interval has lo == hi + 1.
    struct KNesting
    {
        std::vector<std::pair<int, int>> intervals;
        std::vector<Edge> spanning;
        std::vector<std::optional<KNesting>> children;
    };

    /// Checks the definition clause by clause against the edges of m.
    auto verify_knesting(const OrderedHypergraph & m, const KNesting & nesting) -> bool;
    auto verify_knesting(int k, const std::vector<Edge> & edges, const KNesting & nesting) -> bool;

    /// The spanning-edge construction for simply-interlacing matchings, k >= 3.
    auto find_k_nesting_simply_interlacing(const OrderedHypergraph & m) -> KNesting;

    struct NestabilityResult
    {
        std::optional<KNesting> nesting;
        bool budget_exhausted = false;
        std::uint64_t nodes = 0;
    };

    /// Exhaustive search over interval cuts with memoisation on the edge subset.
    auto is_k_nestable(const OrderedHypergraph & m, std::uint64_t max_nodes = 0) -> NestabilityResult;

    struct GEmbedding
    {
        int s = 0;
        Embedding embedding;
    };

    /// Embeds a k-nested matching with e edges into G_{2e-1}^k, k >= 3.
    auto embed_into_G(const OrderedHypergraph & m, const KNesting & nesting) -> GEmbedding;

    /// A random simply-interlacing k-uniform matching with e edges on [ke].
    auto random_simply_interlacing(int k, int e, std::mt19937_64 & rng) -> OrderedHypergraph;

    auto knesting_to_json(const KNesting & nesting) -> std::string;
}
