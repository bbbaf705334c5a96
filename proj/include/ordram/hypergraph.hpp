#pragma once

#include <ordram/paths.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordram
{
    using Edge = std::vector<int>;

    /// k-uniform hypergraph on the ordered vertex set 1..n.
    class OrderedHypergraph
    {
        private:
            int _n = 0, _k = 1;
            std::vector<Edge> _edges;

        public:
            OrderedHypergraph() = default;

            /// Validates that edges are ascending k-tuples over [1..n] without repeats.
            OrderedHypergraph(int n, int k, std::vector<Edge> edges);

            auto n() const -> int { return _n; }
            auto k() const -> int { return _k; }
            auto edges() const -> const std::vector<Edge> & { return _edges; }
            auto edge_count() const -> std::size_t { return _edges.size(); }

            auto has_edge(const Edge & e) const -> bool;
            auto degree(int v) const -> int;
            auto max_degree() const -> int;

            /// Edges sorted lexicographically.
            auto sorted_edges() const -> std::vector<Edge>;
            auto same_edges(const OrderedHypergraph & other) const -> bool;

            /// Vertex v becomes n + 1 - v.
            auto reversed() const -> OrderedHypergraph;

            auto is_matching() const -> bool;
    };

    auto build_path(int k, int l, int e) -> OrderedHypergraph;

    auto build_nested_matching(int k, int r, int e) -> OrderedHypergraph;

    enum class GMode { concatenation, blowup };

    inline constexpr std::uint64_t default_g_vertex_cap = 1u << 16;

    /// G_s^k built explicitly; refuses more than cap vertices.
    auto build_G(int s, int k, GMode mode, std::uint64_t cap = default_g_vertex_cap) -> OrderedHypergraph;

    auto build_complete(int n, int k) -> OrderedHypergraph;

    /// The two-edge matching that fits no k-nesting, for k >= 4.
    auto non_nestable_example(int k) -> OrderedHypergraph;

    /// Something edges can be looked up in: an explicit graph, a color class, or an implicit G_s^k.
    class Host
    {
        public:
            virtual ~Host() = default;

            virtual auto n() const -> std::int64_t = 0;
            virtual auto k() const -> int = 0;

            /// vertices: k ascending 1-based vertices.
            virtual auto has_edge(const int * vertices) const -> bool = 0;

            /// Could an edge start with these p ascending vertices and continue with q larger ones?
            virtual auto can_extend(const int * prefix, int p, int q) const -> bool;
    };

    class HypergraphHost : public Host
    {
        private:
            const OrderedHypergraph & _g;
            std::vector<Edge> _sorted;

        public:
            explicit HypergraphHost(const OrderedHypergraph & g);

            auto n() const -> std::int64_t override { return _g.n(); }
            auto k() const -> int override { return _g.k(); }
            auto has_edge(const int * vertices) const -> bool override;
    };

    class CompleteHost : public Host
    {
        private:
            std::int64_t _n;
            int _k;

        public:
            CompleteHost(std::int64_t n, int k) : _n(n), _k(k) { }

            auto n() const -> std::int64_t override { return _n; }
            auto k() const -> int override { return _k; }
            auto has_edge(const int *) const -> bool override { return true; }
    };

    /// G_s^k without materializing edges. Vertex v has base-k digits of v - 1, most significant first.
    class GHost : public Host
    {
        private:
            int _s, _k;
            std::int64_t _n;

        public:
            GHost(int s, int k);

            auto s() const -> int { return _s; }
            auto n() const -> std::int64_t override { return _n; }
            auto k() const -> int override { return _k; }
            auto has_edge(const int * vertices) const -> bool override;
            auto can_extend(const int * prefix, int p, int q) const -> bool override;
    };

    /// map[v - 1] is the image of vertex v.
    struct Embedding
    {
        std::vector<int> map;

        auto operator== (const Embedding &) const -> bool = default;
    };

    struct ContainmentOptions
    {
        std::uint64_t max_nodes = 0;            // 0 means unlimited
        std::optional<std::size_t> forced_edge; // index into the pattern's edge list
        Edge forced_image;                      // where the forced edge must land
    };

    struct ContainmentResult
    {
        std::optional<Embedding> embedding;
        std::uint64_t nodes = 0;
        bool budget_exhausted = false;
    };

    /// Searches for an order-preserving map of pattern into host that sends edges to edges.
    auto contains_ordered(const Host & host, const OrderedHypergraph & pattern, const ContainmentOptions & options = {}) -> ContainmentResult;

    auto contains_ordered(const OrderedHypergraph & host, const OrderedHypergraph & pattern) -> std::optional<Embedding>;

    /// Exact containment in G_s^k through its block structure. contains_ordered uses it for a GHost without forced edges.
    auto contains_in_G(int s, int k, const OrderedHypergraph & pattern) -> ContainmentResult;

    /// Strictly increasing, within range, and every pattern edge lands on a host edge.
    auto is_embedding(const Host & host, const OrderedHypergraph & pattern, const Embedding & embedding) -> bool;

    auto write_hypergraph(const OrderedHypergraph & g) -> std::string;
    auto read_hypergraph(const std::string & text) -> OrderedHypergraph;
}
