#pragma once

#include <ordram/combinatorics.hpp>
#include <ordram/hypergraph.hpp>
#include <ordram/poset.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ordram
{
    inline constexpr std::uint64_t default_edge_cap = std::uint64_t{1} << 28;

    /// Total map from the k-subsets of [N] to colors 1..t, stored by lexicographic rank.
    class EdgeColoring
    {
        private:
            int _n = 0, _k = 1, _t = 1;
            SubsetIndexer _indexer;
            std::vector<std::uint8_t> _colors;

        public:
            EdgeColoring() = default;

            /// Every edge starts with color 1. Refuses more than cap edges.
            EdgeColoring(int n, int k, int t, std::uint64_t cap = default_edge_cap);

            auto n() const -> int { return _n; }
            auto k() const -> int { return _k; }
            auto t() const -> int { return _t; }
            auto edge_count() const -> std::uint64_t { return _colors.size(); }
            auto indexer() const -> const SubsetIndexer & { return _indexer; }
            auto raw() const -> const std::vector<std::uint8_t> & { return _colors; }

            auto color(std::span<const int> edge) const -> int { return _colors[_indexer.rank(edge)]; }
            auto color_at(std::uint64_t rank) const -> int { return _colors[rank]; }
            auto set_color(std::span<const int> edge, int color) -> void;
            auto set_color_at(std::uint64_t rank, int color) -> void;

            /// Calls f(edge, color) for every edge in lexicographic order.
            auto for_each_edge(const std::function<void (const std::vector<int> &, int)> & f) const -> void;

            /// The coloring induced on the given ascending vertex list, relabelled 1..|vertices|.
            auto restrict_to(const std::vector<int> & vertices) const -> EdgeColoring;

            auto operator== (const EdgeColoring & other) const -> bool;
    };

    auto make_coloring(int n, int k, int t, const std::function<int (const std::vector<int> &)> & color_of,
            std::uint64_t cap = default_edge_cap) -> EdgeColoring;

    /// The edges of one color class as a host for containment.
    class ColorClassHost : public Host
    {
        private:
            const SubsetIndexer & _indexer;
            const std::vector<std::uint8_t> & _colors;
            int _color;

        public:
            ColorClassHost(const EdgeColoring & c, int color);
            ColorClassHost(const SubsetIndexer & indexer, const std::vector<std::uint8_t> & colors, int color);

            auto n() const -> std::int64_t override { return _indexer.n(); }
            auto k() const -> int override { return _indexer.r(); }
            auto has_edge(const int * vertices) const -> bool override;
    };

    auto color_class(const EdgeColoring & c, int color) -> OrderedHypergraph;

    /// h(X) for every edge: the longest same-colored monotone (k,l)-path ending at X.
    auto monotone_path_heights(const EdgeColoring & c, int l) -> std::vector<int>;

    auto longest_monotone_path(const EdgeColoring & c, int color, int l) -> int;

    /// A color-colored P_e^{k,l} as an embedding of build_path(k, l, e), if there is one.
    auto find_monotone_path(const EdgeColoring & c, int color, int l, int e) -> std::optional<Embedding>;

    /// (l, e) when g is exactly build_path(k, l, e).
    auto recognise_path(const OrderedHypergraph & g) -> std::optional<std::pair<int, int>>;

    struct Violation
    {
        int color = 0;
        Embedding embedding;
    };

    struct AvoidanceReport
    {
        bool ok = true;
        std::optional<Violation> violation;
        bool budget_exhausted = false;
    };

    /// ok iff no color class j contains targets[j - 1]. Standard paths use the dynamic program.
    auto verify_avoids(const EdgeColoring & c, const std::vector<OrderedHypergraph> & targets, std::uint64_t max_nodes = 0) -> AvoidanceReport;

    /// Minimum element of y \ x under the canonical order of Q_{m-1}.
    auto descent_selector(const QTower & tower, int m, std::size_t x, std::size_t y) -> std::size_t;

    /// The Q_1 element f^{(i-1)} of a descent-free list in Q_i.
    auto collapse_to_q1(const QTower & tower, int i, std::vector<std::size_t> ys) -> std::size_t;

    auto construct_path_avoider(const PathFamilySpec & spec, std::size_t q_cap = default_materialization_cap,
            std::uint64_t edge_cap = default_edge_cap) -> EdgeColoring;

    auto rational_reduction(const std::vector<int> & edge, int k, int l) -> std::vector<int>;
    auto canonical_preimage(const std::vector<int> & edge, int k, int l) -> std::vector<int>;

    /// i-uniform coloring on n vertices to a k-uniform one on (k - l) n + l' - 1 vertices.
    auto lift_coloring(const EdgeColoring & c, int k, int l, std::uint64_t edge_cap = default_edge_cap) -> EdgeColoring;

    /// k-uniform coloring on N' vertices to an i-uniform one on floor((N' - l') / (k - l)) + 1 vertices.
    auto project_coloring(const EdgeColoring & c, int k, int l) -> EdgeColoring;

    auto lifted_size(int n, int k, int l) -> int;
    auto projected_size(int n, int k, int l) -> int;

    /// Interval coloring on k(1 + sum(e_i - 1)) - 1 vertices avoiding M_{e_i}^{k, r_i} in color i.
    auto construct_matching_avoider(int k, const std::vector<int> & nestings, const std::vector<int> & sizes) -> EdgeColoring;

    struct Certificate
    {
        int k = 0, l = 0, i = 0, lprime = 0;
        /// g[m - 1][rank] for subsets of size k - (m - 1)(k - l), in lexicographic rank.
        std::vector<std::vector<std::uint32_t>> g;
        /// phi[x - l'] for x in l'..N.
        std::vector<std::size_t> phi;
        std::vector<std::size_t> fiber_sizes;
        std::size_t max_fiber = 0;
        bool no_descent = true;
        bool fibers_ok = true;

        auto ok() const -> bool { return no_descent && fibers_ok; }
    };

    struct CertificateOutcome
    {
        std::optional<Certificate> certificate;
        std::optional<Violation> violation;
    };

    /// The g-map tower and phi for a coloring that avoids the path family.
    auto upper_bound_certificate(const EdgeColoring & c, const PathFamilySpec & spec,
            std::size_t q_cap = default_materialization_cap) -> CertificateOutcome;

    auto upper_bound_certificate(const EdgeColoring & c, const PathFamilySpec & spec, const QTower & tower) -> CertificateOutcome;

    auto write_coloring(const EdgeColoring & c) -> std::string;
    auto read_coloring(const std::string & text) -> EdgeColoring;
}
