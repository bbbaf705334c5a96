#pragma once

#include <ordram/bigint.hpp>
#include <ordram/coloring.hpp>

#include <vector>

namespace ordram
{
    /// ordering[a] is the 1-based position, in vertex order, of the (a+1)-th vertex along the path.
    auto ordered_path_graph(const std::vector<int> & ordering) -> OrderedHypergraph;

    /// ((p+1)^{t-1}(np-1)+1)/p, always an integer.
    auto clique_path_exponent(int n, int p, int t) -> BigInt;

    struct CliqueOrPath
    {
        enum class Kind { clique, path } kind = Kind::clique;
        int color = 1;
        /// Clique: ascending host vertices. Path: the embedding map of ordered_path_graph(ordering).
        std::vector<int> vertices;
    };

    /// Color 1 K_{2^n} or a path in some color j >= 2, for a 2-uniform t-coloring on
    /// at least 2^{clique_path_exponent(n, p, t)} vertices.
    auto extract_clique_or_path(const EdgeColoring & c, int n, int p, const std::vector<int> & ordering) -> CliqueOrPath;

    auto verify_clique_or_path(const EdgeColoring & c, int n, const std::vector<int> & ordering, const CliqueOrPath & result) -> bool;

    struct GOrMatching
    {
        enum class Kind { g, matching } kind = Kind::g;
        int color = 1;
        /// G: images of the k^s vertices of G_s^k. Matching: the embedding map of matchings[color - 2].
        std::vector<int> vertices;
    };

    /// Color 1 G_s^k or M_j in color j >= 2, given r >= OR(M_2..M_t) and N >= r^s.
    auto extract_G_or_matching(const EdgeColoring & c, int s, const std::vector<OrderedHypergraph> & matchings, int r) -> GOrMatching;

    auto verify_G_or_matching(const EdgeColoring & c, int s, const std::vector<OrderedHypergraph> & matchings, const GOrMatching & result) -> bool;
}
