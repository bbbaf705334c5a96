#pragma once

#include <ordram/coloring.hpp>
#include <ordram/hypergraph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordram
{
    struct SearchBudget
    {
        std::uint64_t max_nodes = 0;    // 0 means unlimited; checked every 1024 nodes
        double max_seconds = 0;         // 0 means unlimited
        int parallel = 1;
        bool deterministic_witness = true;
        bool symmetry_breaking = false; // fix the first edge when all targets coincide
    };

    enum class SearchOutcome { found, none, timeout };

    auto to_string(SearchOutcome o) -> std::string;

    struct AvoiderResult
    {
        SearchOutcome outcome = SearchOutcome::none;
        std::optional<EdgeColoring> witness;
        std::uint64_t nodes = 0;
        double seconds = 0;
    };

    /// Backtracking over edges in colex order with colors tried 1..t.
    /// A seed on exactly N vertices that verifies is returned as is.
    auto exists_avoider(int N, int k, const std::vector<OrderedHypergraph> & targets, const SearchBudget & budget = {},
            const std::optional<EdgeColoring> & seed = std::nullopt) -> AvoiderResult;

    struct NRecord
    {
        int N = 0;
        SearchOutcome outcome = SearchOutcome::none;
        std::uint64_t nodes = 0;
        double seconds = 0;
        std::string source;             // "search" or "construction"
    };

    struct RamseyResult
    {
        std::optional<int> value;
        std::optional<EdgeColoring> witness;   // on value - 1 vertices
        std::vector<NRecord> per_n;
        // on timeout: largest N with an avoider and the first unresolved N
        std::optional<std::pair<int, int>> bracket;
    };

    /// Uses the path or nested-matching construction as a seed when every target belongs to that family.
    auto constructed_avoider(const std::vector<OrderedHypergraph> & targets) -> std::optional<EdgeColoring>;

    auto ordered_ramsey_exact(const std::vector<OrderedHypergraph> & targets, const SearchBudget & budget = {},
            const std::optional<EdgeColoring> & seed = std::nullopt) -> RamseyResult;
}
