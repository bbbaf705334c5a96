#pragma once

#include <ordram/coloring.hpp>
#include <ordram/hypergraph.hpp>
#include <ordram/matching.hpp>
#include <ordram/search.hpp>

#include <string>
#include <vector>

namespace ordram
{
    /// path:k,l,e  matching:k,r,e  G:s,k  file:<path>
    auto parse_target(const std::string & text) -> OrderedHypergraph;

    /// Comma-separated positive integers, e.g. "2,3,2".
    auto parse_int_list(const std::string & text) -> std::vector<int>;

    auto read_text_file(const std::string & path) -> std::string;
    auto write_text_file(const std::string & path, const std::string & text) -> void;

    auto ramsey_report_json(const std::vector<std::string> & targets, const RamseyResult & result,
            const std::string & witness_file) -> std::string;

    auto avoidance_report_json(const AvoidanceReport & report) -> std::string;

    auto embedding_report_json(const KNesting & nesting, const GEmbedding & embedding, bool verified) -> std::string;
}
