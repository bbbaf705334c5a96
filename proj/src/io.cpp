#include <ordram/errors.hpp>
#include <ordram/io.hpp>

#include "json.hpp"

#include <fstream>
#include <sstream>

using nlohmann::json;
using std::string;
using std::vector;

namespace ordram
{
    auto parse_int_list(const string & text) -> vector<int>
    {
        vector<int> result;
        std::stringstream in(text);
        string item;
        while (std::getline(in, item, ',')) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(item, &used);
            }
            catch (const std::exception &) {
                throw ParseError("not an integer: '" + item + "'");
            }
            if (used != item.size())
                throw ParseError("not an integer: '" + item + "'");
            result.push_back(value);
        }
        if (result.empty())
            throw ParseError("empty integer list");
        return result;
    }

    auto parse_target(const string & text) -> OrderedHypergraph
    {
        auto colon = text.find(':');
        if (colon == string::npos)
            throw ParseError("target needs a kind prefix: " + text);
        auto kind = text.substr(0, colon);
        auto rest = text.substr(colon + 1);

        if (kind == "file")
            return read_hypergraph(read_text_file(rest));

        auto args = parse_int_list(rest);
        if (kind == "path") {
            if (args.size() != 3)
                throw ParseError("path:k,l,e takes three integers");
            return build_path(args[0], args[1], args[2]);
        }
        if (kind == "matching") {
            if (args.size() != 3)
                throw ParseError("matching:k,r,e takes three integers");
            return build_nested_matching(args[0], args[1], args[2]);
        }
        if (kind == "G") {
            if (args.size() != 2)
                throw ParseError("G:s,k takes two integers");
            return build_G(args[0], args[1], GMode::concatenation);
        }
        throw ParseError("unknown target kind: " + kind);
    }

    auto read_text_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw ParseError("cannot open " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_text_file(const string & path, const string & text) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw ParseError("cannot write " + path);
        out << text;
    }

    auto ramsey_report_json(const vector<string> & targets, const RamseyResult & result, const string & witness_file) -> string
    {
        json j;
        j["targets"] = targets;
        j["perN"] = json::array();
        for (auto & r : result.per_n)
            j["perN"].push_back({{"N", r.N}, {"outcome", to_string(r.outcome)}, {"nodes", r.nodes},
                    {"seconds", r.seconds}, {"source", r.source}});
        j["value"] = result.value ? json(*result.value) : json(nullptr);
        j["witnessFile"] = witness_file.empty() ? json(nullptr) : json(witness_file);
        if (result.bracket)
            j["bracket"] = {result.bracket->first, result.bracket->second};
        return j.dump(2);
    }

    auto avoidance_report_json(const AvoidanceReport & report) -> string
    {
        json j;
        j["ok"] = report.ok;
        j["budgetExhausted"] = report.budget_exhausted;
        if (report.violation)
            j["violation"] = {{"color", report.violation->color}, {"map", report.violation->embedding.map}};
        return j.dump(2);
    }

    auto embedding_report_json(const KNesting & nesting, const GEmbedding & embedding, bool verified) -> string
    {
        json j;
        j["nesting"] = json::parse(knesting_to_json(nesting));
        j["s"] = embedding.s;
        j["map"] = embedding.embedding.map;
        j["verified"] = verified;
        return j.dump(2);
    }
}
