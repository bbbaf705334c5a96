#include "suite.hpp"

#include <ordram/errors.hpp>
#include <ordram/formulas.hpp>
#include <ordram/io.hpp>
#include <ordram/matching.hpp>
#include <ordram/search.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>

using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    enum Exit { success = 0, refuted = 1, usage = 2, budget = 3 };

    auto number(const ordram::BigInt & v) -> json
    {
        if (auto small = ordram::to_u64(v) ; small && *small < (std::uint64_t{1} << 53))
            return *small;
        if (v < 0 && v > -(ordram::BigInt(1) << 53))
            return static_cast<long long>(v);
        return ordram::to_string(v);
    }

    auto report_json(const ordram::BoundReport & r) -> json
    {
        return json::parse(ordram::to_json_string(r));
    }

    auto exponent_json(const ordram::ExponentBound & b) -> json
    {
        return {{"exponent", ordram::to_string(b.numerator) + (b.denominator == 1 ? "" : "/" + ordram::to_string(b.denominator))},
                {"upper", number(b.value)}};
    }

    auto parse_targets(const vector<string> & specs) -> vector<ordram::OrderedHypergraph>
    {
        vector<ordram::OrderedHypergraph> targets;
        for (auto & s : specs)
            targets.push_back(ordram::parse_target(s));
        return targets;
    }

    struct Formula
    {
        int k = 0, l = 0, r = 0, n = 0, m = 0, p = 0, t = 0, e = 0, h = 0;
        string sizes;
        string big_n;
    };

    auto add_help(CLI::App * app) -> void
    {
        app->set_help_flag("--help", "Print this help message and exit");
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Ordered Ramsey numbers of paths and matchings"};
    add_help(&app);
    app.require_subcommand(1);

    // formula
    auto * formula = app.add_subcommand("formula", "Evaluate a closed form or bound");
    add_help(formula);
    formula->require_subcommand(1);
    Formula f;
    std::function<json ()> evaluate;

    auto sub = [&] (const string & name, const string & text, std::function<json ()> body) {
        auto * s = formula->add_subcommand(name, text);
        add_help(s);
        s->callback([&, body] { evaluate = body; });
        return s;
    };

    auto * loose = sub("loose-path", "Exact OR of (k,l)-paths, or tower bounds when |Q_i| is out of reach", [&] {
        return report_json(ordram::loose_path_report({f.k, f.l, ordram::parse_int_list(f.sizes)}));
    });
    loose->add_option("-k", f.k)->required();
    loose->add_option("-l", f.l)->required();
    loose->add_option("-e", f.sizes, "comma-separated path lengths")->required();

    auto * cor = sub("corollary", "(k-l) prod e + l for 2l <= k", [&] {
        return json{{"exact", number(ordram::corollary_i2(f.k, f.l, ordram::parse_int_list(f.sizes)))}};
    });
    cor->add_option("-k", f.k)->required();
    cor->add_option("-l", f.l)->required();
    cor->add_option("-e", f.sizes)->required();

    auto * relation = sub("main-relation", "(k-l)(|Q_i|+1) + l - (k-l)(i-1)", [&] {
        return json{{"exact", number(ordram::theorem_main_relation(f.k, f.l, ordram::parse_int_list(f.sizes)))}};
    });
    relation->add_option("-k", f.k)->required();
    relation->add_option("-l", f.l)->required();
    relation->add_option("-e", f.sizes)->required();

    auto * tb = sub("tower-bounds", "Tower bounds for k < 2l < 2k, both l' variants", [&] {
        auto b = ordram::tower_bounds(f.e, f.t, f.k, f.l);
        return json{{"primary", report_json(b.primary)}, {"alternate", report_json(b.alternate)},
                {"lprime", number(b.lprime_primary)}, {"lprimeAlternate", number(b.lprime_alternate)}};
    });
    tb->add_option("-e", f.e)->required();
    tb->add_option("-t", f.t)->required();
    tb->add_option("-k", f.k)->required();
    tb->add_option("-l", f.l)->required();

    auto * cp = sub("clique-path", "Clique versus monotone path bound", [&] {
        return exponent_json(ordram::bound_clique_path(f.n, f.p, f.t));
    });
    cp->add_option("-n", f.n)->required();
    cp->add_option("-p", f.p)->required();
    cp->add_option("-t", f.t)->required();

    auto * ap = sub("arbitrary-path", "Bound for any ordering of a path on p vertices", [&] {
        return exponent_json(ordram::bound_arbitrary_path(f.p, f.t));
    });
    ap->add_option("-p", f.p)->required();
    ap->add_option("-t", f.t)->required();

    auto * nm = sub("nested-matching", "k(1 + sum(e_i - 1))", [&] {
        return json{{"exact", number(ordram::exact_nested_matching(f.k, ordram::parse_int_list(f.sizes)))}};
    });
    nm->add_option("-k", f.k)->required();
    nm->add_option("-e", f.sizes)->required();

    auto * km = sub("nestable-matching", "(ek)^{(2e-1)^{t-1}}", [&] {
        return json{{"upper", number(ordram::bound_nestable_matching(f.e, f.k, f.t))}};
    });
    km->add_option("-e", f.e)->required();
    km->add_option("-k", f.k)->required();
    km->add_option("-t", f.t)->required();

    auto * um = sub("unordered-matching", "Unordered matching Ramsey number", [&] {
        return json{{"exact", number(ordram::unordered_matching_value(ordram::parse_int_list(f.sizes)))}};
    });
    um->add_option("-e", f.sizes)->required();

    auto * gg = sub("gg-path", "Unordered two-color path Ramsey number", [&] {
        return json{{"exact", number(ordram::gg_path_value(f.n, f.m))}};
    });
    gg->add_option("-n", f.n)->required();
    gg->add_option("-m", f.m)->required();

    auto * cf = sub("cfls", "(2e)^{ceil(lg 2e)^{t-1}} for 2-uniform matchings", [&] {
        return json{{"upper", number(ordram::cfls_matching_bound(f.e, f.t))}};
    });
    cf->add_option("-e", f.e)->required();
    cf->add_option("-t", f.t)->required();

    auto * tw = sub("tower", "tow_h(n)", [&] {
        return number(ordram::tower(f.h, ordram::BigInt(f.big_n)));
    });
    tw->add_option("-h", f.h)->required();
    tw->add_option("-n", f.big_n)->required();

    auto * sq = sub("size-q", "|Q_m(e_1..e_t)|", [&] {
        return number(ordram::size_Q(f.m, ordram::parse_int_list(f.sizes)));
    });
    sq->add_option("-m", f.m)->required();
    sq->add_option("-e", f.sizes)->required();

    // construct
    auto * construct = app.add_subcommand("construct", "Write a verified extremal coloring");
    add_help(construct);
    construct->require_subcommand(1);
    int ck = 0, cl = 0;
    string csizes, cnest, cout_path;
    auto * cpath = construct->add_subcommand("path-avoider", "Coloring avoiding P_{e_j}^{k,l} in color j");
    add_help(cpath);
    cpath->add_option("-k", ck)->required();
    cpath->add_option("-l", cl)->required();
    cpath->add_option("-e", csizes)->required();
    cpath->add_option("-o", cout_path, "output file (stdout when absent)");
    auto * cmatch = construct->add_subcommand("matching-avoider", "Coloring avoiding M_{e_j}^{k,r_j} in color j");
    add_help(cmatch);
    cmatch->add_option("-k", ck)->required();
    cmatch->add_option("-r", cnest)->required();
    cmatch->add_option("-e", csizes)->required();
    cmatch->add_option("-o", cout_path);

    // search
    auto * search = app.add_subcommand("search", "Exact ordered Ramsey number by backtracking");
    add_help(search);
    int sk = 0, st = 0;
    vector<string> stargets;
    ordram::SearchBudget sbudget;
    string switness, sseed;
    search->add_option("-k", sk)->required();
    search->add_option("-t", st)->required();
    search->add_option("--targets", stargets)->required();
    search->add_option("--parallel", sbudget.parallel);
    search->add_option("--max-seconds", sbudget.max_seconds, "per value of N");
    search->add_option("--max-nodes", sbudget.max_nodes, "per value of N");
    search->add_flag("--symmetry", sbudget.symmetry_breaking, "fix the first edge when all targets coincide");
    search->add_option("--witness", switness, "write the witness coloring here");
    search->add_option("--seed-witness", sseed, "coloring file to warm-start from");

    // verify
    auto * verify = app.add_subcommand("verify", "Check that a coloring avoids the targets");
    add_help(verify);
    string vfile;
    vector<string> vtargets;
    std::uint64_t vnodes = 0;
    verify->add_option("coloring", vfile)->required();
    verify->add_option("--targets", vtargets)->required();
    verify->add_option("--max-nodes", vnodes);

    // embed
    auto * embed = app.add_subcommand("embed", "k-nesting of a matching and its embedding into G_{2e-1}^k");
    add_help(embed);
    string ematching;
    std::uint64_t enodes = 0;
    embed->add_option("matching", ematching, "target spec, e.g. file:m.ohg")->required();
    embed->add_option("--max-nodes", enodes);

    // suite
    auto * suite = app.add_subcommand("suite", "Run the acceptance grid");
    add_help(suite);
    string grid = "small";
    string criteria;
    ordram::suite::Options soptions;
    suite->add_option("--grid", grid)->check(CLI::IsMember({"small"}));
    suite->add_option("--criteria", criteria, "comma-separated subset");
    suite->add_option("--parallel", soptions.parallel);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? success : usage;
    }

    try {
        if (formula->parsed()) {
            auto value = evaluate();
            std::cout << (value.is_object() ? value.dump(2) : value.dump()) << "\n";
            return success;
        }

        if (construct->parsed()) {
            ordram::EdgeColoring c;
            vector<ordram::OrderedHypergraph> targets;
            auto sizes = ordram::parse_int_list(csizes);
            if (cpath->parsed()) {
                c = ordram::construct_path_avoider({ck, cl, sizes});
                for (auto e : sizes)
                    targets.push_back(ordram::build_path(ck, cl, e));
            }
            else {
                auto nestings = ordram::parse_int_list(cnest);
                c = ordram::construct_matching_avoider(ck, nestings, sizes);
                for (std::size_t j = 0 ; j < sizes.size() ; ++j)
                    targets.push_back(ordram::build_nested_matching(ck, nestings.at(j), sizes[j]));
            }
            if (! ordram::verify_avoids(c, targets).ok) {
                std::cerr << "internal error: construction does not avoid its targets\n";
                return refuted;
            }
            auto text = ordram::write_coloring(c);
            if (cout_path.empty())
                std::cout << text;
            else {
                ordram::write_text_file(cout_path, text);
                std::cout << json{{"vertices", c.n()}, {"file", cout_path}, {"verified", true}}.dump() << "\n";
            }
            return success;
        }

        if (search->parsed()) {
            auto targets = parse_targets(stargets);
            if (static_cast<int>(targets.size()) != st)
                throw ordram::InvalidArgument("-t must equal the number of targets");
            for (auto & g : targets)
                if (g.k() != sk)
                    throw ordram::InvalidArgument("target uniformity differs from -k");
            std::optional<ordram::EdgeColoring> seed;
            if (! sseed.empty())
                seed = ordram::read_coloring(ordram::read_text_file(sseed));
            auto result = ordram::ordered_ramsey_exact(targets, sbudget, seed);
            if (! switness.empty() && result.witness)
                ordram::write_text_file(switness, ordram::write_coloring(*result.witness));
            std::cout << ordram::ramsey_report_json(stargets, result, result.witness ? switness : "") << "\n";
            return result.value ? success : budget;
        }

        if (verify->parsed()) {
            auto c = ordram::read_coloring(ordram::read_text_file(vfile));
            auto report = ordram::verify_avoids(c, parse_targets(vtargets), vnodes);
            std::cout << ordram::avoidance_report_json(report) << "\n";
            if (report.budget_exhausted && ! report.violation)
                return budget;
            return report.ok ? success : refuted;
        }

        if (embed->parsed()) {
            auto m = ordram::parse_target(ematching);
            std::optional<ordram::KNesting> nesting;
            if (m.k() >= 3 && m.is_matching() && ordram::is_simply_interlacing(m).ok)
                nesting = ordram::find_k_nesting_simply_interlacing(m);
            else {
                auto found = ordram::is_k_nestable(m, enodes);
                if (found.budget_exhausted) {
                    std::cout << json{{"nestable", nullptr}, {"nodes", found.nodes}}.dump() << "\n";
                    return budget;
                }
                nesting = found.nesting;
            }
            if (! nesting) {
                std::cout << json{{"nestable", false}}.dump() << "\n";
                return refuted;
            }
            auto g = ordram::embed_into_G(m, *nesting);
            ordram::GHost host(g.s, m.k());
            bool ok = ordram::is_embedding(host, m, g.embedding);
            std::cout << ordram::embedding_report_json(*nesting, g, ok) << "\n";
            return ok ? success : refuted;
        }

        if (suite->parsed()) {
            vector<int> ids;
            if (criteria.empty())
                for (int id = 1 ; id <= ordram::suite::criterion_count ; ++id)
                    ids.push_back(id);
            else
                ids = ordram::parse_int_list(criteria);
            bool failed = false, partial = false;
            for (auto id : ids) {
                auto outcome = ordram::suite::run(id, soptions);
                std::cout << ordram::suite::format(outcome) << std::endl;
                failed = failed || (! outcome.pass && ! outcome.partial);
                partial = partial || outcome.partial;
            }
            return failed ? refuted : partial ? budget : success;
        }
    }
    catch (const ordram::BudgetExceeded & e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return budget;
    }
    catch (const ordram::InvalidArgument & e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return usage;
    }
    catch (const ordram::ParseError & e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return usage;
    }
    catch (const std::exception & e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return refuted;
    }
    return success;
}
