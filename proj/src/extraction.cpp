#include <ordram/errors.hpp>
#include <ordram/extraction.hpp>

#include <algorithm>
#include <numeric>
#include <unordered_map>

using std::size_t;
using std::vector;

namespace ordram
{
    auto ordered_path_graph(const vector<int> & ordering) -> OrderedHypergraph
    {
        int n = static_cast<int>(ordering.size());
        vector<int> sorted = ordering;
        std::sort(sorted.begin(), sorted.end());
        for (int a = 0 ; a < n ; ++a)
            if (sorted[a] != a + 1)
                throw InvalidArgument("path ordering must be a permutation of 1..n");
        vector<Edge> edges;
        for (int a = 0 ; a + 1 < n ; ++a)
            edges.push_back({std::min(ordering[a], ordering[a + 1]), std::max(ordering[a], ordering[a + 1])});
        return OrderedHypergraph{n, 2, std::move(edges)};
    }

    auto clique_path_exponent(int n, int p, int t) -> BigInt
    {
        if (n < 1 || p < 1 || t < 1)
            throw InvalidArgument("clique/path bound needs n, p, t >= 1");
        BigInt power = 1;
        for (int i = 0 ; i < t - 1 ; ++i)
            power *= p + 1;
        BigInt numerator = power * (BigInt{n} * p - 1) + 1;
        if (numerator % p != 0)
            throw InvariantViolation("clique/path exponent is not an integer");
        return numerator / p;
    }

    namespace
    {
        auto split(const vector<int> & s, size_t parts) -> vector<vector<int>>
        {
            vector<vector<int>> result(parts);
            size_t base = s.size() / parts, extra = s.size() % parts, at = 0;
            for (size_t i = 0 ; i < parts ; ++i) {
                size_t len = base + (i < extra ? 1 : 0);
                result[i].assign(s.begin() + at, s.begin() + at + len);
                at += len;
            }
            return result;
        }

        struct CliquePathSearch
        {
            const EdgeColoring & c;
            int p;
            const vector<int> & ordering;
            int path_color;

            auto is_path_colored(int u, int v) const -> bool
            {
                int e[2] = {std::min(u, v), std::max(u, v)};
                return c.color(e) == path_color;
            }

            // a clique free of path_color on 2^n vertices of s, or a path_color path
            auto run(const vector<int> & s, int n) const -> CliqueOrPath
            {
                int len = 1 << p;
                if (n == 1) {
                    for (size_t a = 0 ; a < s.size() ; ++a)
                        for (size_t b = a + 1 ; b < s.size() ; ++b)
                            if (! is_path_colored(s[a], s[b]))
                                return CliqueOrPath{CliqueOrPath::Kind::clique, 1, {s[a], s[b]}};
                    CliqueOrPath result{CliqueOrPath::Kind::path, path_color, vector<int>(len)};
                    for (int q = 0 ; q < len ; ++q)
                        result.vertices[q] = s.at(q);
                    return result;
                }

                auto intervals = split(s, len);
                size_t m = s.size() / len;

                vector<vector<int>> reach(len);
                std::unordered_map<int, int> parent;
                reach[0] = intervals[ordering[0] - 1];
                for (int a = 1 ; a < len ; ++a)
                    for (auto v : intervals[ordering[a] - 1])
                        for (auto u : reach[a - 1])
                            if (is_path_colored(u, v)) {
                                reach[a].push_back(v);
                                parent[v] = u;
                                break;
                            }

                if (! reach[len - 1].empty()) {
                    CliqueOrPath result{CliqueOrPath::Kind::path, path_color, vector<int>(len)};
                    int v = reach[len - 1].front();
                    for (int a = len - 1 ; a >= 0 ; --a) {
                        result.vertices[ordering[a] - 1] = v;
                        if (a > 0)
                            v = parent.at(v);
                    }
                    return result;
                }

                int big = 0;
                for (int a = 0 ; a < len ; ++a)
                    if (2 * reach[a].size() >= m)
                        big = a;

                auto & next_interval = intervals[ordering[big + 1] - 1];
                vector<int> rest;
                std::set_difference(next_interval.begin(), next_interval.end(), reach[big + 1].begin(), reach[big + 1].end(),
                        std::back_inserter(rest));

                auto left = run(reach[big], n - 1);
                if (left.kind == CliqueOrPath::Kind::path)
                    return left;
                auto right = run(rest, n - 1);
                if (right.kind == CliqueOrPath::Kind::path)
                    return right;

                left.vertices.insert(left.vertices.end(), right.vertices.begin(), right.vertices.end());
                std::sort(left.vertices.begin(), left.vertices.end());
                return left;
            }
        };
    }

    auto extract_clique_or_path(const EdgeColoring & c, int n, int p, const vector<int> & ordering) -> CliqueOrPath
    {
        if (c.k() != 2 || c.t() < 2)
            throw InvalidArgument("clique/path extraction needs a 2-uniform coloring with at least two colors");
        if (static_cast<int>(ordering.size()) != (1 << p))
            throw InvalidArgument("path ordering must have 2^p vertices");
        ordered_path_graph(ordering);

        int t = c.t();
        auto exponent = clique_path_exponent(n, p, t);
        if (exponent >= 31 || c.n() < (1 << exponent.convert_to<int>()))
            throw InvalidArgument("N is below 2^" + exponent.str() + " for this extraction");

        vector<int> s(c.n());
        std::iota(s.begin(), s.end(), 1);

        // peel off the top color, leaving a clique free of it with one color fewer
        for (int tt = t ; tt >= 2 ; --tt) {
            int target = tt == 2 ? n : clique_path_exponent(n, p, tt - 1).convert_to<int>();
            CliquePathSearch search{c, p, ordering, tt};
            auto result = search.run(s, target);
            if (result.kind == CliqueOrPath::Kind::path)
                return result;
            s = std::move(result.vertices);
        }
        return CliqueOrPath{CliqueOrPath::Kind::clique, 1, std::move(s)};
    }

    auto verify_clique_or_path(const EdgeColoring & c, int n, const vector<int> & ordering, const CliqueOrPath & result) -> bool
    {
        if (result.kind == CliqueOrPath::Kind::clique) {
            auto & v = result.vertices;
            if (result.color != 1 || static_cast<int>(v.size()) != (1 << n))
                return false;
            for (size_t a = 0 ; a < v.size() ; ++a) {
                if (v[a] < 1 || v[a] > c.n() || (a > 0 && v[a - 1] >= v[a]))
                    return false;
                for (size_t b = a + 1 ; b < v.size() ; ++b) {
                    int e[2] = {v[a], v[b]};
                    if (c.color(e) != 1)
                        return false;
                }
            }
            return true;
        }
        if (result.color < 2 || result.color > c.t())
            return false;
        ColorClassHost host(c, result.color);
        return is_embedding(host, ordered_path_graph(ordering), Embedding{result.vertices});
    }

    namespace
    {
        struct GMatchingSearch
        {
            const EdgeColoring & c;
            const vector<OrderedHypergraph> & matchings;
            int r, k;

            auto run(const vector<int> & s, int level) const -> GOrMatching
            {
                if (level == 0)
                    return GOrMatching{GOrMatching::Kind::g, 1, {s.front()}};

                auto intervals = split(s, r);
                vector<vector<int>> copies;
                for (auto & v : intervals) {
                    auto sub = run(v, level - 1);
                    if (sub.kind == GOrMatching::Kind::matching)
                        return sub;
                    copies.push_back(std::move(sub.vertices));
                }

                int width = static_cast<int>(copies.front().size());
                EdgeColoring reduced(r, k, c.t() - 1);
                vector<vector<int>> witness(reduced.edge_count());

                auto tuple = first_combination(k);
                std::uint64_t rank = 0;
                vector<int> x(k);
                do {
                    // scan transversals over the embedded copies only
                    vector<int> digits(k, 0);
                    bool found = false;
                    while (true) {
                        for (int j = 0 ; j < k ; ++j)
                            x[j] = copies[tuple[j] - 1][digits[j]];
                        int col = c.color(x);
                        if (col != 1) {
                            reduced.set_color_at(rank, col - 1);
                            witness[rank] = x;
                            found = true;
                            break;
                        }
                        int j = k - 1;
                        while (j >= 0 && digits[j] == width - 1)
                            digits[j--] = 0;
                        if (j < 0)
                            break;
                        ++digits[j];
                    }

                    if (! found) {
                        GOrMatching result{GOrMatching::Kind::g, 1, {}};
                        for (int j = 0 ; j < k ; ++j)
                            result.vertices.insert(result.vertices.end(), copies[tuple[j] - 1].begin(), copies[tuple[j] - 1].end());
                        return result;
                    }
                    ++rank;
                } while (next_combination(tuple, r));

                for (size_t j = 0 ; j < matchings.size() ; ++j) {
                    ColorClassHost host(reduced, static_cast<int>(j) + 1);
                    auto hit = contains_ordered(host, matchings[j]);
                    if (! hit.embedding)
                        continue;
                    GOrMatching result{GOrMatching::Kind::matching, static_cast<int>(j) + 2, vector<int>(matchings[j].n(), 0)};
                    vector<int> image(k);
                    for (auto & edge : matchings[j].edges()) {
                        for (int a = 0 ; a < k ; ++a)
                            image[a] = hit.embedding->map[edge[a] - 1];
                        auto & w = witness[reduced.indexer().rank(image)];
                        for (int a = 0 ; a < k ; ++a)
                            result.vertices[edge[a] - 1] = w[a];
                    }
                    return result;
                }
                throw InvalidArgument("the supplied r is below the ordered Ramsey number of the matchings");
            }
        };
    }

    auto extract_G_or_matching(const EdgeColoring & c, int s, const vector<OrderedHypergraph> & matchings, int r) -> GOrMatching
    {
        int k = c.k();
        if (s < 0 || k < 2 || static_cast<int>(matchings.size()) + 1 != c.t())
            throw InvalidArgument("G/matching extraction needs s >= 0, k >= 2 and one matching per color 2..t");
        for (auto & m : matchings)
            if (m.k() != k || ! m.is_matching() || m.n() != k * static_cast<int>(m.edge_count()))
                throw InvalidArgument("targets must be k-uniform matchings covering their vertex set");
        if (r < k)
            throw InvalidArgument("r must be at least k");

        std::int64_t needed = 1;
        for (int i = 0 ; i < s ; ++i) {
            needed *= r;
            if (needed > c.n())
                break;
        }
        if (c.n() < needed)
            throw InvalidArgument("N is below r^s for this extraction");

        vector<int> all(c.n());
        std::iota(all.begin(), all.end(), 1);
        return GMatchingSearch{c, matchings, r, k}.run(all, s);
    }

    auto verify_G_or_matching(const EdgeColoring & c, int s, const vector<OrderedHypergraph> & matchings, const GOrMatching & result) -> bool
    {
        int k = c.k();
        auto & v = result.vertices;
        for (size_t a = 0 ; a < v.size() ; ++a)
            if (v[a] < 1 || v[a] > c.n() || (a > 0 && v[a - 1] >= v[a]))
                return false;

        if (result.kind == GOrMatching::Kind::matching) {
            if (result.color < 2 || result.color > c.t())
                return false;
            ColorClassHost host(c, result.color);
            return is_embedding(host, matchings[result.color - 2], Embedding{v});
        }

        GHost g(s, k);
        if (result.color != 1 || static_cast<std::int64_t>(v.size()) != g.n())
            return false;
        if (static_cast<int>(v.size()) < k)
            return true;
        vector<int> x(k);
        auto tuple = first_combination(k);
        do {
            if (! g.has_edge(tuple.data()))
                continue;
            for (int j = 0 ; j < k ; ++j)
                x[j] = v[tuple[j] - 1];
            if (c.color(x) != 1)
                return false;
        } while (next_combination(tuple, static_cast<int>(v.size())));
        return true;
    }
}
