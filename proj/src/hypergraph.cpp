#include <ordram/combinatorics.hpp>
#include <ordram/errors.hpp>
#include <ordram/hypergraph.hpp>

#include <algorithm>
#include <map>
#include <tuple>
#include <sstream>

using std::int64_t;
using std::size_t;
using std::string;
using std::uint64_t;
using std::optional;
using std::vector;

namespace ordram
{
    OrderedHypergraph::OrderedHypergraph(int n, int k, vector<Edge> edges) :
        _n(n),
        _k(k),
        _edges(std::move(edges))
    {
        if (n < 0 || k < 1)
            throw InvalidArgument("hypergraph needs n >= 0 and k >= 1");
        for (auto & e : _edges) {
            if (static_cast<int>(e.size()) != k)
                throw InvalidArgument("edge has wrong size");
            for (size_t i = 0 ; i < e.size() ; ++i) {
                if (e[i] < 1 || e[i] > n)
                    throw InvalidArgument("edge vertex out of range");
                if (i > 0 && e[i - 1] >= e[i])
                    throw InvalidArgument("edge not strictly ascending");
            }
        }
        auto sorted = sorted_edges();
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidArgument("duplicate edge");
    }

    auto OrderedHypergraph::has_edge(const Edge & e) const -> bool
    {
        return std::find(_edges.begin(), _edges.end(), e) != _edges.end();
    }

    auto OrderedHypergraph::degree(int v) const -> int
    {
        int result = 0;
        for (auto & e : _edges)
            if (std::binary_search(e.begin(), e.end(), v))
                ++result;
        return result;
    }

    auto OrderedHypergraph::max_degree() const -> int
    {
        vector<int> degrees(_n + 1, 0);
        for (auto & e : _edges)
            for (auto v : e)
                ++degrees[v];
        return _n == 0 ? 0 : *std::max_element(degrees.begin(), degrees.end());
    }

    auto OrderedHypergraph::sorted_edges() const -> vector<Edge>
    {
        auto result = _edges;
        std::sort(result.begin(), result.end());
        return result;
    }

    auto OrderedHypergraph::same_edges(const OrderedHypergraph & other) const -> bool
    {
        return _n == other._n && _k == other._k && sorted_edges() == other.sorted_edges();
    }

    auto OrderedHypergraph::reversed() const -> OrderedHypergraph
    {
        vector<Edge> edges;
        for (auto & e : _edges) {
            Edge r;
            for (auto it = e.rbegin() ; it != e.rend() ; ++it)
                r.push_back(_n + 1 - *it);
            edges.push_back(std::move(r));
        }
        return OrderedHypergraph{_n, _k, std::move(edges)};
    }

    auto OrderedHypergraph::is_matching() const -> bool
    {
        vector<bool> used(_n + 1, false);
        for (auto & e : _edges)
            for (auto v : e) {
                if (used[v])
                    return false;
                used[v] = true;
            }
        return true;
    }

    auto build_path(int k, int l, int e) -> OrderedHypergraph
    {
        if (! (k > l && l >= 0) || e < 1)
            throw InvalidArgument("path needs k > l >= 0 and e >= 1");
        vector<Edge> edges;
        for (int r = 1 ; r <= e ; ++r) {
            Edge edge;
            for (int a = 1 ; a <= k ; ++a)
                edge.push_back((r - 1) * (k - l) + a);
            edges.push_back(std::move(edge));
        }
        return OrderedHypergraph{e * (k - l) + l, k, std::move(edges)};
    }

    auto build_nested_matching(int k, int r, int e) -> OrderedHypergraph
    {
        if (k < 1 || r < 0 || r > k || e < 1)
            throw InvalidArgument("nested matching needs 0 <= r <= k and e >= 1");

        // edge j (1-based) occupies k - r slots on each side of the inner ones; work in final coordinates
        int n = k * e;
        vector<Edge> edges;
        for (int j = 1 ; j <= e ; ++j) {
            Edge edge;
            if (j == 1) {
                int low = (k - r) * (e - 1);
                for (int a = 1 ; a <= k ; ++a)
                    edge.push_back(low + a);
            }
            else {
                int left_end = (k - r) * (e - j + 1);    // the k - r greatest below the previous minimum
                for (int a = k - r - 1 ; a >= 0 ; --a)
                    edge.push_back(left_end - a);
                int right_start = (k - r) * (e - 1) + k + r * (j - 2);
                for (int a = 1 ; a <= r ; ++a)
                    edge.push_back(right_start + a);
            }
            edges.push_back(std::move(edge));
        }
        return OrderedHypergraph{n, k, std::move(edges)};
    }

    namespace
    {
        auto ipow(int64_t base, int exponent, uint64_t cap) -> uint64_t
        {
            uint64_t result = 1;
            for (int i = 0 ; i < exponent ; ++i) {
                result *= static_cast<uint64_t>(base);
                if (result > cap)
                    throw BudgetExceeded("G_s^k exceeds the materialization cap");
            }
            return result;
        }

        const uint64_t g_edge_cap = uint64_t{1} << 24;

        auto g_edge_count(int s, int k) -> uint64_t
        {
            uint64_t result = 0;
            for (int level = 1 ; level <= s ; ++level) {
                auto transversal = ipow(ipow(k, level - 1, g_edge_cap), k, g_edge_cap);
                result = static_cast<uint64_t>(k) * result + transversal;
                if (result > g_edge_cap)
                    throw BudgetExceeded("G_s^k has too many edges to materialize");
            }
            return result;
        }

        auto product_tuples(int k, int radix, auto && visit) -> void
        {
            vector<int> digits(k, 0);
            while (true) {
                visit(digits);
                int i = k - 1;
                while (i >= 0 && digits[i] == radix - 1)
                    digits[i--] = 0;
                if (i < 0)
                    return;
                ++digits[i];
            }
        }
    }

    auto build_G(int s, int k, GMode mode, uint64_t cap) -> OrderedHypergraph
    {
        if (s < 0 || k < 2)
            throw InvalidArgument("G_s^k needs s >= 0 and k >= 2");
        ipow(k, s, cap);
        g_edge_count(s, k);

        int n = 1;
        vector<Edge> edges;
        for (int level = 1 ; level <= s ; ++level) {
            vector<Edge> next;
            if (mode == GMode::concatenation) {
                for (int copy = 0 ; copy < k ; ++copy)
                    for (auto & e : edges) {
                        Edge shifted;
                        for (auto v : e)
                            shifted.push_back(copy * n + v);
                        next.push_back(std::move(shifted));
                    }
                product_tuples(k, n, [&] (const vector<int> & pick) {
                    Edge e;
                    for (int copy = 0 ; copy < k ; ++copy)
                        e.push_back(copy * n + pick[copy] + 1);
                    next.push_back(std::move(e));
                });
            }
            else {
                for (int x = 1 ; x <= n ; ++x) {
                    Edge e;
                    for (int a = 1 ; a <= k ; ++a)
                        e.push_back((x - 1) * k + a);
                    next.push_back(std::move(e));
                }
                for (auto & base : edges)
                    product_tuples(k, k, [&] (const vector<int> & pick) {
                        Edge e;
                        for (int c = 0 ; c < k ; ++c)
                            e.push_back((base[c] - 1) * k + pick[c] + 1);
                        next.push_back(std::move(e));
                    });
            }
            edges = std::move(next);
            n *= k;
        }
        return OrderedHypergraph{n, k, std::move(edges)};
    }

    auto build_complete(int n, int k) -> OrderedHypergraph
    {
        if (n < k || k < 1)
            throw InvalidArgument("complete hypergraph needs n >= k >= 1");
        binomial(n, k);
        vector<Edge> edges;
        auto e = first_combination(k);
        do
            edges.push_back(e);
        while (next_combination(e, n));
        return OrderedHypergraph{n, k, std::move(edges)};
    }

    auto non_nestable_example(int k) -> OrderedHypergraph
    {
        if (k < 4)
            throw InvalidArgument("the non-nestable example needs k >= 4");
        int lo = k / 2, hi = k - lo;
        Edge a, b;
        for (int v = 1 ; v <= lo ; ++v)
            a.push_back(v);
        for (int v = k + 1 ; v <= k + hi ; ++v)
            a.push_back(v);
        for (int v = lo + 1 ; v <= k ; ++v)
            b.push_back(v);
        for (int v = k + hi + 1 ; v <= 2 * k ; ++v)
            b.push_back(v);
        return OrderedHypergraph{2 * k, k, {a, b}};
    }

    auto Host::can_extend(const int *, int, int) const -> bool
    {
        return true;
    }

    HypergraphHost::HypergraphHost(const OrderedHypergraph & g) :
        _g(g),
        _sorted(g.sorted_edges())
    {
    }

    auto HypergraphHost::has_edge(const int * vertices) const -> bool
    {
        Edge e(vertices, vertices + _g.k());
        return std::binary_search(_sorted.begin(), _sorted.end(), e);
    }

    GHost::GHost(int s, int k) :
        _s(s),
        _k(k),
        _n(1)
    {
        if (s < 0 || k < 2)
            throw InvalidArgument("G_s^k needs s >= 0 and k >= 2");
        for (int i = 0 ; i < s ; ++i) {
            _n *= k;
            if (_n > (int64_t{1} << 30))
                throw BudgetExceeded("G_s^k vertex count exceeds int range");
        }
    }

    namespace
    {
        auto digit(int64_t v, int64_t place, int k) -> int
        {
            return static_cast<int>(((v - 1) / place) % k);
        }
    }

    auto GHost::has_edge(const int * vertices) const -> bool
    {
        int64_t place = _n;
        vector<bool> seen(_k);
        for (int d = 0 ; d < _s ; ++d) {
            place /= _k;
            int first = digit(vertices[0], place, _k);
            bool all_equal = true;
            std::fill(seen.begin(), seen.end(), false);
            bool all_distinct = true;
            for (int i = 0 ; i < _k ; ++i) {
                int x = digit(vertices[i], place, _k);
                if (x != first)
                    all_equal = false;
                if (seen[x])
                    all_distinct = false;
                seen[x] = true;
            }
            if (all_equal)
                continue;
            return all_distinct;
        }
        return false;
    }

    auto GHost::can_extend(const int * prefix, int p, int q) const -> bool
    {
        if (q == 0)
            return p == _k && has_edge(prefix);
        if (p == 0)
            return p + q == _k && _n >= _k;
        if (p + q != _k)
            return false;

        int64_t place = _n;
        vector<bool> seen(_k);
        for (int d = 0 ; d < _s ; ++d) {
            place /= _k;
            int first = digit(prefix[0], place, _k);
            bool all_equal = true, all_distinct = true;
            int largest = 0;
            std::fill(seen.begin(), seen.end(), false);
            for (int i = 0 ; i < p ; ++i) {
                int x = digit(prefix[i], place, _k);
                if (x != first)
                    all_equal = false;
                if (seen[x])
                    all_distinct = false;
                seen[x] = true;
                largest = std::max(largest, x);
            }
            if (all_equal) {
                if (p == 1 && first + q <= _k - 1)
                    return true;
                continue;
            }
            return all_distinct && largest + q <= _k - 1;
        }
        return false;
    }

    namespace
    {
        struct Matcher
        {
            const Host & host;
            const OrderedHypergraph & pattern;
            const ContainmentOptions & options;
            int n;
            int64_t host_n;
            vector<vector<size_t>> ending_at;
            vector<vector<std::pair<size_t, int>>> open_at;   // edge, number of vertices mapped once v is
            vector<int> forced;
            vector<int> image;
            vector<int> scratch;
            uint64_t nodes = 0;
            bool exhausted = false;

            Matcher(const Host & h, const OrderedHypergraph & g, const ContainmentOptions & o) :
                host(h), pattern(g), options(o), n(g.n()), host_n(h.n()),
                ending_at(g.n() + 1), open_at(g.n() + 1), forced(g.n() + 1, 0), image(g.n() + 1, 0),
                scratch(g.k())
            {
                auto & edges = g.edges();
                for (size_t i = 0 ; i < edges.size() ; ++i) {
                    ending_at[edges[i].back()].push_back(i);
                    for (int j = 0 ; j + 1 < g.k() ; ++j)
                        open_at[edges[i][j]].emplace_back(i, j + 1);
                }
                if (o.forced_edge) {
                    auto & f = edges.at(*o.forced_edge);
                    if (o.forced_image.size() != f.size())
                        throw InvalidArgument("forced image has the wrong size");
                    for (size_t j = 0 ; j < f.size() ; ++j)
                        forced[f[j]] = o.forced_image[j];
                }
            }

            auto consistent(int v) -> bool
            {
                auto & edges = pattern.edges();
                for (auto i : ending_at[v]) {
                    for (int j = 0 ; j < pattern.k() ; ++j)
                        scratch[j] = image[edges[i][j]];
                    if (! host.has_edge(scratch.data()))
                        return false;
                }
                for (auto & [i, p] : open_at[v]) {
                    for (int j = 0 ; j < p ; ++j)
                        scratch[j] = image[edges[i][j]];
                    if (! host.can_extend(scratch.data(), p, pattern.k() - p))
                        return false;
                }
                return true;
            }

            auto search(int v) -> bool
            {
                if (v > n)
                    return true;
                if (options.max_nodes && nodes >= options.max_nodes) {
                    exhausted = true;
                    return false;
                }
                ++nodes;

                int64_t lo = image[v - 1] + 1, hi = host_n - (n - v);
                if (forced[v]) {
                    if (forced[v] < lo || forced[v] > hi)
                        return false;
                    lo = hi = forced[v];
                }
                else {
                    // leave room below the next forced vertex
                    for (int w = v + 1 ; w <= n ; ++w)
                        if (forced[w]) {
                            hi = std::min<int64_t>(hi, forced[w] - (w - v));
                            break;
                        }
                }
                for (int64_t x = lo ; x <= hi ; ++x) {
                    image[v] = static_cast<int>(x);
                    if (consistent(v) && search(v + 1))
                        return true;
                    if (exhausted)
                        return false;
                }
                return false;
            }
        };
    }

    namespace
    {
        // Containment in G_s^k by its block structure: the pattern splits into k consecutive
        // vertex intervals, every edge lies in one interval or meets each interval once, and
        // every interval embeds into G_{s-1}^k.
        struct GBlockMatcher
        {
            int k;
            const OrderedHypergraph & pattern;
            int n;
            std::map<std::tuple<int, int, int>, optional<vector<int>>> memo;   // (a, b, s) -> cut points
            uint64_t nodes = 0;

            auto fits(int a, int b, int s) -> bool
            {
                if (b < a)
                    return true;
                int64_t room = 1;
                for (int i = 0 ; i < s && room < n ; ++i)
                    room *= k;
                if (b - a + 1 > room)
                    return false;
                if (s == 0)
                    return b == a;

                auto key = std::tuple{a, b, s};
                if (auto it = memo.find(key) ; it != memo.end())
                    return it->second.has_value();

                vector<const Edge *> inside;
                for (auto & e : pattern.edges())
                    if (e.front() >= a && e.back() <= b)
                        inside.push_back(&e);

                optional<vector<int>> found;
                vector<int> cuts(k + 1, a);
                cuts[k] = b + 1;
                try_cuts(1, b, s, inside, cuts, found);
                memo[key] = found;
                return found.has_value();
            }

            auto block_of(const vector<int> & cuts, int v) const -> int
            {
                return static_cast<int>(std::upper_bound(cuts.begin() + 1, cuts.begin() + k, v) - (cuts.begin() + 1));
            }

            auto try_cuts(int j, int b, int s, const vector<const Edge *> & inside, vector<int> & cuts,
                    optional<vector<int>> & found) -> void
            {
                if (found)
                    return;
                if (j == k) {
                    ++nodes;
                    for (auto * e : inside) {
                        int first = block_of(cuts, e->front());
                        if (block_of(cuts, e->back()) == first)
                            continue;
                        for (int i = 0 ; i < k ; ++i)
                            if (block_of(cuts, (*e)[i]) != i)
                                return;
                    }
                    for (int i = 0 ; i < k ; ++i)
                        if (! fits(cuts[i], cuts[i + 1] - 1, s - 1))
                            return;
                    found = cuts;
                    return;
                }
                for (int c = cuts[j - 1] ; c <= b + 1 && ! found ; ++c) {
                    cuts[j] = c;
                    try_cuts(j + 1, b, s, inside, cuts, found);
                }
            }

            // 0-based offsets inside G_s^k for vertices a..b
            auto place(int a, int b, int s, int64_t offset, vector<int> & image) -> void
            {
                if (b < a)
                    return;
                if (s == 0) {
                    image[a] = static_cast<int>(offset);
                    return;
                }
                auto & cuts = *memo.at(std::tuple{a, b, s});
                int64_t block = 1;
                for (int i = 0 ; i + 1 < s ; ++i)
                    block *= k;
                for (int i = 0 ; i < k ; ++i)
                    place(cuts[i], cuts[i + 1] - 1, s - 1, offset + i * block, image);
            }
        };
    }

    auto contains_in_G(int s, int k, const OrderedHypergraph & pattern) -> ContainmentResult
    {
        if (pattern.k() != k)
            throw InvalidArgument("uniformity mismatch");
        ContainmentResult result;
        GBlockMatcher m{k, pattern, pattern.n(), {}, 0};
        if (m.fits(1, pattern.n(), s)) {
            vector<int> image(pattern.n() + 1, 0);
            m.place(1, pattern.n(), s, 0, image);
            Embedding e;
            for (int v = 1 ; v <= pattern.n() ; ++v)
                e.map.push_back(image[v] + 1);
            result.embedding = e;
        }
        result.nodes = m.nodes;
        return result;
    }

    auto contains_ordered(const Host & host, const OrderedHypergraph & pattern, const ContainmentOptions & options) -> ContainmentResult
    {
        if (auto * g = dynamic_cast<const GHost *>(&host) ; g && ! options.forced_edge && pattern.k() == g->k())
            return contains_in_G(g->s(), g->k(), pattern);

        if (host.k() != pattern.k())
            throw InvalidArgument("uniformity mismatch");
        ContainmentResult result;
        if (pattern.n() > host.n())
            return result;

        Matcher m(host, pattern, options);
        if (m.search(1))
            result.embedding = Embedding{vector<int>(m.image.begin() + 1, m.image.end())};
        result.nodes = m.nodes;
        result.budget_exhausted = m.exhausted;
        return result;
    }

    auto contains_ordered(const OrderedHypergraph & host, const OrderedHypergraph & pattern) -> std::optional<Embedding>
    {
        HypergraphHost h(host);
        return contains_ordered(h, pattern).embedding;
    }

    auto is_embedding(const Host & host, const OrderedHypergraph & pattern, const Embedding & embedding) -> bool
    {
        if (host.k() != pattern.k() || static_cast<int>(embedding.map.size()) != pattern.n())
            return false;
        for (size_t v = 0 ; v < embedding.map.size() ; ++v) {
            if (embedding.map[v] < 1 || embedding.map[v] > host.n())
                return false;
            if (v > 0 && embedding.map[v - 1] >= embedding.map[v])
                return false;
        }
        vector<int> image(pattern.k());
        for (auto & e : pattern.edges()) {
            for (int j = 0 ; j < pattern.k() ; ++j)
                image[j] = embedding.map[e[j] - 1];
            if (! host.has_edge(image.data()))
                return false;
        }
        return true;
    }

    auto write_hypergraph(const OrderedHypergraph & g) -> string
    {
        std::ostringstream out;
        out << "ohg v1 k=" << g.k() << " n=" << g.n() << "\n";
        for (auto & e : g.edges()) {
            for (size_t j = 0 ; j < e.size() ; ++j)
                out << (j ? " " : "") << e[j];
            out << "\n";
        }
        return out.str();
    }

    namespace
    {
        auto parse_field(const string & token, const string & name) -> int
        {
            if (token.rfind(name + "=", 0) != 0)
                throw ParseError("expected " + name + "=..., got " + token);
            try {
                size_t used = 0;
                auto value = std::stoi(token.substr(name.size() + 1), &used);
                if (used != token.size() - name.size() - 1)
                    throw ParseError("trailing junk in " + token);
                return value;
            }
            catch (const std::logic_error &) {
                throw ParseError("bad number in " + token);
            }
        }
    }

    auto read_hypergraph(const string & text) -> OrderedHypergraph
    {
        std::istringstream in(text);
        string line;
        if (! std::getline(in, line))
            throw ParseError("empty hypergraph file");
        std::istringstream header(line);
        string magic, version, kf, nf;
        header >> magic >> version >> kf >> nf;
        if (magic != "ohg" || version != "v1")
            throw ParseError("bad hypergraph header: " + line);
        int k = parse_field(kf, "k"), n = parse_field(nf, "n");

        vector<Edge> edges;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == string::npos)
                continue;
            std::istringstream row(line);
            Edge e;
            int v;
            while (row >> v)
                e.push_back(v);
            if (! row.eof())
                throw ParseError("bad edge line: " + line);
            edges.push_back(std::move(e));
        }
        try {
            return OrderedHypergraph{n, k, std::move(edges)};
        }
        catch (const InvalidArgument & e) {
            throw ParseError(e.what());
        }
    }
}
