#include <ordram/errors.hpp>
#include <ordram/matching.hpp>

#include "json.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

using std::int64_t;
using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::vector;

namespace ordram
{
    auto to_string(PairClass c) -> string
    {
        switch (c) {
            case PairClass::interlace: return "interlace";
            case PairClass::nest:      return "nest";
            case PairClass::neither:   return "neither";
        }
        return "?";
    }

    namespace
    {
        // b fits strictly inside one gap of a, sentinels included
        auto fits_in_gap(const Edge & a, const Edge & b) -> bool
        {
            auto below_first = std::lower_bound(a.begin(), a.end(), b.front()) - a.begin();
            auto below_last = std::lower_bound(a.begin(), a.end(), b.back()) - a.begin();
            return below_first == below_last;
        }

        auto gap_index(const Edge & a, const Edge & b) -> optional<int>
        {
            auto below_first = std::lower_bound(a.begin(), a.end(), b.front()) - a.begin();
            auto below_last = std::lower_bound(a.begin(), a.end(), b.back()) - a.begin();
            if (below_first != below_last)
                return std::nullopt;
            return static_cast<int>(below_first);
        }

        // a < b: a sits in gap i of b for some i in 0..k-1
        auto precedes(const Edge & a, const Edge & b) -> bool
        {
            auto g = gap_index(b, a);
            return g && *g < static_cast<int>(b.size());
        }
    }

    auto classify_pair(const Edge & a, const Edge & b) -> PairClass
    {
        if (a.size() != b.size() || a.empty())
            throw InvalidArgument("classify_pair needs two edges of the same positive size");
        vector<int> merged;
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
        if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
            throw InvalidArgument("classify_pair needs disjoint edges");

        // for k <= 2 a contained pair satisfies both definitions; it counts as nesting
        if (fits_in_gap(a, b) || fits_in_gap(b, a))
            return PairClass::nest;
        for (size_t i = 0 ; i < a.size() ; ++i) {
            auto pa = std::lower_bound(merged.begin(), merged.end(), a[i]) - merged.begin();
            auto pb = std::lower_bound(merged.begin(), merged.end(), b[i]) - merged.begin();
            if (pa - pb != 1 && pb - pa != 1)
                return PairClass::neither;
        }
        return PairClass::interlace;
    }

    auto is_simply_interlacing(const OrderedHypergraph & m) -> InterlacingCheck
    {
        if (! m.is_matching())
            throw InvalidArgument("simply-interlacing check needs a matching");
        auto & edges = m.edges();
        for (size_t x = 0 ; x < edges.size() ; ++x)
            for (size_t y = x + 1 ; y < edges.size() ; ++y)
                if (classify_pair(edges[x], edges[y]) == PairClass::neither)
                    return InterlacingCheck{false, pair{edges[x], edges[y]}};
        return InterlacingCheck{};
    }

    namespace
    {
        auto vertices_of(const vector<Edge> & edges) -> vector<int>
        {
            vector<int> result;
            for (auto & e : edges)
                result.insert(result.end(), e.begin(), e.end());
            std::sort(result.begin(), result.end());
            return result;
        }

        auto interval_of(const vector<pair<int, int>> & intervals, int v) -> optional<int>
        {
            optional<int> result;
            for (size_t j = 0 ; j < intervals.size() ; ++j)
                if (intervals[j].first <= v && v <= intervals[j].second) {
                    if (result)
                        return std::nullopt;
                    result = static_cast<int>(j);
                }
            return result;
        }

        auto empty_nesting(int k) -> KNesting
        {
            KNesting result;
            result.intervals.assign(k, {1, 0});
            result.children.resize(k);
            return result;
        }

        // stretch the intervals so they partition [lo, hi]; empty ones become lo == hi + 1
        auto fill_gaps(vector<pair<int, int>> & intervals, const vector<bool> & used, int lo, int hi) -> void
        {
            int k = static_cast<int>(intervals.size());
            int next_start = hi + 1;
            for (int j = k - 1 ; j >= 0 ; --j) {
                if (used[j]) {
                    intervals[j].second = next_start - 1;
                    next_start = intervals[j].first;
                }
            }
            int cursor = lo;
            for (int j = 0 ; j < k ; ++j) {
                if (used[j]) {
                    if (j == 0 || cursor < intervals[j].first)
                        intervals[j].first = cursor;
                    cursor = intervals[j].second + 1;
                }
                else
                    intervals[j] = {cursor, cursor - 1};
            }
        }
    }

    auto verify_knesting(int k, const vector<Edge> & edges, const KNesting & nesting) -> bool
    {
        if (static_cast<int>(nesting.intervals.size()) != k || static_cast<int>(nesting.children.size()) != k)
            return false;
        if (edges.empty())
            return nesting.spanning.empty() && std::all_of(nesting.children.begin(), nesting.children.end(),
                    [] (auto & c) { return ! c.has_value(); });

        for (auto & [lo, hi] : nesting.intervals)
            if (lo > hi + 1)
                return false;
        int last_hi = std::numeric_limits<int>::min();
        for (auto & [lo, hi] : nesting.intervals)
            if (lo <= hi) {
                if (lo <= last_hi)
                    return false;
                last_hi = hi;
            }

        auto vertices = vertices_of(edges);
        for (auto v : vertices)
            if (! interval_of(nesting.intervals, v))
                return false;
        if (interval_of(nesting.intervals, vertices.front()) != 0 || interval_of(nesting.intervals, vertices.back()) != k - 1)
            return false;

        vector<vector<Edge>> inner(k);
        vector<Edge> spanning;
        for (auto & e : edges) {
            vector<int> where;
            for (auto v : e)
                where.push_back(*interval_of(nesting.intervals, v));
            if (std::all_of(where.begin(), where.end(), [&] (int w) { return w == where.front(); }))
                inner[where.front()].push_back(e);
            else {
                for (int j = 0 ; j < k ; ++j)
                    if (where[j] != j)
                        return false;
                spanning.push_back(e);
            }
        }

        auto declared = nesting.spanning;
        std::sort(declared.begin(), declared.end());
        std::sort(spanning.begin(), spanning.end());
        if (declared != spanning)
            return false;

        for (int j = 0 ; j < k ; ++j) {
            if (inner[j].empty()) {
                if (nesting.children[j])
                    return false;
                continue;
            }
            if (! nesting.children[j] || ! verify_knesting(k, inner[j], *nesting.children[j]))
                return false;
        }
        return true;
    }

    auto verify_knesting(const OrderedHypergraph & m, const KNesting & nesting) -> bool
    {
        return m.is_matching() && verify_knesting(m.k(), m.edges(), nesting);
    }

    namespace
    {
        auto nest_simply_interlacing(int k, const vector<Edge> & edges) -> KNesting
        {
            if (edges.empty())
                return empty_nesting(k);

            vector<size_t> maximal;
            for (size_t a = 0 ; a < edges.size() ; ++a) {
                bool is_max = true;
                for (size_t b = 0 ; b < edges.size() && is_max ; ++b)
                    if (a != b && precedes(edges[a], edges[b]))
                        is_max = false;
                if (is_max)
                    maximal.push_back(a);
            }
            if (maximal.empty())
                throw InvariantViolation("no maximal edge under the gap relation");

            vector<bool> is_spanning(edges.size(), false);
            for (auto a : maximal)
                is_spanning[a] = true;
            for (size_t b = 0 ; b < edges.size() ; ++b)
                for (auto a : maximal)
                    if (b != a && classify_pair(edges[a], edges[b]) == PairClass::interlace)
                        is_spanning[b] = true;

            vector<Edge> spanning;
            for (size_t a = 0 ; a < edges.size() ; ++a)
                if (is_spanning[a])
                    spanning.push_back(edges[a]);
            for (size_t x = 0 ; x < spanning.size() ; ++x)
                for (size_t y = x + 1 ; y < spanning.size() ; ++y)
                    if (classify_pair(spanning[x], spanning[y]) != PairClass::interlace)
                        throw InvariantViolation("spanning edges do not pairwise interlace");

            vector<pair<int, int>> intervals(k);
            for (int j = 0 ; j < k ; ++j) {
                intervals[j] = {spanning.front()[j], spanning.front()[j]};
                for (auto & a : spanning) {
                    intervals[j].first = std::min(intervals[j].first, a[j]);
                    intervals[j].second = std::max(intervals[j].second, a[j]);
                }
            }

            vector<vector<Edge>> inner(k);
            for (size_t b = 0 ; b < edges.size() ; ++b) {
                if (is_spanning[b])
                    continue;
                int target = 1;
                for (auto & a : spanning) {
                    auto g = gap_index(a, edges[b]);
                    if (! g)
                        throw InvariantViolation("non-spanning edge straddles a spanning edge");
                    target = std::max(target, *g);
                }
                auto & iv = intervals[target - 1];
                iv.first = std::min(iv.first, edges[b].front());
                iv.second = std::max(iv.second, edges[b].back());
                inner[target - 1].push_back(edges[b]);
            }

            for (int j = 0 ; j + 1 < k ; ++j)
                if (intervals[j].second >= intervals[j + 1].first)
                    throw InvariantViolation("extended intervals overlap");

            auto vertices = vertices_of(edges);
            fill_gaps(intervals, vector<bool>(k, true), vertices.front(), vertices.back());

            KNesting result;
            result.intervals = intervals;
            result.spanning = spanning;
            result.children.resize(k);
            for (int j = 0 ; j < k ; ++j)
                if (! inner[j].empty())
                    result.children[j] = nest_simply_interlacing(k, inner[j]);
            return result;
        }
    }

    auto find_k_nesting_simply_interlacing(const OrderedHypergraph & m) -> KNesting
    {
        if (m.k() < 3)
            throw InvalidArgument("the spanning-edge construction needs k >= 3");
        auto check = is_simply_interlacing(m);
        if (! check.ok)
            throw InvalidArgument("matching is not simply interlacing");
        return nest_simply_interlacing(m.k(), m.edges());
    }

    namespace
    {
        struct NestabilitySearch
        {
            int k;
            const vector<Edge> & all;
            std::uint64_t max_nodes;
            std::uint64_t nodes = 0;
            bool exhausted = false;
            std::unordered_map<std::uint64_t, optional<KNesting>> memo;

            auto edges_of(std::uint64_t mask) const -> vector<Edge>
            {
                vector<Edge> result;
                for (size_t i = 0 ; i < all.size() ; ++i)
                    if (mask >> i & 1)
                        result.push_back(all[i]);
                return result;
            }

            auto solve(std::uint64_t mask) -> optional<KNesting>
            {
                if (auto it = memo.find(mask) ; it != memo.end())
                    return it->second;

                auto edges = edges_of(mask);
                vector<size_t> ids;
                for (size_t i = 0 ; i < all.size() ; ++i)
                    if (mask >> i & 1)
                        ids.push_back(i);
                auto vertices = vertices_of(edges);
                int n = static_cast<int>(vertices.size());

                std::map<int, int> position;
                for (int q = 0 ; q < n ; ++q)
                    position[vertices[q]] = q;

                optional<KNesting> found;
                vector<int> cuts(k - 1, 1);
                if (k == 1)
                    cuts.clear();
                // cuts[0] <= cuts[1] <= ... with 1 <= cuts and cuts <= n - 1
                bool more = n >= 2 || k == 1;
                while (more && ! found && ! exhausted) {
                    if (max_nodes && ++nodes > max_nodes) {
                        exhausted = true;
                        break;
                    }
                    found = try_cuts(cuts, edges, ids, vertices, position);

                    int i = k - 2;
                    while (i >= 0 && cuts[i] == n - 1)
                        --i;
                    if (i < 0)
                        more = false;
                    else {
                        ++cuts[i];
                        for (int j = i + 1 ; j < k - 1 ; ++j)
                            cuts[j] = cuts[i];
                    }
                }
                if (! exhausted)
                    memo[mask] = found;
                return found;
            }

            auto try_cuts(const vector<int> & cuts, const vector<Edge> & edges, const vector<size_t> & ids,
                    const vector<int> & vertices, const std::map<int, int> & position) -> optional<KNesting>
            {
                auto group = [&] (int v) {
                    int q = position.at(v);
                    return static_cast<int>(std::upper_bound(cuts.begin(), cuts.end(), q) - cuts.begin());
                };

                vector<std::uint64_t> inner(k, 0);
                vector<Edge> spanning;
                for (size_t x = 0 ; x < edges.size() ; ++x) {
                    auto & e = edges[x];
                    int g0 = group(e.front());
                    bool same = true, spans = true;
                    for (int j = 0 ; j < k ; ++j) {
                        int g = group(e[j]);
                        if (g != g0)
                            same = false;
                        if (g != j)
                            spans = false;
                    }
                    if (same)
                        inner[g0] |= std::uint64_t{1} << ids[x];
                    else if (spans)
                        spanning.push_back(e);
                    else
                        return std::nullopt;
                }

                std::uint64_t whole = 0;
                for (auto i : ids)
                    whole |= std::uint64_t{1} << i;

                KNesting result;
                result.spanning = spanning;
                result.children.resize(k);
                for (int j = 0 ; j < k ; ++j) {
                    if (inner[j] == 0)
                        continue;
                    if (inner[j] == whole)
                        return std::nullopt;
                    auto child = solve(inner[j]);
                    if (! child)
                        return std::nullopt;
                    result.children[j] = std::move(child);
                }

                result.intervals.assign(k, {0, -1});
                vector<bool> used(k, false);
                for (auto v : vertices) {
                    int g = group(v);
                    if (! used[g])
                        result.intervals[g] = {v, v};
                    used[g] = true;
                    result.intervals[g].second = v;
                }
                fill_gaps(result.intervals, used, vertices.front(), vertices.back());
                return result;
            }
        };
    }

    auto is_k_nestable(const OrderedHypergraph & m, std::uint64_t max_nodes) -> NestabilityResult
    {
        if (! m.is_matching() || m.k() < 2)
            throw InvalidArgument("k-nestability needs a matching with k >= 2");
        if (m.edge_count() > 64)
            throw BudgetExceeded("k-nestability search handles at most 64 edges");

        NestabilityResult result;
        if (m.edge_count() == 0) {
            result.nesting = empty_nesting(m.k());
            return result;
        }

        NestabilitySearch search{m.k(), m.edges(), max_nodes, 0, false, {}};
        std::uint64_t whole = m.edge_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.edge_count()) - 1;
        result.nesting = search.solve(whole);
        result.budget_exhausted = search.exhausted;
        result.nodes = search.nodes;
        if (result.budget_exhausted)
            result.nesting.reset();
        return result;
    }

    namespace
    {
        auto ipow(int64_t base, int exponent) -> int64_t
        {
            int64_t result = 1;
            for (int i = 0 ; i < exponent ; ++i) {
                result *= base;
                if (result > (int64_t{1} << 40))
                    throw BudgetExceeded("G_s^k is too large to index");
            }
            return result;
        }

        struct Placement
        {
            int s = 0;
            std::map<int, int64_t> image;   // 0-based vertex of G_s^k
        };

        auto place(int k, const vector<Edge> & edges, const KNesting & nesting) -> Placement
        {
            int e = static_cast<int>(edges.size());
            if (e == 1) {
                Placement result{1, {}};
                for (int j = 0 ; j < k ; ++j)
                    result.image[edges.front()[j]] = j;
                return result;
            }

            vector<vector<Edge>> inner(k);
            vector<Edge> spanning;
            std::map<int, int> interval_at;
            for (auto & ed : edges) {
                auto where = interval_of(nesting.intervals, ed.front());
                auto last = interval_of(nesting.intervals, ed.back());
                if (! where || ! last)
                    throw InvalidArgument("nesting does not cover the matching");
                if (*where == *last)
                    inner[*where].push_back(ed);
                else
                    spanning.push_back(ed);
                for (auto v : ed)
                    interval_at[v] = *interval_of(nesting.intervals, v);
            }

            vector<int> sizes(k);
            vector<Placement> children(k);
            int sum = 0, largest = 0, nonempty = 0;
            for (int j = 0 ; j < k ; ++j) {
                sizes[j] = static_cast<int>(inner[j].size());
                sum += sizes[j];
                largest = std::max(largest, sizes[j]);
                if (sizes[j] > 0) {
                    ++nonempty;
                    if (! nesting.children[j])
                        throw InvalidArgument("nesting is missing a child");
                    children[j] = place(k, inner[j], *nesting.children[j]);
                    if (children[j].s > 2 * sizes[j] - 1)
                        throw InvariantViolation("child embedding used too many levels");
                }
            }

            if (spanning.empty()) {
                if (nonempty < 2)
                    throw InvalidArgument("nesting makes no progress");
                Placement result{2 * largest, {}};
                auto copy_size = ipow(k, 2 * largest - 1);
                for (int j = 0 ; j < k ; ++j)
                    for (auto & [v, x] : children[j].image)
                        result.image[v] = j * copy_size + x;
                return result;
            }

            int e_prime = (e - sum) + largest;
            Placement result{2 * e_prime - 1, {}};
            auto copy_size = ipow(k, 2 * e_prime - 2);
            std::set<int> spanning_vertices;
            for (auto & ed : spanning)
                spanning_vertices.insert(ed.begin(), ed.end());

            for (int j = 0 ; j < k ; ++j) {
                vector<int> here;
                for (auto & [v, where] : interval_at)
                    if (where == j)
                        here.push_back(v);

                std::map<int, int64_t> expanded;
                if (sizes[j] > 0) {
                    int steps = 2 * (e_prime - sizes[j]) - 1;
                    auto room = ipow(k, steps);
                    int below = 0;
                    optional<int64_t> previous;
                    auto min_gap = ipow(k - 1, 2 * (e_prime - sizes[j]) - 2);
                    for (auto v : here) {
                        if (spanning_vertices.count(v)) {
                            ++below;
                            continue;
                        }
                        if (below >= room)
                            throw InvariantViolation("offset does not fit in the blow-up digits");
                        int64_t x = children[j].image.at(v);
                        int64_t rest = below;
                        for (int i = 0 ; i < steps ; ++i) {
                            x = x * k + rest % k;
                            rest /= k;
                        }
                        if (previous && x - *previous - 1 < min_gap)
                            throw InvariantViolation("consecutive images closer than the guaranteed gap");
                        previous = x;
                        expanded[v] = x;
                    }
                }

                int64_t next_free = 0;
                for (auto v : here) {
                    int64_t x;
                    if (auto it = expanded.find(v) ; it != expanded.end()) {
                        x = it->second;
                        if (x < next_free)
                            throw InvariantViolation("no room for spanning vertices before an expanded vertex");
                    }
                    else
                        x = next_free;
                    next_free = x + 1;
                    if (next_free > copy_size)
                        throw InvariantViolation("placement ran past the end of its copy");
                    result.image[v] = j * copy_size + x;
                }
            }
            return result;
        }
    }

    auto embed_into_G(const OrderedHypergraph & m, const KNesting & nesting) -> GEmbedding
    {
        int k = m.k();
        if (k < 3)
            throw InvalidArgument("embedding into G_s^k needs k >= 3");
        if (! m.is_matching() || m.n() != k * static_cast<int>(m.edge_count()) || m.edge_count() == 0)
            throw InvalidArgument("embedding needs a nonempty matching covering its vertex set");
        if (! verify_knesting(m, nesting))
            throw InvalidArgument("invalid k-nesting");

        int e = static_cast<int>(m.edge_count());
        auto placed = place(k, m.edges(), nesting);
        if (placed.s > 2 * e - 1)
            throw InvariantViolation("embedding used more than 2e - 1 levels");

        GEmbedding result{2 * e - 1, Embedding{vector<int>(m.n())}};
        for (auto & [v, x] : placed.image)
            result.embedding.map[v - 1] = static_cast<int>(x + 1);
        return result;
    }

    namespace
    {
        auto random_word(int k, int e, std::mt19937_64 & rng, int & next_label) -> vector<int>
        {
            if (e == 0)
                return {};
            int p = std::uniform_int_distribution<int>(1, e)(rng);
            vector<int> labels;
            for (int i = 0 ; i < p ; ++i)
                labels.push_back(next_label++);

            vector<int> word;
            for (int j = 0 ; j < k ; ++j) {
                std::shuffle(labels.begin(), labels.end(), rng);
                word.insert(word.end(), labels.begin(), labels.end());
            }

            int remaining = e - p;
            while (remaining > 0) {
                int take = std::uniform_int_distribution<int>(1, remaining)(rng);
                remaining -= take;
                auto sub = random_word(k, take, rng, next_label);
                auto at = std::uniform_int_distribution<size_t>(0, word.size())(rng);
                word.insert(word.begin() + static_cast<std::ptrdiff_t>(at), sub.begin(), sub.end());
            }
            return word;
        }
    }

    auto random_simply_interlacing(int k, int e, std::mt19937_64 & rng) -> OrderedHypergraph
    {
        if (k < 1 || e < 0)
            throw InvalidArgument("random matching needs k >= 1 and e >= 0");
        int next_label = 0;
        auto word = random_word(k, e, rng, next_label);
        vector<Edge> edges(e);
        for (size_t q = 0 ; q < word.size() ; ++q)
            edges[word[q]].push_back(static_cast<int>(q) + 1);
        std::sort(edges.begin(), edges.end());
        return OrderedHypergraph{k * e, k, std::move(edges)};
    }

    namespace
    {
        auto to_json(const KNesting & nesting) -> nlohmann::json
        {
            nlohmann::json j;
            j["intervals"] = nlohmann::json::array();
            for (auto & [lo, hi] : nesting.intervals)
                j["intervals"].push_back({lo, hi});
            j["spanning"] = nesting.spanning;
            j["children"] = nlohmann::json::array();
            for (auto & c : nesting.children)
                j["children"].push_back(c ? to_json(*c) : nlohmann::json(nullptr));
            return j;
        }
    }

    auto knesting_to_json(const KNesting & nesting) -> string
    {
        return to_json(nesting).dump();
    }
}
