#include <ordram/combinatorics.hpp>
#include <ordram/errors.hpp>
#include <ordram/search.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>

using std::optional;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace ordram
{
    auto to_string(SearchOutcome o) -> string
    {
        switch (o) {
            case SearchOutcome::found:   return "avoider-found";
            case SearchOutcome::none:    return "exhausted";
            case SearchOutcome::timeout: return "timeout";
        }
        return "?";
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct ColorModel
        {
            bool is_path = false;
            int l = 0, e = 0;
            const OrderedHypergraph * target = nullptr;
            vector<uint64_t> bottom, top;   // l-set ranks per edge, l >= 1
        };

        struct Problem
        {
            int N, k, t;
            vector<Edge> edges;             // colex order
            vector<uint64_t> lex_rank;
            SubsetIndexer indexer;
            vector<ColorModel> colors;
            bool wipeout = false;           // every color blocks by the same l-set rule
            int wipeout_l = 0;
            bool symmetric_first = false;

            Problem(int n, int k_, const vector<OrderedHypergraph> & targets, bool symmetry) :
                N(n), k(k_), t(static_cast<int>(targets.size())), indexer(n, k_)
            {
                if (n >= k) {
                    auto e = first_combination(k);
                    do {
                        edges.push_back(e);
                        lex_rank.push_back(indexer.rank(e));
                    } while (next_combination_colex(e, n));
                }

                colors.resize(t);
                optional<int> common_l;
                bool all_paths = true;
                for (int j = 0 ; j < t ; ++j) {
                    auto & m = colors[j];
                    m.target = &targets[j];
                    if (auto p = recognise_path(targets[j])) {
                        m.is_path = true;
                        m.l = p->first;
                        m.e = p->second;
                        if (m.e > 1) {
                            if (common_l && *common_l != m.l)
                                all_paths = false;
                            common_l = m.l;
                        }
                        if (m.l >= 1 && m.e > 1) {
                            SubsetIndexer sets(n, m.l);
                            for (auto & ed : edges) {
                                m.bottom.push_back(sets.rank(std::span<const int>(ed.data(), m.l)));
                                m.top.push_back(sets.rank(std::span<const int>(ed.data() + k - m.l, m.l)));
                            }
                        }
                    }
                    else
                        all_paths = false;
                }
                wipeout = all_paths;
                wipeout_l = common_l.value_or(0);

                if (symmetry && t > 1) {
                    symmetric_first = true;
                    for (int j = 1 ; j < t ; ++j)
                        if (! targets[j].same_edges(targets[0]) || targets[j].n() != targets[0].n())
                            symmetric_first = false;
                }
            }
        };

        struct Shared
        {
            std::atomic<uint64_t> nodes{0};
            std::atomic<bool> abort{false};
            std::atomic<bool> timed_out{false};
            uint64_t max_nodes = 0;
            optional<Clock::time_point> deadline;
        };

        class Engine
        {
            private:
                struct Undo { int kind; int color; uint64_t index; int old; };

                const Problem & _p;
                Shared & _shared;
                vector<std::uint8_t> _lex_colors;
                vector<vector<int>> _best;      // per color: by l-set rank, or by max vertex when l = 0
                vector<int> _global;            // per color, l = 0: largest height so far
                vector<Undo> _trail;
                vector<int> _assigned;          // color per colex position
                uint64_t _local_nodes = 0;

            public:
                Engine(const Problem & p, Shared & shared) :
                    _p(p), _shared(shared), _lex_colors(p.edges.size(), 0), _global(p.t, 0), _assigned(p.edges.size(), 0)
                {
                    for (auto & m : p.colors) {
                        if (m.is_path && m.e > 1)
                            _best.emplace_back(m.l >= 1 ? binomial(p.N, m.l) : p.N + 1, 0);
                        else
                            _best.emplace_back();
                    }
                }

                auto assigned() const -> const vector<int> & { return _assigned; }

                auto reset() -> void
                {
                    undo_to(0);
                    std::fill(_assigned.begin(), _assigned.end(), 0);
                }

                auto undo_to(size_t mark) -> void
                {
                    while (_trail.size() > mark) {
                        auto u = _trail.back();
                        _trail.pop_back();
                        if (u.kind == 0)
                            _lex_colors[u.index] = 0;
                        else if (u.kind == 1)
                            _best[u.color][u.index] = u.old;
                        else
                            _global[u.color] = u.old;
                    }
                }

                auto mark() const -> size_t { return _trail.size(); }

                // false when the new edge completes a forbidden copy or leaves some later edge without a color
                auto assign(size_t pos, int color) -> bool
                {
                    int j = color - 1;
                    auto & m = _p.colors[j];
                    auto & edge = _p.edges[pos];
                    _assigned[pos] = color;
                    _lex_colors[_p.lex_rank[pos]] = static_cast<std::uint8_t>(color);
                    _trail.push_back({0, j, _p.lex_rank[pos], 0});

                    if (m.is_path) {
                        if (m.e == 1)
                            return false;
                        int h;
                        if (m.l >= 1) {
                            h = 1 + _best[j][m.bottom[pos]];
                            if (h >= m.e)
                                return false;
                            auto & slot = _best[j][m.top[pos]];
                            if (h > slot) {
                                _trail.push_back({1, j, m.top[pos], slot});
                                slot = h;
                            }
                        }
                        else {
                            int below = 0;
                            for (int v = 1 ; v < edge.front() ; ++v)
                                below = std::max(below, _best[j][v]);
                            h = below + 1;
                            if (h >= m.e)
                                return false;
                            auto & slot = _best[j][edge.back()];
                            if (h > slot) {
                                _trail.push_back({1, j, static_cast<uint64_t>(edge.back()), slot});
                                slot = h;
                            }
                            if (h > _global[j]) {
                                _trail.push_back({2, j, 0, _global[j]});
                                _global[j] = h;
                            }
                        }
                        return ! wiped_out(pos);
                    }

                    ColorClassHost host(_p.indexer, _lex_colors, color);
                    for (size_t f = 0 ; f < m.target->edge_count() ; ++f) {
                        ContainmentOptions options;
                        options.forced_edge = f;
                        options.forced_image = edge;
                        if (contains_ordered(host, *m.target, options).embedding)
                            return false;
                    }
                    return true;
                }

                auto wiped_out(size_t pos) const -> bool
                {
                    if (! _p.wipeout)
                        return false;
                    auto & edge = _p.edges[pos];
                    int l = _p.wipeout_l;
                    if (l >= 1) {
                        if (edge.back() + (_p.k - l) > _p.N)
                            return false;
                        for (int i = 0 ; i < _p.t ; ++i) {
                            auto & m = _p.colors[i];
                            if (m.e > 1 && _best[i][m.top[pos]] < m.e - 1)
                                return false;
                        }
                        return true;
                    }
                    if (edge.back() > _p.N - _p.k)
                        return false;
                    for (int i = 0 ; i < _p.t ; ++i) {
                        auto & m = _p.colors[i];
                        if (m.e > 1 && _global[i] < m.e - 1)
                            return false;
                    }
                    return true;
                }

                auto tick() -> bool
                {
                    if (++_local_nodes % 1024 == 0) {
                        auto total = _shared.nodes.fetch_add(1024) + 1024;
                        if (_shared.max_nodes && total > _shared.max_nodes)
                            _shared.timed_out = true;
                        if (_shared.deadline && Clock::now() > *_shared.deadline)
                            _shared.timed_out = true;
                    }
                    return ! _shared.timed_out && ! _shared.abort;
                }

                auto flush() -> void
                {
                    _shared.nodes.fetch_add(_local_nodes % 1024);
                    _local_nodes = 0;
                }

                auto first_color_limit(size_t pos) const -> int
                {
                    return pos == 0 && _p.symmetric_first ? 1 : _p.t;
                }

                // true: avoider completed; false: exhausted or stopped
                auto dfs(size_t pos) -> bool
                {
                    if (pos == _p.edges.size())
                        return true;
                    int limit = first_color_limit(pos);
                    for (int c = 1 ; c <= limit ; ++c) {
                        if (! tick())
                            return false;
                        auto m = mark();
                        if (assign(pos, c) && dfs(pos + 1))
                            return true;
                        undo_to(m);
                        _assigned[pos] = 0;
                    }
                    return false;
                }

                // every surviving prefix of the given depth, in search order
                auto collect(size_t pos, size_t depth, vector<vector<int>> & out, size_t cap) -> void
                {
                    if (pos == depth) {
                        out.emplace_back(_assigned.begin(), _assigned.begin() + static_cast<std::ptrdiff_t>(depth));
                        return;
                    }
                    int limit = first_color_limit(pos);
                    for (int c = 1 ; c <= limit && out.size() <= cap ; ++c) {
                        tick();
                        auto m = mark();
                        if (assign(pos, c))
                            collect(pos + 1, depth, out, cap);
                        undo_to(m);
                        _assigned[pos] = 0;
                    }
                }

                auto replay(const vector<int> & prefix) -> bool
                {
                    for (size_t pos = 0 ; pos < prefix.size() ; ++pos)
                        if (! assign(pos, prefix[pos]))
                            return false;
                    return true;
                }

                auto to_coloring() const -> EdgeColoring
                {
                    EdgeColoring c(_p.N, _p.k, _p.t);
                    for (size_t pos = 0 ; pos < _p.edges.size() ; ++pos)
                        c.set_color_at(_p.lex_rank[pos], _assigned[pos]);
                    return c;
                }
        };

        auto seconds_since(Clock::time_point start) -> double
        {
            return std::chrono::duration<double>(Clock::now() - start).count();
        }
    }

    auto exists_avoider(int N, int k, const vector<OrderedHypergraph> & targets, const SearchBudget & budget,
            const optional<EdgeColoring> & seed) -> AvoiderResult
    {
        if (targets.empty())
            throw InvalidArgument("need at least one target");
        if (targets.size() > 255)
            throw InvalidArgument("at most 255 colors");
        for (auto & g : targets)
            if (g.k() != k)
                throw InvalidArgument("target uniformity differs from k");
        if (N < 0 || k < 1)
            throw InvalidArgument("need N >= 0 and k >= 1");
        if (budget.parallel < 1)
            throw InvalidArgument("parallel must be positive");

        auto start = Clock::now();
        AvoiderResult result;

        if (seed && seed->n() == N && seed->k() == k && seed->t() == static_cast<int>(targets.size())
                && verify_avoids(*seed, targets).ok) {
            result.outcome = SearchOutcome::found;
            result.witness = *seed;
            result.seconds = seconds_since(start);
            return result;
        }

        Problem problem(N, k, targets, budget.symmetry_breaking);
        Shared shared;
        shared.max_nodes = budget.max_nodes;
        if (budget.max_seconds > 0)
            shared.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.max_seconds));

        auto finish = [&] (optional<EdgeColoring> witness) {
            if (witness) {
                if (! verify_avoids(*witness, targets).ok)
                    throw InvariantViolation("search produced a coloring that does not avoid the targets");
                result.outcome = SearchOutcome::found;
                result.witness = std::move(witness);
            }
            else
                result.outcome = shared.timed_out ? SearchOutcome::timeout : SearchOutcome::none;
            result.nodes = shared.nodes;
            result.seconds = seconds_since(start);
            return result;
        };

        if (budget.parallel == 1 || problem.edges.size() < 8) {
            Engine engine(problem, shared);
            bool found = engine.dfs(0);
            engine.flush();
            return finish(found ? optional<EdgeColoring>(engine.to_coloring()) : std::nullopt);
        }

        // split the top of the tree into prefixes and hand them out in order
        vector<vector<int>> prefixes;
        {
            Engine engine(problem, shared);
            size_t want = static_cast<size_t>(budget.parallel) * 64;
            size_t depth = 1;
            for (;;) {
                prefixes.clear();
                engine.collect(0, depth, prefixes, std::numeric_limits<size_t>::max());
                if (prefixes.size() >= want || depth + 1 >= problem.edges.size() || depth >= 40 || prefixes.empty())
                    break;
                ++depth;
            }
            engine.flush();
        }

        std::atomic<size_t> next{0};
        std::atomic<size_t> best{std::numeric_limits<size_t>::max()};
        std::mutex lock;
        optional<EdgeColoring> witness;
        bool any_timeout = false;

        auto work = [&] {
            Engine engine(problem, shared);
            for (;;) {
                auto index = next.fetch_add(1);
                if (index >= prefixes.size() || index > best.load())
                    break;
                engine.reset();
                if (! engine.replay(prefixes[index]))
                    throw InvariantViolation("prefix replay failed");
                bool found = engine.dfs(prefixes[index].size());
                if (found) {
                    std::lock_guard guard(lock);
                    if (index < best) {
                        best = index;
                        witness = engine.to_coloring();
                    }
                    if (! budget.deterministic_witness)
                        shared.abort = true;
                }
                if (shared.timed_out) {
                    std::lock_guard guard(lock);
                    any_timeout = true;
                    break;
                }
                if (shared.abort)
                    break;
            }
            engine.flush();
        };

        vector<std::thread> threads;
        for (int w = 0 ; w < budget.parallel ; ++w)
            threads.emplace_back(work);
        for (auto & th : threads)
            th.join();

        if (witness)
            shared.timed_out = false;
        else if (any_timeout)
            shared.timed_out = true;
        return finish(witness);
    }

    auto constructed_avoider(const vector<OrderedHypergraph> & targets) -> optional<EdgeColoring>
    {
        if (targets.empty())
            return std::nullopt;
        int k = targets.front().k();

        try {
            optional<int> common_l;
            vector<int> sizes;
            bool paths = true;
            for (auto & g : targets) {
                auto p = recognise_path(g);
                if (! p || p->first < 1 || (common_l && *common_l != p->first)) {
                    paths = false;
                    break;
                }
                common_l = p->first;
                sizes.push_back(p->second);
            }
            if (paths && k >= 2) {
                PathFamilySpec spec{k, *common_l, sizes};
                auto c = construct_path_avoider(spec, std::size_t{1} << 14, std::uint64_t{1} << 22);
                if (verify_avoids(c, targets).ok)
                    return c;
            }

            vector<int> nestings;
            sizes.clear();
            for (auto & g : targets) {
                int e = static_cast<int>(g.edge_count());
                optional<int> match;
                for (int r = 0 ; r <= k && ! match ; ++r)
                    if (e >= 1 && g.n() == k * e && g.same_edges(build_nested_matching(k, r, e)))
                        match = r;
                if (! match)
                    return std::nullopt;
                nestings.push_back(*match);
                sizes.push_back(e);
            }
            auto c = construct_matching_avoider(k, nestings, sizes);
            if (verify_avoids(c, targets).ok)
                return c;
        }
        catch (const BudgetExceeded &) {
        }
        return std::nullopt;
    }

    auto ordered_ramsey_exact(const vector<OrderedHypergraph> & targets, const SearchBudget & budget,
            const optional<EdgeColoring> & seed) -> RamseyResult
    {
        if (targets.empty())
            throw InvalidArgument("need at least one target");
        int k = targets.front().k();
        int largest = 0;
        for (auto & g : targets) {
            if (g.k() != k)
                throw InvalidArgument("targets must share their uniformity");
            largest = std::max(largest, g.n());
        }

        auto warm = seed;
        if (warm && (warm->k() != k || warm->t() != static_cast<int>(targets.size()) || ! verify_avoids(*warm, targets).ok))
            throw InvalidArgument("seed coloring does not avoid the targets");
        if (! warm)
            warm = constructed_avoider(targets);

        RamseyResult result;
        optional<EdgeColoring> last;
        for (int N = std::max(0, largest - 1) ; ; ++N) {
            NRecord record{N, SearchOutcome::none, 0, 0, "search"};
            if (warm && N <= warm->n()) {
                vector<int> prefix(N);
                for (int v = 0 ; v < N ; ++v)
                    prefix[v] = v + 1;
                last = warm->restrict_to(prefix);
                record.outcome = SearchOutcome::found;
                record.source = "construction";
                result.per_n.push_back(record);
                continue;
            }

            auto r = exists_avoider(N, k, targets, budget);
            record.outcome = r.outcome;
            record.nodes = r.nodes;
            record.seconds = r.seconds;
            result.per_n.push_back(record);

            if (r.outcome == SearchOutcome::found)
                last = std::move(r.witness);
            else if (r.outcome == SearchOutcome::none) {
                result.value = N;
                result.witness = std::move(last);
                return result;
            }
            else {
                result.bracket = std::pair{N - 1, N};
                result.witness = std::move(last);
                return result;
            }
        }
    }
}
