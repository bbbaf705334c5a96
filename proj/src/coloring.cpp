#include <ordram/coloring.hpp>
#include <ordram/errors.hpp>

#include <algorithm>
#include <sstream>

using std::optional;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace ordram
{
    EdgeColoring::EdgeColoring(int n, int k, int t, uint64_t cap) :
        _n(n),
        _k(k),
        _t(t)
    {
        if (n < 0 || k < 1)
            throw InvalidArgument("coloring needs n >= 0 and k >= 1");
        if (t < 1 || t > 255)
            throw InvalidArgument("color count must be in 1..255");
        auto count = binomial(n, k);
        if (count > cap)
            throw BudgetExceeded("K_" + std::to_string(n) + "^" + std::to_string(k) + " has " + std::to_string(count)
                    + " edges, above the cap of " + std::to_string(cap));
        _indexer = SubsetIndexer(n, k);
        _colors.assign(count, 1);
    }

    auto EdgeColoring::set_color(std::span<const int> edge, int color) -> void
    {
        set_color_at(_indexer.rank(edge), color);
    }

    auto EdgeColoring::set_color_at(uint64_t rank, int color) -> void
    {
        if (color < 1 || color > _t)
            throw InvalidArgument("color " + std::to_string(color) + " out of range");
        _colors.at(rank) = static_cast<std::uint8_t>(color);
    }

    auto EdgeColoring::for_each_edge(const std::function<void (const vector<int> &, int)> & f) const -> void
    {
        if (_n < _k)
            return;
        auto e = first_combination(_k);
        uint64_t rank = 0;
        do
            f(e, _colors[rank++]);
        while (next_combination(e, _n));
    }

    auto EdgeColoring::restrict_to(const vector<int> & vertices) const -> EdgeColoring
    {
        int m = static_cast<int>(vertices.size());
        EdgeColoring result(m, _k, _t);
        vector<int> image(_k);
        result.for_each_edge([&] (const vector<int> & e, int) {
            for (int j = 0 ; j < _k ; ++j)
                image[j] = vertices[e[j] - 1];
            result._colors[result._indexer.rank(e)] = _colors[_indexer.rank(image)];
        });
        return result;
    }

    auto EdgeColoring::operator== (const EdgeColoring & other) const -> bool
    {
        return _n == other._n && _k == other._k && _t == other._t && _colors == other._colors;
    }

    auto make_coloring(int n, int k, int t, const std::function<int (const vector<int> &)> & color_of, uint64_t cap) -> EdgeColoring
    {
        EdgeColoring result(n, k, t, cap);
        if (n < k)
            return result;
        auto e = first_combination(k);
        uint64_t rank = 0;
        do
            result.set_color_at(rank++, color_of(e));
        while (next_combination(e, n));
        return result;
    }

    ColorClassHost::ColorClassHost(const EdgeColoring & c, int color) :
        ColorClassHost(c.indexer(), c.raw(), color)
    {
    }

    ColorClassHost::ColorClassHost(const SubsetIndexer & indexer, const vector<std::uint8_t> & colors, int color) :
        _indexer(indexer),
        _colors(colors),
        _color(color)
    {
    }

    auto ColorClassHost::has_edge(const int * vertices) const -> bool
    {
        return _colors[_indexer.rank(std::span<const int>(vertices, _indexer.r()))] == _color;
    }

    auto color_class(const EdgeColoring & c, int color) -> OrderedHypergraph
    {
        vector<Edge> edges;
        c.for_each_edge([&] (const vector<int> & e, int col) {
            if (col == color)
                edges.push_back(e);
        });
        return OrderedHypergraph{c.n(), c.k(), std::move(edges)};
    }

    auto monotone_path_heights(const EdgeColoring & c, int l) -> vector<int>
    {
        int k = c.k(), n = c.n(), t = c.t();
        if (l < 0 || l >= k)
            throw InvalidArgument("path overlap must be in 0..k-1");
        vector<int> heights(c.edge_count(), 0);
        if (n < k)
            return heights;

        if (l >= 1) {
            SubsetIndexer sets(n, l);
            vector<int> best(static_cast<size_t>(t + 1) * sets.count(), 0);
            c.for_each_edge([&, rank = uint64_t{0}] (const vector<int> & e, int col) mutable {
                auto bottom = sets.rank(std::span<const int>(e.data(), l));
                auto top = sets.rank(std::span<const int>(e.data() + k - l, l));
                auto h = 1 + best[col * sets.count() + bottom];
                heights[rank++] = h;
                auto & slot = best[col * sets.count() + top];
                slot = std::max(slot, h);
            });
        }
        else {
            vector<int> best_by_max(static_cast<size_t>(t + 1) * (n + 1), 0);
            c.for_each_edge([&, rank = uint64_t{0}] (const vector<int> & e, int col) mutable {
                int below = 0;
                for (int v = 1 ; v < e.front() ; ++v)
                    below = std::max(below, best_by_max[col * (n + 1) + v]);
                heights[rank++] = 1 + below;
                auto & slot = best_by_max[col * (n + 1) + e.back()];
                slot = std::max(slot, 1 + below);
            });
        }
        return heights;
    }

    auto longest_monotone_path(const EdgeColoring & c, int color, int l) -> int
    {
        auto heights = monotone_path_heights(c, l);
        int result = 0;
        for (uint64_t r = 0 ; r < heights.size() ; ++r)
            if (c.color_at(r) == color)
                result = std::max(result, heights[r]);
        return result;
    }

    namespace
    {
        auto predecessor(const EdgeColoring & c, const vector<int> & heights, int color, int l, const vector<int> & x, int need) -> vector<int>
        {
            int k = c.k();
            auto & idx = c.indexer();
            int below = x.front() - 1;
            if (l >= 1) {
                int free = k - l;
                if (below >= free) {
                    auto z = first_combination(free);
                    vector<int> y(k);
                    do {
                        std::copy(z.begin(), z.end(), y.begin());
                        std::copy(x.begin(), x.begin() + l, y.begin() + free);
                        auto r = idx.rank(y);
                        if (c.color_at(r) == color && heights[r] >= need)
                            return y;
                    } while (next_combination(z, below));
                }
            }
            else if (below >= k) {
                auto y = first_combination(k);
                do {
                    auto r = idx.rank(y);
                    if (c.color_at(r) == color && heights[r] >= need)
                        return y;
                } while (next_combination(y, below));
            }
            throw InvariantViolation("monotone path predecessor missing");
        }
    }

    auto find_monotone_path(const EdgeColoring & c, int color, int l, int e) -> optional<Embedding>
    {
        int k = c.k();
        auto heights = monotone_path_heights(c, l);
        optional<vector<int>> last;
        c.for_each_edge([&, rank = uint64_t{0}] (const vector<int> & x, int col) mutable {
            if (! last && col == color && heights[rank] >= e)
                last = x;
            ++rank;
        });
        if (! last)
            return std::nullopt;

        vector<vector<int>> chain{*last};
        for (int need = e - 1 ; need >= 1 ; --need)
            chain.push_back(predecessor(c, heights, color, l, chain.back(), need));
        std::reverse(chain.begin(), chain.end());

        Embedding result{vector<int>(e * (k - l) + l, 0)};
        for (int r = 0 ; r < e ; ++r)
            for (int a = 0 ; a < k ; ++a)
                result.map[r * (k - l) + a] = chain[r][a];
        return result;
    }

    auto recognise_path(const OrderedHypergraph & g) -> optional<std::pair<int, int>>
    {
        int k = g.k(), n = g.n(), e = static_cast<int>(g.edge_count());
        if (e == 0)
            return std::nullopt;
        if (e == 1)
            return n == k ? optional<std::pair<int, int>>{{0, 1}} : std::nullopt;
        int num = e * k - n;
        if (num < 0 || num % (e - 1) != 0)
            return std::nullopt;
        int l = num / (e - 1);
        if (l >= k)
            return std::nullopt;
        if (! g.same_edges(build_path(k, l, e)))
            return std::nullopt;
        return std::pair{l, e};
    }

    auto verify_avoids(const EdgeColoring & c, const vector<OrderedHypergraph> & targets, uint64_t max_nodes) -> AvoidanceReport
    {
        if (static_cast<int>(targets.size()) != c.t())
            throw InvalidArgument("need one target per color");
        for (auto & g : targets)
            if (g.k() != c.k())
                throw InvalidArgument("uniformity mismatch between coloring and target");

        AvoidanceReport report;
        for (int j = 1 ; j <= c.t() ; ++j) {
            auto & target = targets[j - 1];
            if (auto path = recognise_path(target)) {
                if (auto found = find_monotone_path(c, j, path->first, path->second)) {
                    report.ok = false;
                    report.violation = Violation{j, *found};
                    return report;
                }
                continue;
            }

            ColorClassHost host(c, j);
            ContainmentOptions options;
            options.max_nodes = max_nodes;
            auto result = contains_ordered(host, target, options);
            if (result.embedding) {
                report.ok = false;
                report.violation = Violation{j, *result.embedding};
                return report;
            }
            if (result.budget_exhausted) {
                report.ok = false;
                report.budget_exhausted = true;
            }
        }
        return report;
    }

    auto descent_selector(const QTower & tower, int m, size_t x, size_t y) -> size_t
    {
        if (m < 2 || m > tower.height())
            throw InvalidArgument("descent selector level out of range");
        auto & my = tower.members(m, y);
        auto result = my.first_not_in(tower.members(m, x));
        if (result == my.size())
            throw InvalidArgument("descent selector needs x not containing y");
        return result;
    }

    auto collapse_to_q1(const QTower & tower, int i, vector<size_t> ys) -> size_t
    {
        if (static_cast<int>(ys.size()) != i)
            throw InvalidArgument("collapse needs a list of length i");
        for (int m = i ; m >= 2 ; --m) {
            vector<size_t> next;
            for (size_t a = 0 ; a + 1 < ys.size() ; ++a)
                next.push_back(descent_selector(tower, m, ys[a], ys[a + 1]));
            ys = std::move(next);
        }
        return ys.front();
    }

    auto construct_path_avoider(const PathFamilySpec & spec, size_t q_cap, uint64_t edge_cap) -> EdgeColoring
    {
        spec.validate();
        if (spec.l < 1)
            throw InvalidArgument("path avoider needs l >= 1");
        int k = spec.k, l = spec.l, i = spec.i();
        QTower tower(QTowerSpec{i, spec.sizes}, q_cap);
        auto star = build_Q_star(k, l, tower);
        int n = static_cast<int>(star.poset.size());

        EdgeColoring c(n, k, spec.colors(), edge_cap);
        vector<size_t> ys(i);
        uint64_t rank = 0;
        if (n >= k) {
            auto e = first_combination(k);
            do {
                for (int a = 0 ; a < i ; ++a) {
                    auto element = star.extension[e[a * (k - l)] - 1];
                    auto base = star.projection[element];
                    if (! base)
                        throw InvariantViolation("reduction landed in the top chain");
                    ys[a] = *base;
                }
                c.set_color_at(rank++, tower.color_of(collapse_to_q1(tower, i, ys)) + 1);
            } while (next_combination(e, n));
        }
        return c;
    }

    auto rational_reduction(const vector<int> & edge, int k, int l) -> vector<int>
    {
        if (! (k > l && l >= 1))
            throw InvalidArgument("rational reduction needs k > l >= 1");
        if (static_cast<int>(edge.size()) != k)
            throw InvalidArgument("rational reduction needs a k-tuple");
        for (int a = 0 ; a + 1 < k ; ++a)
            if (edge[a] >= edge[a + 1])
                throw InvalidArgument("rational reduction needs an ascending edge");
        int i = intersection_number(k, l), d = k - l;
        vector<int> result(i);
        for (int j = 0 ; j < i ; ++j)
            result[j] = (edge[j * d] + d - 1) / d;
        return result;
    }

    auto canonical_preimage(const vector<int> & edge, int k, int l) -> vector<int>
    {
        if (! (k > l && l >= 1))
            throw InvalidArgument("canonical preimage needs k > l >= 1");
        int i = intersection_number(k, l), d = k - l, lp = l_prime(k, l);
        if (static_cast<int>(edge.size()) != i)
            throw InvalidArgument("canonical preimage needs an i-tuple");
        for (int a = 0 ; a + 1 < i ; ++a)
            if (edge[a] >= edge[a + 1])
                throw InvalidArgument("canonical preimage needs an ascending tuple");
        vector<int> result;
        for (int j = 0 ; j < i ; ++j)
            for (int a = 1 ; a <= (j + 1 < i ? d : lp) ; ++a)
                result.push_back(d * (edge[j] - 1) + a);
        return result;
    }

    auto lifted_size(int n, int k, int l) -> int
    {
        return (k - l) * n + l_prime(k, l) - 1;
    }

    auto projected_size(int n, int k, int l) -> int
    {
        int lp = l_prime(k, l);
        return n < lp ? 0 : (n - lp) / (k - l) + 1;
    }

    auto lift_coloring(const EdgeColoring & c, int k, int l, uint64_t edge_cap) -> EdgeColoring
    {
        if (c.k() != intersection_number(k, l))
            throw InvalidArgument("lift needs an i(k,l)-uniform coloring");
        return make_coloring(lifted_size(c.n(), k, l), k, c.t(), [&] (const vector<int> & e) {
            return c.color(rational_reduction(e, k, l));
        }, edge_cap);
    }

    auto project_coloring(const EdgeColoring & c, int k, int l) -> EdgeColoring
    {
        if (c.k() != k)
            throw InvalidArgument("projection needs a k-uniform coloring");
        return make_coloring(projected_size(c.n(), k, l), intersection_number(k, l), c.t(), [&] (const vector<int> & e) {
            return c.color(canonical_preimage(e, k, l));
        });
    }

    auto construct_matching_avoider(int k, const vector<int> & nestings, const vector<int> & sizes) -> EdgeColoring
    {
        if (k < 1 || sizes.empty() || nestings.size() != sizes.size())
            throw InvalidArgument("matching avoider needs one nesting pattern per size");
        int t = static_cast<int>(sizes.size());
        int total = 1;
        for (int j = 0 ; j < t ; ++j) {
            if (sizes[j] < 1 || nestings[j] < 0 || nestings[j] > k)
                throw InvalidArgument("matching avoider needs e_i >= 1 and 0 <= r_i <= k");
            total += sizes[j] - 1;
        }
        int n = k * total - 1;

        // L_t .. L_2, L_1, R_2 .. R_t from left to right
        vector<int> part{0};
        for (int j = t ; j >= 2 ; --j)
            part.insert(part.end(), (k - nestings[j - 1]) * (sizes[j - 1] - 1), j);
        part.insert(part.end(), k * sizes[0] - 1, 1);
        for (int j = 2 ; j <= t ; ++j)
            part.insert(part.end(), nestings[j - 1] * (sizes[j - 1] - 1), j);
        if (static_cast<int>(part.size()) != n + 1)
            throw InvariantViolation("matching avoider layout has the wrong size");

        return make_coloring(n, k, t, [&] (const vector<int> & e) {
            int color = 1;
            for (auto v : e)
                color = std::max(color, part[v]);
            return color;
        });
    }

    namespace
    {
        auto for_each_subset(int n, int size, auto && f) -> void
        {
            if (size < 0 || n < size)
                return;
            auto e = first_combination(size);
            do
                f(e);
            while (next_combination(e, n));
        }
    }

    auto upper_bound_certificate(const EdgeColoring & c, const PathFamilySpec & spec, size_t q_cap) -> CertificateOutcome
    {
        QTower tower(QTowerSpec{spec.i(), spec.sizes}, q_cap);
        return upper_bound_certificate(c, spec, tower);
    }

    auto upper_bound_certificate(const EdgeColoring & c, const PathFamilySpec & spec, const QTower & tower) -> CertificateOutcome
    {
        spec.validate();
        if (spec.l < 1 || c.k() != spec.k || c.t() != spec.colors())
            throw InvalidArgument("certificate needs a matching k-uniform t-coloring and l >= 1");
        int k = spec.k, l = spec.l, i = spec.i(), d = k - l, n = c.n();
        if (tower.height() < i)
            throw InvalidArgument("tower too short for the certificate");

        vector<OrderedHypergraph> family;
        for (auto e : spec.sizes)
            family.push_back(build_path(k, l, e));
        auto report = verify_avoids(c, family);
        if (! report.ok)
            return CertificateOutcome{std::nullopt, report.violation};

        Certificate cert;
        cert.k = k;
        cert.l = l;
        cert.i = i;
        cert.lprime = spec.lprime();

        auto heights = monotone_path_heights(c, l);
        cert.g.emplace_back(c.edge_count());
        for (uint64_t r = 0 ; r < c.edge_count() ; ++r)
            cert.g[0][r] = static_cast<std::uint32_t>(tower.chain_element(c.color_at(r) - 1, heights[r]));

        auto size_at = [&] (int m) { return k - (m - 1) * d; };

        // level 1 no-descent check over Y of size 2k - l
        {
            SubsetIndexer idx(n, k);
            auto & q1 = tower.level(1);
            for_each_subset(n, 2 * k - l, [&] (const vector<int> & y) {
                auto lower = cert.g[0][idx.rank(std::span<const int>(y.data(), k))];
                auto upper = cert.g[0][idx.rank(std::span<const int>(y.data() + (k - l), k))];
                if (q1.leq(upper, lower))
                    cert.no_descent = false;
            });
        }

        for (int m = 2 ; m <= i ; ++m) {
            int s = size_at(m), big = size_at(m - 1);
            SubsetIndexer small_idx(n, s), big_idx(n, big);
            auto & below_level = tower.level(m - 1);
            auto & previous = cert.g[m - 2];

            vector<Bitset> acc(small_idx.count(), Bitset(below_level.size()));
            for_each_subset(n, big, [&] (const vector<int> & y) {
                auto top = small_idx.rank(std::span<const int>(y.data() + d, s));
                acc[top] |= below_level.below(previous[big_idx.rank(y)]);
            });

            cert.g.emplace_back(small_idx.count());
            for (uint64_t r = 0 ; r < small_idx.count() ; ++r) {
                auto found = tower.lookup(m, acc[r]);
                if (! found)
                    throw InvariantViolation("g-map value is not a down-set");
                cert.g[m - 1][r] = static_cast<std::uint32_t>(*found);
            }

            auto & level = tower.level(m);
            for_each_subset(n, big, [&] (const vector<int> & y) {
                auto lower = cert.g[m - 1][small_idx.rank(std::span<const int>(y.data(), s))];
                auto upper = cert.g[m - 1][small_idx.rank(std::span<const int>(y.data() + d, s))];
                if (level.leq(upper, lower))
                    cert.no_descent = false;
            });
        }

        int lp = cert.lprime;
        SubsetIndexer top_idx(n, lp);
        cert.fiber_sizes.assign(tower.level(i).size(), 0);
        vector<int> window(lp);
        for (int x = lp ; x <= n ; ++x) {
            for (int a = 0 ; a < lp ; ++a)
                window[a] = x - lp + 1 + a;
            auto value = cert.g[i - 1][top_idx.rank(window)];
            cert.phi.push_back(value);
            cert.max_fiber = std::max(cert.max_fiber, ++cert.fiber_sizes[value]);
        }
        cert.fibers_ok = cert.max_fiber <= static_cast<size_t>(d);
        return CertificateOutcome{std::move(cert), std::nullopt};
    }

    auto write_coloring(const EdgeColoring & c) -> string
    {
        std::ostringstream out;
        out << "okr-coloring v1 k=" << c.k() << " n=" << c.n() << " t=" << c.t() << "\n";
        c.for_each_edge([&] (const vector<int> & e, int col) {
            for (auto v : e)
                out << v << ' ';
            out << col << '\n';
        });
        return out.str();
    }

    namespace
    {
        auto header_field(const string & token, const string & name) -> int
        {
            if (token.rfind(name + "=", 0) != 0)
                throw ParseError("expected " + name + "=..., got '" + token + "'");
            try {
                size_t used = 0;
                auto value = std::stoi(token.substr(name.size() + 1), &used);
                if (used + name.size() + 1 != token.size())
                    throw ParseError("trailing junk in '" + token + "'");
                return value;
            }
            catch (const std::logic_error &) {
                throw ParseError("bad number in '" + token + "'");
            }
        }
    }

    auto read_coloring(const string & text) -> EdgeColoring
    {
        std::istringstream in(text);
        string line;
        if (! std::getline(in, line))
            throw ParseError("empty coloring file");
        std::istringstream header(line);
        string magic, version, kf, nf, tf, extra;
        header >> magic >> version >> kf >> nf >> tf;
        if (magic != "okr-coloring" || version != "v1" || (header >> extra))
            throw ParseError("bad coloring header: " + line);
        int k = header_field(kf, "k"), n = header_field(nf, "n"), t = header_field(tf, "t");

        EdgeColoring c;
        try {
            c = EdgeColoring(n, k, t);
        }
        catch (const InvalidArgument & e) {
            throw ParseError(e.what());
        }

        uint64_t rank = 0;
        auto expected = n >= k ? first_combination(k) : vector<int>{};
        vector<int> fields;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == string::npos)
                continue;
            std::istringstream row(line);
            fields.clear();
            int v;
            while (row >> v)
                fields.push_back(v);
            if (! row.eof() || static_cast<int>(fields.size()) != k + 1)
                throw ParseError("bad coloring line: " + line);
            if (rank >= c.edge_count() || ! std::equal(expected.begin(), expected.end(), fields.begin()))
                throw ParseError("coloring lines out of lexicographic order at: " + line);
            if (fields.back() < 1 || fields.back() > t)
                throw ParseError("color out of range at: " + line);
            c.set_color_at(rank++, fields.back());
            next_combination(expected, n);
        }
        if (rank != c.edge_count())
            throw ParseError("coloring file has " + std::to_string(rank) + " edges, expected " + std::to_string(c.edge_count()));
        return c;
    }
}
