#include <ordram/errors.hpp>
#include <ordram/poset.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::vector;

namespace ordram
{
    Poset::Poset(vector<Bitset> below) :
        _below(std::move(below))
    {
    }

    auto Poset::from_relation(size_t size, const vector<pair<size_t, size_t>> & pairs) -> Poset
    {
        vector<Bitset> below(size, Bitset(size));
        for (size_t a = 0 ; a < size ; ++a)
            below[a].set(a);
        for (auto & [a, b] : pairs) {
            if (a >= size || b >= size)
                throw InvalidArgument("relation index out of range");
            below[b].set(a);
        }

        // Warshall on rows: if a <= b then everything below a is below b
        for (size_t a = 0 ; a < size ; ++a)
            for (size_t b = 0 ; b < size ; ++b)
                if (below[b].test(a))
                    below[b] |= below[a];

        for (size_t a = 0 ; a < size ; ++a)
            for (size_t b = a + 1 ; b < size ; ++b)
                if (below[b].test(a) && below[a].test(b))
                    throw InvalidArgument("relation is not antisymmetric");

        return Poset{std::move(below)};
    }

    auto Poset::set_labels(vector<string> labels) -> void
    {
        if (! labels.empty() && labels.size() != size())
            throw InvalidArgument("label count does not match poset size");
        _labels = std::move(labels);
    }

    auto Poset::related_pairs() const -> vector<pair<size_t, size_t>>
    {
        vector<pair<size_t, size_t>> result;
        for (size_t a = 0 ; a < size() ; ++a)
            for (size_t b = 0 ; b < size() ; ++b)
                if (a != b && leq(a, b))
                    result.emplace_back(a, b);
        return result;
    }

    auto Poset::count_related_pairs() const -> size_t
    {
        size_t result = 0;
        for (auto & row : _below)
            result += row.count();
        return result;
    }

    auto Poset::is_partial_order() const -> bool
    {
        auto n = size();
        for (size_t a = 0 ; a < n ; ++a) {
            if (_below[a].size() != n || ! leq(a, a))
                return false;
            for (size_t b = 0 ; b < n ; ++b) {
                if (a != b && leq(a, b) && leq(b, a))
                    return false;
                if (leq(a, b) && ! _below[a].is_subset_of(_below[b]))
                    return false;
            }
        }
        return true;
    }

    auto Poset::is_linear_extension(const vector<size_t> & order) const -> bool
    {
        if (order.size() != size())
            return false;
        vector<size_t> position(size(), size());
        for (size_t p = 0 ; p < order.size() ; ++p) {
            if (order[p] >= size() || position[order[p]] != size())
                return false;
            position[order[p]] = p;
        }
        for (size_t b = 0 ; b < size() ; ++b)
            for (auto a : _below[b].members())
                if (position[a] > position[b])
                    return false;
        return true;
    }

    auto Poset::linear_extension() const -> vector<size_t>
    {
        vector<size_t> identity(size());
        std::iota(identity.begin(), identity.end(), 0);
        if (is_linear_extension(identity))
            return identity;

        vector<size_t> pending(size());
        vector<vector<size_t>> above(size());
        for (size_t b = 0 ; b < size() ; ++b)
            for (auto a : _below[b].members())
                if (a != b) {
                    ++pending[b];
                    above[a].push_back(b);
                }

        std::priority_queue<size_t, vector<size_t>, std::greater<>> ready;
        for (size_t a = 0 ; a < size() ; ++a)
            if (0 == pending[a])
                ready.push(a);

        vector<size_t> result;
        while (! ready.empty()) {
            auto a = ready.top();
            ready.pop();
            result.push_back(a);
            for (auto b : above[a])
                if (0 == --pending[b])
                    ready.push(b);
        }
        return result;
    }

    auto Poset::lower_covers() const -> vector<vector<size_t>>
    {
        vector<vector<size_t>> result(size());
        for (size_t b = 0 ; b < size() ; ++b) {
            auto strictly = _below[b];
            strictly.reset(b);
            result[b] = maximal_elements(*this, strictly);
        }
        return result;
    }

    auto chain(size_t n) -> Poset
    {
        vector<Bitset> below(n, Bitset(n));
        for (size_t b = 0 ; b < n ; ++b)
            for (size_t a = 0 ; a <= b ; ++a)
                below[b].set(a);
        return Poset{std::move(below)};
    }

    auto disjoint_union(const vector<Poset> & parts) -> Poset
    {
        size_t n = 0;
        for (auto & p : parts)
            n += p.size();

        vector<Bitset> below(n, Bitset(n));
        size_t offset = 0;
        for (auto & p : parts) {
            for (size_t b = 0 ; b < p.size() ; ++b)
                for (auto a : p.below(b).members())
                    below[offset + b].set(offset + a);
            offset += p.size();
        }
        return Poset{std::move(below)};
    }

    auto down_closure(const Poset & p, const vector<size_t> & elements) -> Bitset
    {
        Bitset result(p.size());
        for (auto a : elements) {
            if (a >= p.size())
                throw InvalidArgument("element " + std::to_string(a) + " out of range");
            result |= p.below(a);
        }
        return result;
    }

    auto is_down_set(const Poset & p, const Bitset & members) -> bool
    {
        for (auto b : members.members())
            if (! p.below(b).is_subset_of(members))
                return false;
        return true;
    }

    auto maximal_elements(const Poset & p, const Bitset & members) -> vector<size_t>
    {
        vector<size_t> result;
        auto list = members.members();
        for (auto a : list) {
            bool maximal = true;
            for (auto c : list)
                if (c != a && p.leq(a, c)) {
                    maximal = false;
                    break;
                }
            if (maximal)
                result.push_back(a);
        }
        return result;
    }

    auto is_antichain(const Poset & p, const vector<size_t> & elements) -> bool
    {
        for (size_t x = 0 ; x < elements.size() ; ++x)
            for (size_t y = 0 ; y < elements.size() ; ++y)
                if (x != y && p.leq(elements[x], elements[y]))
                    return false;
        return true;
    }

    auto is_descent_free(const vector<size_t> & seq, const Poset & p) -> bool
    {
        for (size_t i = 0 ; i + 1 < seq.size() ; ++i)
            if (p.leq(seq[i + 1], seq[i]))
                return false;
        return true;
    }

    auto canonical_less(const Bitset & a, const Bitset & b) -> bool
    {
        auto ca = a.count(), cb = b.count();
        if (ca != cb)
            return ca < cb;
        // first difference of the sorted member lists decides
        for (auto x = a.find_first(), y = b.find_first() ; x < a.size() ; x = a.find_next(x), y = b.find_next(y))
            if (x != y)
                return x < y;
        return false;
    }

    auto DownsetLattice::find(const Bitset & s) const -> optional<size_t>
    {
        auto it = index.find(s);
        if (it == index.end())
            return std::nullopt;
        return it->second;
    }

    namespace
    {
        struct DownsetEnumerator
        {
            const Poset & p;
            vector<size_t> order;
            vector<Bitset> strictly_below;
            size_t cap;
            vector<Bitset> found;

            auto go(size_t pos, Bitset & current) -> void
            {
                if (pos == order.size()) {
                    if (found.size() >= cap)
                        throw BudgetExceeded("down-set enumeration exceeded cap of " + std::to_string(cap));
                    found.push_back(current);
                    return;
                }
                auto x = order[pos];
                go(pos + 1, current);
                if (strictly_below[x].is_subset_of(current)) {
                    current.set(x);
                    go(pos + 1, current);
                    current.reset(x);
                }
            }
        };
    }

    auto enumerate_downsets(const Poset & p, size_t cap) -> vector<Bitset>
    {
        DownsetEnumerator e{p, p.linear_extension(), {}, cap, {}};
        for (size_t b = 0 ; b < p.size() ; ++b) {
            e.strictly_below.push_back(p.below(b));
            e.strictly_below.back().reset(b);
        }
        Bitset current(p.size());
        e.go(0, current);
        std::sort(e.found.begin(), e.found.end(), canonical_less);
        return std::move(e.found);
    }

    auto downset_lattice(const Poset & p, size_t cap) -> DownsetLattice
    {
        DownsetLattice result;
        result.members = enumerate_downsets(p, cap);
        auto n = result.members.size();

        vector<Bitset> below(n, Bitset(n));
        for (size_t y = 0 ; y < n ; ++y) {
            result.index.emplace(result.members[y], y);
            // anything contained in y has no larger cardinality, so sits no later in canonical order
            for (size_t x = 0 ; x <= y ; ++x)
                if (result.members[x].is_subset_of(result.members[y]))
                    below[y].set(x);
        }
        result.poset = Poset{std::move(below)};
        return result;
    }

    auto count_downsets(const Poset & p, Deadline deadline) -> BigInt
    {
        auto n = p.size();
        auto order = p.linear_extension();
        auto covers = p.lower_covers();

        vector<size_t> position(n);
        for (size_t i = 0 ; i < n ; ++i)
            position[order[i]] = i;

        // an element stays in the frontier until its last upper cover has been decided
        vector<size_t> last_needed(n, 0);
        vector<bool> needed(n, false);
        for (size_t b = 0 ; b < n ; ++b)
            for (auto a : covers[b]) {
                last_needed[a] = std::max(last_needed[a], position[b]);
                needed[a] = true;
            }

        vector<vector<size_t>> expire_at(n);
        for (size_t a = 0 ; a < n ; ++a)
            expire_at[needed[a] ? last_needed[a] : position[a]].push_back(a);

        std::unordered_map<Bitset, BigInt, BitsetHash> states, next;
        states.emplace(Bitset(n), BigInt{1});

        for (size_t i = 0 ; i < n ; ++i) {
            if (deadline && std::chrono::steady_clock::now() > *deadline)
                throw BudgetExceeded("count_downsets ran out of time");

            auto x = order[i];
            next.clear();
            for (auto & [state, count] : states) {
                bool can_include = true;
                for (auto a : covers[x])
                    if (! state.test(a)) {
                        can_include = false;
                        break;
                    }

                auto without = state;
                for (auto a : expire_at[i])
                    without.reset(a);
                next[without] += count;

                if (can_include) {
                    auto with = state;
                    with.set(x);
                    for (auto a : expire_at[i])
                        with.reset(a);
                    next[with] += count;
                }
            }
            std::swap(states, next);
        }

        BigInt total = 0;
        for (auto & [state, count] : states)
            total += count;
        return total;
    }

    QTower::QTower(const QTowerSpec & spec, size_t cap)
    {
        if (spec.m < 1)
            throw InvalidArgument("tower height must be at least 1");

        vector<Poset> chains;
        size_t offset = 0;
        for (size_t j = 0 ; j < spec.sizes.size() ; ++j) {
            auto e = spec.sizes[j];
            if (e < 1)
                throw InvalidArgument("chain sizes must be positive");
            _chain_offset.push_back(offset);
            if (e == 1)
                continue;
            _kept_colors.push_back(static_cast<int>(j));
            chains.push_back(chain(e - 1));
            for (int h = 1 ; h <= e - 1 ; ++h) {
                _q1_color.push_back(static_cast<int>(j));
                _q1_height.push_back(h);
            }
            offset += e - 1;
        }

        _levels.push_back(disjoint_union(chains));
        for (int m = 2 ; m <= spec.m ; ++m) {
            _lattices.push_back(downset_lattice(_levels.back(), cap));
            _levels.push_back(_lattices.back().poset);
        }
    }

    auto QTower::members(int m, size_t x) const -> const Bitset &
    {
        return _lattices.at(m - 2).members.at(x);
    }

    auto QTower::lookup(int m, const Bitset & s) const -> optional<size_t>
    {
        return _lattices.at(m - 2).find(s);
    }

    auto QTower::has_chain(int color) const -> bool
    {
        return std::find(_kept_colors.begin(), _kept_colors.end(), color) != _kept_colors.end();
    }

    auto QTower::chain_element(int color, int h) const -> size_t
    {
        if (! has_chain(color))
            throw InvalidArgument("color has an empty chain");
        auto result = _chain_offset.at(color) + h - 1;
        if (h < 1 || result >= _q1_color.size() || _q1_color[result] != color)
            throw InvalidArgument("chain height out of range");
        return result;
    }

    auto build_Q(const QTowerSpec & spec, size_t cap) -> Poset
    {
        QTower tower(spec, cap);
        return tower.level(spec.m);
    }

    auto size_Q(int m, const vector<int> & sizes, Deadline deadline, size_t cap) -> BigInt
    {
        if (m < 1)
            throw InvalidArgument("tower height must be at least 1");
        for (auto e : sizes)
            if (e < 1)
                throw InvalidArgument("chain sizes must be positive");

        if (m == 1) {
            BigInt result = 0;
            for (auto e : sizes)
                result += e - 1;
            return result;
        }
        if (m == 2) {
            BigInt result = 1;
            for (auto e : sizes)
                result *= e;
            return result;
        }
        QTower tower(QTowerSpec{m - 1, sizes}, cap);
        return count_downsets(tower.level(m - 1), deadline);
    }

    auto build_Q_star(int k, int l, const QTower & tower) -> QStar
    {
        if (! (k > l && l >= 1))
            throw InvalidArgument("Q* needs k > l >= 1");

        QStar result;
        result.k = k;
        result.l = l;
        result.i = intersection_number(k, l);
        result.lprime = l_prime(k, l);
        result.copies = k - l;
        result.chain_length = result.lprime - 1;
        if (tower.height() < result.i)
            throw InvalidArgument("tower too short for Q*");

        auto & base = tower.level(result.i);
        auto b = base.size();
        auto c = static_cast<size_t>(result.copies);
        auto n = b * c + static_cast<size_t>(result.chain_length);
        result.base_size = b;

        vector<Bitset> below(n, Bitset(n));
        for (size_t q = 0 ; q < b ; ++q)
            for (size_t j = 0 ; j < c ; ++j) {
                auto & row = below[q * c + j];
                for (auto p : base.below(q).members()) {
                    if (p == q)
                        for (size_t jj = 0 ; jj <= j ; ++jj)
                            row.set(q * c + jj);
                    else
                        for (size_t jj = 0 ; jj < c ; ++jj)
                            row.set(p * c + jj);
                }
                result.projection.push_back(q);
                result.copy.push_back(static_cast<int>(j));
            }
        for (size_t h = 0 ; h < static_cast<size_t>(result.chain_length) ; ++h) {
            auto & row = below[b * c + h];
            for (size_t a = 0 ; a <= b * c + h ; ++a)
                row.set(a);
            result.projection.push_back(std::nullopt);
            result.copy.push_back(-1);
        }
        result.poset = Poset{std::move(below)};

        for (auto q : base.linear_extension())
            for (size_t j = 0 ; j < c ; ++j)
                result.extension.push_back(q * c + j);
        for (size_t h = 0 ; h < static_cast<size_t>(result.chain_length) ; ++h)
            result.extension.push_back(b * c + h);

        return result;
    }

    auto build_Q_star(int k, int l, const vector<int> & sizes, size_t cap) -> QStar
    {
        QTower tower(QTowerSpec{intersection_number(k, l), sizes}, cap);
        return build_Q_star(k, l, tower);
    }

    auto write_poset(const Poset & p) -> string
    {
        std::ostringstream out;
        out << "poset v1 n=" << p.size() << "\n";
        for (auto & [a, b] : p.related_pairs())
            out << a << "<=" << b << "\n";
        return out.str();
    }

    auto read_poset(const string & text) -> Poset
    {
        std::istringstream in(text);
        string line;
        if (! std::getline(in, line))
            throw ParseError("empty poset file");
        size_t n = 0;
        {
            std::istringstream header(line);
            string magic, version, size_field;
            header >> magic >> version >> size_field;
            if (magic != "poset" || version != "v1" || size_field.rfind("n=", 0) != 0)
                throw ParseError("bad poset header: " + line);
            try {
                n = std::stoul(size_field.substr(2));
            }
            catch (const std::exception &) {
                throw ParseError("bad poset size: " + size_field);
            }
        }

        vector<pair<size_t, size_t>> pairs;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            auto sep = line.find("<=");
            if (sep == string::npos)
                throw ParseError("bad poset line: " + line);
            try {
                pairs.emplace_back(std::stoul(line.substr(0, sep)), std::stoul(line.substr(sep + 2)));
            }
            catch (const std::exception &) {
                throw ParseError("bad poset line: " + line);
            }
        }
        try {
            return Poset::from_relation(n, pairs);
        }
        catch (const InvalidArgument & e) {
            throw ParseError(e.what());
        }
    }
}
