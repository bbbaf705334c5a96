#pragma once

#include <ordram/bigint.hpp>
#include <ordram/bitset.hpp>
#include <ordram/paths.hpp>

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ordram
{
    inline constexpr std::size_t default_materialization_cap = std::size_t{1} << 20;

    /// Finite poset on elements 0..size-1. Stored as, for each b, the set {a : a <= b}.
    class Poset
    {
        private:
            std::vector<Bitset> _below;
            std::vector<std::string> _labels;

        public:
            Poset() = default;

            /// Takes the rows as given; the caller promises they already form a partial order.
            explicit Poset(std::vector<Bitset> below);

            /// Reflexive-transitive closure of the listed pairs (a <= b). Throws
            /// InvalidArgument if the closure is not antisymmetric.
            static auto from_relation(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>> & pairs) -> Poset;

            auto size() const -> std::size_t { return _below.size(); }
            auto leq(std::size_t a, std::size_t b) const -> bool { return _below[b].test(a); }
            auto below(std::size_t b) const -> const Bitset & { return _below[b]; }

            auto labels() const -> const std::vector<std::string> & { return _labels; }
            auto set_labels(std::vector<std::string> labels) -> void;

            /// Non-reflexive related pairs, ordered by (a, b).
            auto related_pairs() const -> std::vector<std::pair<std::size_t, std::size_t>>;
            /// Includes the reflexive pairs.
            auto count_related_pairs() const -> std::size_t;

            /// Checks reflexivity, antisymmetry and transitivity exhaustively.
            auto is_partial_order() const -> bool;

            /// Ordering of the elements in which every element comes after everything below it.
            /// Index order when that already works.
            auto linear_extension() const -> std::vector<std::size_t>;

            auto is_linear_extension(const std::vector<std::size_t> & order) const -> bool;

            /// For each element, the elements it covers.
            auto lower_covers() const -> std::vector<std::vector<std::size_t>>;

            auto operator== (const Poset &) const -> bool = default;
    };

    auto chain(std::size_t n) -> Poset;

    auto disjoint_union(const std::vector<Poset> & parts) -> Poset;

    /// D(A), the smallest down-set containing A.
    auto down_closure(const Poset & p, const std::vector<std::size_t> & elements) -> Bitset;

    auto is_down_set(const Poset & p, const Bitset & members) -> bool;

    auto maximal_elements(const Poset & p, const Bitset & members) -> std::vector<std::size_t>;

    auto is_antichain(const Poset & p, const std::vector<std::size_t> & elements) -> bool;

    /// True iff no consecutive pair has seq[i] containing seq[i+1] (equality counts as a descent).
    auto is_descent_free(const std::vector<std::size_t> & seq, const Poset & p) -> bool;

    /// Orders down-sets by cardinality, then lexicographically on the sorted member lists.
    auto canonical_less(const Bitset & a, const Bitset & b) -> bool;

    /// J(P) with canonical element order and membership vectors.
    struct DownsetLattice
    {
        Poset poset;
        std::vector<Bitset> members;
        std::unordered_map<Bitset, std::size_t, BitsetHash> index;

        auto find(const Bitset & s) const -> std::optional<std::size_t>;
    };

    /// All down-sets of P in canonical order. Throws BudgetExceeded above cap.
    auto enumerate_downsets(const Poset & p, std::size_t cap = default_materialization_cap) -> std::vector<Bitset>;

    auto downset_lattice(const Poset & p, std::size_t cap = default_materialization_cap) -> DownsetLattice;

    using Deadline = std::optional<std::chrono::steady_clock::time_point>;

    /// |J(P)| by a frontier dynamic program along a linear extension.
    auto count_downsets(const Poset & p, Deadline deadline = std::nullopt) -> BigInt;

    struct QTowerSpec
    {
        int m = 1;
        std::vector<int> sizes;
    };

    /// Q_1..Q_m for one size list. Level m (1-based) is levels[m - 1].
    class QTower
    {
        private:
            std::vector<int> _kept_colors;
            std::vector<std::size_t> _chain_offset;
            std::vector<int> _q1_color, _q1_height;
            std::vector<Poset> _levels;
            std::vector<DownsetLattice> _lattices;

        public:
            QTower(const QTowerSpec & spec, std::size_t cap = default_materialization_cap);

            auto height() const -> int { return static_cast<int>(_levels.size()); }
            auto level(int m) const -> const Poset & { return _levels.at(m - 1); }

            /// Membership vector (over Q_{m-1}) of element x of Q_m, for m >= 2.
            auto members(int m, std::size_t x) const -> const Bitset &;
            auto lookup(int m, const Bitset & s) const -> std::optional<std::size_t>;

            /// Original 0-based color index of a Q_1 element.
            auto color_of(std::size_t q1) const -> int { return _q1_color[q1]; }
            /// 1-based height of a Q_1 element within its chain.
            auto height_of(std::size_t q1) const -> int { return _q1_height[q1]; }
            /// Q_1 element at the given 1-based height of the chain for original color j.
            auto chain_element(int color, int h) const -> std::size_t;
            auto has_chain(int color) const -> bool;
    };

    auto build_Q(const QTowerSpec & spec, std::size_t cap = default_materialization_cap) -> Poset;

    /// |Q_m|: closed forms for m <= 2, otherwise a down-set count of Q_{m-1}.
    auto size_Q(int m, const std::vector<int> & sizes, Deadline deadline = std::nullopt,
            std::size_t cap = default_materialization_cap) -> BigInt;

    struct QStar
    {
        int k = 0, l = 0, i = 0, lprime = 0;
        std::size_t base_size = 0;
        int copies = 0;
        int chain_length = 0;
        Poset poset;
        /// Base element of each non-chain element; nullopt on L.
        std::vector<std::optional<std::size_t>> projection;
        /// Copy index (0-based) of each non-chain element; -1 on L.
        std::vector<int> copy;
        std::vector<std::size_t> extension;
    };

    /// Q_i^* for k > l >= 1. Element q * (k - l) + j is copy j of base element q; L follows.
    auto build_Q_star(int k, int l, const QTower & tower) -> QStar;
    auto build_Q_star(int k, int l, const std::vector<int> & sizes, std::size_t cap = default_materialization_cap) -> QStar;

    auto write_poset(const Poset & p) -> std::string;
    auto read_poset(const std::string & text) -> Poset;
}
