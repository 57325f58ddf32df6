#pragma once

// Poset weights on G_1 x ... x G_n, hierarchical posets, and the closed-form
// Krawtchouk matrices of hierarchical poset partitions.
//
// Coordinates are 0-based in this API (the JSON format is 1-based).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fpart/matrix.hpp"
#include "fpart/partition.hpp"

namespace fpart {

class Poset {
   public:
    /// Transitive closure of the given cover pairs (a, b) meaning a < b; throws invalid_input on a cycle.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);
    /// Validates a full strict-order matrix (irreflexive and transitive).
    static Poset from_relation(int n, const std::vector<char>& lt);
    static Poset chain(int n);
    static Poset antichain(int n);
    /// H(n; n_1, ..., n_t) with levels laid out consecutively: level 1 is {0..n_1-1}, and so on.
    static Poset hierarchical(const std::vector<int>& levels);

    [[nodiscard]] int size() const noexcept { return n_; }
    [[nodiscard]] bool less(int a, int b) const { return lt_[static_cast<std::size_t>(a * n_ + b)] != 0; }
    [[nodiscard]] const std::vector<char>& relation() const noexcept { return lt_; }
    /// Covering pairs (a, b): a < b with nothing strictly between.
    [[nodiscard]] std::vector<std::pair<int, int>> covers() const;

    bool operator==(const Poset&) const = default;

   private:
    Poset(int n, std::vector<char> lt) : n_(n), lt_(std::move(lt)) {}
    int n_ = 0;
    std::vector<char> lt_;
};

struct HierarchicalShape {
    std::vector<int> levels;    ///< n_1, ..., n_t
    std::vector<int> level_of;  ///< coordinate -> 0-based level

    bool operator==(const HierarchicalShape&) const = default;
};

/// Downward closure of the coordinate set, sorted.
std::vector<int> ideal(const Poset& poset, const std::vector<int>& coordinates);

/// |<supp(g)>|.
int poset_weight(const Poset& poset, const GroupSpec& group, const Element& g);

/// Fibers of the poset weight; always n+1 blocks.
Partition poset_partition(const Poset& poset, const GroupSpec& group, const Limits& limits = {});

/// Block index of the weight-w block of poset_partition, for w = 0..n.
std::vector<std::size_t> blocks_by_weight(const Poset& poset, const Partition& poset_part);

/// Reversed order.
Poset dual_poset(const Poset& poset);

/// Levels by repeated removal of minimal elements, accepted only if every
/// element of a lower level is below every element of each higher level.
std::optional<HierarchicalShape> is_hierarchical(const Poset& poset);

/// K_m^{(n,q)}(x) = sum_j (-1)^j (q-1)^(m-j) C(x, j) C(n-x, m-j).
BigInt classical_krawtchouk(int n, int q, int m, int x);

/// Index bookkeeping for the closed form.
///
/// Levels are 1-based, N_s = n_1 + ... + n_{s-1}. Column m >= 1 decomposes as
/// m = N_s + mu with 1 <= mu <= n_s; row l >= 1 as l = n - N_{t-r+1} + lambda
/// with 1 <= lambda <= n_{t-r}. Row and column 0 map to (0, 0).
class PosetKrawtchoukIndex {
   public:
    explicit PosetKrawtchoukIndex(std::vector<int> levels);

    [[nodiscard]] int levels() const noexcept { return static_cast<int>(sizes_.size()); }
    [[nodiscard]] int size() const noexcept { return cumulative_.back(); }
    /// n_s for 1 <= s <= t.
    [[nodiscard]] int level_size(int s) const { return sizes_[static_cast<std::size_t>(s - 1)]; }
    /// N_s for 1 <= s <= t+1.
    [[nodiscard]] int cumulative(int s) const { return cumulative_[static_cast<std::size_t>(s - 1)]; }

    /// (s_m, mu_m)
    [[nodiscard]] std::pair<int, int> column(int m) const;
    /// (r_l, lambda_l)
    [[nodiscard]] std::pair<int, int> row(int l) const;

   private:
    std::vector<int> sizes_;
    std::vector<int> cumulative_;  // N_1 .. N_{t+1}
};

/// Closed-form Krawtchouk matrix of (P_P, P_dual(P)) for P = H(n; n_1..n_t) with
/// |G_{i,j}| = q_i; entry (l, m) with rows and columns indexed by weight.
Matrix<BigInt> hierarchical_krawtchouk(const HierarchicalShape& shape, const std::vector<int>& level_orders, int n);

/// Chain 1 < ... < n over groups of order q.
Matrix<BigInt> rt_krawtchouk(int n, int q);

/// Krawtchouk matrix of the poset partition computed from character sums.
/// Rows are dual-poset weights 0..n, columns are poset weights 0..n.
/// Throws invalid_input if the dual-poset partition does not refine the dual partition.
Matrix<BigInt> poset_krawtchouk_brute(const Poset& poset, const GroupSpec& group, const Limits& limits = {});

struct PosetDualityVerdict {
    bool equal = false;              ///< dual(P_P) == P_{dual P}
    bool dual_refines_target = false;///< dual(P_P) finer than or equal to P_{dual P}
    bool target_refines_dual = false;
    std::optional<HierarchicalShape> shape;
    /// Hierarchical and all coordinate groups within each level have equal order.
    bool levels_equal_order = false;
};

PosetDualityVerdict poset_duality_check(const Poset& poset, const GroupSpec& group, const Limits& limits = {});

/// Every strict partial order on {0..n-1}.
std::vector<Poset> labeled_posets(int n);

}  // namespace fpart
