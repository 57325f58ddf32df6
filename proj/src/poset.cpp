#include "fpart/poset.hpp"

#include <algorithm>
#include <string>

namespace fpart {

namespace {

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt power(int base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

bool is_strict_order(int n, const std::vector<char>& lt) {
    for (int a = 0; a < n; ++a) {
        if (lt[static_cast<std::size_t>(a * n + a)]) return false;
        for (int b = 0; b < n; ++b) {
            if (!lt[static_cast<std::size_t>(a * n + b)]) continue;
            for (int c = 0; c < n; ++c)
                if (lt[static_cast<std::size_t>(b * n + c)] && !lt[static_cast<std::size_t>(a * n + c)]) return false;
        }
    }
    return true;
}

void require_n(int n) {
    if (n < 1 || n > 30) throw invalid_input("poset size must be in 1..30, got " + std::to_string(n));
}

}  // namespace

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    require_n(n);
    const auto un = static_cast<std::size_t>(n);
    std::vector<char> lt(un * un, 0);
    for (auto [a, b] : covers) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw invalid_input("poset cover relation out of range");
        lt[static_cast<std::size_t>(a * n + b)] = 1;
    }
    // Warshall closure.
    for (std::size_t k = 0; k < un; ++k)
        for (std::size_t i = 0; i < un; ++i)
            if (lt[i * un + k])
                for (std::size_t j = 0; j < un; ++j)
                    if (lt[k * un + j]) lt[i * un + j] = 1;
    for (std::size_t i = 0; i < un; ++i)
        if (lt[i * un + i]) throw invalid_input("poset cover relations contain a cycle through " + std::to_string(i + 1));
    return Poset(n, std::move(lt));
}

Poset Poset::from_relation(int n, const std::vector<char>& lt) {
    require_n(n);
    if (lt.size() != static_cast<std::size_t>(n * n)) throw invalid_input("poset relation has the wrong size");
    std::vector<char> norm(lt.size());
    for (std::size_t i = 0; i < lt.size(); ++i) norm[i] = lt[i] ? 1 : 0;
    if (!is_strict_order(n, norm)) throw invalid_input("relation is not a strict partial order");
    return Poset(n, std::move(norm));
}

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return from_covers(n, covers);
}

Poset Poset::antichain(int n) { return from_covers(n, {}); }

Poset Poset::hierarchical(const std::vector<int>& levels) {
    int n = 0;
    std::vector<int> level_of;
    for (std::size_t s = 0; s < levels.size(); ++s) {
        if (levels[s] < 1) throw invalid_input("hierarchical level sizes must be positive");
        for (int j = 0; j < levels[s]; ++j) level_of.push_back(static_cast<int>(s));
        n += levels[s];
    }
    require_n(n);
    std::vector<char> lt(static_cast<std::size_t>(n * n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (level_of[static_cast<std::size_t>(a)] < level_of[static_cast<std::size_t>(b)]) lt[static_cast<std::size_t>(a * n + b)] = 1;
    return Poset(n, std::move(lt));
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (!less(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < n_ && direct; ++c)
                if (less(a, c) && less(c, b)) direct = false;
            if (direct) out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<int> ideal(const Poset& poset, const std::vector<int>& coordinates) {
    std::vector<char> in(static_cast<std::size_t>(poset.size()), 0);
    for (int c : coordinates) {
        if (c < 0 || c >= poset.size()) throw invalid_input("ideal: coordinate out of range");
        in[static_cast<std::size_t>(c)] = 1;
    }
    std::vector<int> out;
    for (int a = 0; a < poset.size(); ++a) {
        bool below = in[static_cast<std::size_t>(a)] != 0;
        for (int c : coordinates)
            if (!below && poset.less(a, c)) below = true;
        if (below) out.push_back(a);
    }
    return out;
}

int poset_weight(const Poset& poset, const GroupSpec& group, const Element& g) {
    if (group.factors() != static_cast<std::size_t>(poset.size()))
        throw invalid_input("poset_weight: group has " + std::to_string(group.factors()) + " factors, poset has " +
                            std::to_string(poset.size()) + " elements");
    group.require_element(g);
    std::vector<int> support;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) support.push_back(static_cast<int>(i));
    return static_cast<int>(ideal(poset, support).size());
}

Partition poset_partition(const Poset& poset, const GroupSpec& group, const Limits& limits) {
    if (group.factors() != static_cast<std::size_t>(poset.size()))
        throw invalid_input("poset_partition: group factors must match the poset size");
    return Partition::from_weight(group, [&](const Element& g) { return poset_weight(poset, group, g); }, limits);
}

std::vector<std::size_t> blocks_by_weight(const Poset& poset, const Partition& poset_part) {
    std::vector<std::size_t> out(static_cast<std::size_t>(poset.size()) + 1, static_cast<std::size_t>(-1));
    for (std::size_t m = 0; m < poset_part.block_count(); ++m) {
        const int w = poset_weight(poset, poset_part.group(), poset_part.representative(m));
        out[static_cast<std::size_t>(w)] = m;
    }
    for (auto b : out)
        if (b == static_cast<std::size_t>(-1)) throw invalid_input("blocks_by_weight: partition lacks a weight class");
    return out;
}

Poset dual_poset(const Poset& poset) {
    const int n = poset.size();
    std::vector<char> lt(static_cast<std::size_t>(n * n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) lt[static_cast<std::size_t>(a * n + b)] = poset.less(b, a) ? 1 : 0;
    return Poset::from_relation(n, lt);
}

std::optional<HierarchicalShape> is_hierarchical(const Poset& poset) {
    const int n = poset.size();
    HierarchicalShape shape;
    shape.level_of.assign(static_cast<std::size_t>(n), -1);
    int placed = 0;
    while (placed < n) {
        std::vector<int> minimal;
        for (int a = 0; a < n; ++a) {
            if (shape.level_of[static_cast<std::size_t>(a)] != -1) continue;
            bool is_min = true;
            for (int b = 0; b < n && is_min; ++b)
                if (shape.level_of[static_cast<std::size_t>(b)] == -1 && poset.less(b, a)) is_min = false;
            if (is_min) minimal.push_back(a);
        }
        for (int a : minimal) shape.level_of[static_cast<std::size_t>(a)] = static_cast<int>(shape.levels.size());
        shape.levels.push_back(static_cast<int>(minimal.size()));
        placed += static_cast<int>(minimal.size());
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const bool should = shape.level_of[static_cast<std::size_t>(a)] < shape.level_of[static_cast<std::size_t>(b)];
            if (poset.less(a, b) != should) return std::nullopt;
        }
    }
    return shape;
}

BigInt classical_krawtchouk(int n, int q, int m, int x) {
    if (n < 0 || m < 0 || x < 0 || m > n || x > n || q < 2) throw invalid_input("classical_krawtchouk: arguments out of range");
    BigInt sum = 0;
    for (int j = 0; j <= m; ++j) {
        BigInt term = power(q - 1, m - j) * binomial(x, j) * binomial(n - x, m - j);
        if (j % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

PosetKrawtchoukIndex::PosetKrawtchoukIndex(std::vector<int> levels) : sizes_(std::move(levels)) {
    if (sizes_.empty()) throw invalid_input("hierarchical shape needs at least one level");
    cumulative_.push_back(0);  // N_1
    for (int s : sizes_) {
        if (s < 1) throw invalid_input("hierarchical level sizes must be positive");
        cumulative_.push_back(cumulative_.back() + s);
    }
}

std::pair<int, int> PosetKrawtchoukIndex::column(int m) const {
    if (m < 0 || m > size()) throw invalid_input("column index out of range");
    if (m == 0) return {0, 0};
    for (int s = 1; s <= levels(); ++s) {
        const int mu = m - cumulative(s);
        if (mu >= 1 && mu <= level_size(s)) return {s, mu};
    }
    throw std::logic_error("column decomposition failed");
}

std::pair<int, int> PosetKrawtchoukIndex::row(int l) const {
    if (l < 0 || l > size()) throw invalid_input("row index out of range");
    if (l == 0) return {0, 0};
    const int t = levels();
    for (int r = 0; r < t; ++r) {
        const int lambda = l - (size() - cumulative(t - r + 1));
        if (lambda >= 1 && lambda <= level_size(t - r)) return {r, lambda};
    }
    throw std::logic_error("row decomposition failed");
}

Matrix<BigInt> hierarchical_krawtchouk(const HierarchicalShape& shape, const std::vector<int>& level_orders, int n) {
    const PosetKrawtchoukIndex index(shape.levels);
    if (index.size() != n) throw invalid_input("hierarchical_krawtchouk: level sizes do not sum to n");
    if (level_orders.size() != shape.levels.size()) throw invalid_input("hierarchical_krawtchouk: one group order per level required");
    for (int q : level_orders)
        if (q < 2) throw invalid_input("hierarchical_krawtchouk: group orders must be >= 2");
    const int t = index.levels();
    auto q_of = [&](int s) { return level_orders[static_cast<std::size_t>(s - 1)]; };
    auto prefix = [&](int s) {
        BigInt p = 1;
        for (int i = 1; i < s; ++i) p *= power(q_of(i), index.level_size(i));
        return p;
    };

    Matrix<BigInt> k(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1), BigInt(0));
    for (int l = 0; l <= n; ++l) {
        const auto [r, lambda] = index.row(l);
        for (int m = 0; m <= n; ++m) {
            const auto [s, mu] = index.column(m);
            BigInt& entry = k(static_cast<std::size_t>(l), static_cast<std::size_t>(m));
            if (m == 0) entry = 1;
            else if (s < t - r) entry = prefix(s) * power(q_of(s) - 1, mu) * binomial(index.level_size(s), mu);
            else if (s > t - r) entry = 0;
            else entry = prefix(s) * classical_krawtchouk(index.level_size(s), q_of(s), mu, lambda);
        }
    }
    return k;
}

Matrix<BigInt> rt_krawtchouk(int n, int q) {
    if (n < 1 || q < 2) throw invalid_input("rt_krawtchouk: need n >= 1 and q >= 2");
    Matrix<BigInt> k(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1), BigInt(0));
    for (int l = 0; l <= n; ++l) {
        for (int m = 0; m <= n; ++m) {
            BigInt& entry = k(static_cast<std::size_t>(l), static_cast<std::size_t>(m));
            if (m == 0) entry = 1;
            else if (l < n + 1 - m) entry = power(q, m - 1) * (q - 1);
            else if (l == n + 1 - m) entry = -power(q, m - 1);
            else entry = 0;
        }
    }
    return k;
}

Matrix<BigInt> poset_krawtchouk_brute(const Poset& poset, const GroupSpec& group, const Limits& limits) {
    const Poset dual = dual_poset(poset);
    const Partition primal = poset_partition(poset, group, limits);
    const Partition dual_side = poset_partition(dual, group, limits);
    const auto ints = integer_entries(krawtchouk(primal, dual_side, limits));
    if (!ints) throw verification_failure("poset Krawtchouk matrix has non-integer entries");
    const auto cols = blocks_by_weight(poset, primal);
    const auto rows = blocks_by_weight(dual, dual_side);
    const auto n = static_cast<std::size_t>(poset.size()) + 1;
    Matrix<BigInt> out(n, n, BigInt(0));
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) out(l, m) = (*ints)(rows[l], cols[m]);
    return out;
}

PosetDualityVerdict poset_duality_check(const Poset& poset, const GroupSpec& group, const Limits& limits) {
    const Partition primal = poset_partition(poset, group, limits);
    const Partition dual = dual_partition(primal, limits);
    const Partition target = poset_partition(dual_poset(poset), group, limits);
    PosetDualityVerdict v;
    v.equal = dual == target;
    v.dual_refines_target = refines(dual, target);
    v.target_refines_dual = refines(target, dual);
    v.shape = is_hierarchical(poset);
    if (v.shape) {
        std::vector<int> level_order(v.shape->levels.size(), 0);
        v.levels_equal_order = true;
        for (std::size_t i = 0; i < group.factors(); ++i) {
            int& q = level_order[static_cast<std::size_t>(v.shape->level_of[i])];
            if (q == 0) q = group.orders()[i];
            else if (q != group.orders()[i]) v.levels_equal_order = false;
        }
    }
    return v;
}

std::vector<Poset> labeled_posets(int n) {
    require_n(n);
    if (n > 5) throw guard_exceeded("labeled_posets: n > 5 is not enumerated");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) pairs.emplace_back(a, b);
    std::vector<Poset> out;
    const std::size_t total = std::size_t{1} << pairs.size();
    std::vector<char> lt(static_cast<std::size_t>(n * n));
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::fill(lt.begin(), lt.end(), 0);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1U) lt[static_cast<std::size_t>(pairs[i].first * n + pairs[i].second)] = 1;
        if (is_strict_order(n, lt)) out.push_back(Poset::from_relation(n, lt));
    }
    return out;
}

}  // namespace fpart
