#include "fpart/sampling.hpp"

#include <map>
#include <numeric>

namespace fpart {

Partition random_partition(const GroupSpec& group, Rng& rng) {
    const std::size_t size = group.cardinality();
    std::uniform_int_distribution<std::size_t> block_count(1, size);
    std::uniform_int_distribution<std::size_t> label(0, block_count(rng) - 1);
    std::vector<std::size_t> labels(size);
    for (auto& l : labels) l = label(rng);
    return Partition::from_labels(group, labels);
}

Partition random_partition_with_zero_block(const GroupSpec& group, Rng& rng) {
    const std::size_t size = group.cardinality();
    if (size == 1) return Partition::singletons(group);
    std::uniform_int_distribution<std::size_t> block_count(1, size - 1);
    std::uniform_int_distribution<std::size_t> label(1, block_count(rng));
    std::vector<std::size_t> labels(size);
    labels[0] = 0;
    for (std::size_t r = 1; r < size; ++r) labels[r] = label(rng);
    return Partition::from_labels(group, labels);
}

GroupIso random_automorphism(const GroupSpec& group, Rng& rng) {
    const std::size_t k = group.factors();
    const auto& n = group.orders();
    const auto elems = elements(group);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        // Entry (i, j) maps Z_{n_j} -> Z_{n_i}; well defined iff n_i | a * n_j.
        std::vector<std::vector<int>> a(k, std::vector<int>(k, 0));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                const int step = n[i] / std::gcd(n[i], n[j]);
                std::uniform_int_distribution<int> pick(0, n[i] / step - 1);
                a[i][j] = pick(rng) * step;
            }
        }
        std::map<Element, Element> table;
        std::vector<char> hit(elems.size(), 0);
        bool bijective = true;
        for (const auto& x : elems) {
            std::vector<int> y(k, 0);
            for (std::size_t i = 0; i < k; ++i) {
                long long acc = 0;
                for (std::size_t j = 0; j < k; ++j) acc += static_cast<long long>(a[i][j]) * x[j];
                y[i] = static_cast<int>(acc % n[i]);
            }
            Element img(std::move(y));
            const std::size_t r = group.rank(img);
            if (hit[r]) {
                bijective = false;
                break;
            }
            hit[r] = 1;
            table.emplace(x, std::move(img));
        }
        if (bijective) return GroupIso(group, table);
    }
    return GroupIso::identity(group);
}

Partition random_orbit_partition(const GroupSpec& group, Rng& rng) {
    const std::size_t size = group.cardinality();
    std::vector<std::size_t> parent(size);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto merge = [&](std::size_t x, std::size_t y) {
        const std::size_t a = find(x), b = find(y);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    std::uniform_int_distribution<int> count(1, 3);
    const int gens = count(rng);
    for (int i = 0; i < gens; ++i) {
        const GroupIso sigma = random_automorphism(group, rng);
        for (std::size_t r = 0; r < size; ++r) merge(r, sigma.image_rank(r));
    }
    if (rng() % 2) {
        for (std::size_t r = 0; r < size; ++r) merge(r, group.rank(group.negate(group.unrank(r))));
    }
    std::vector<std::size_t> labels(size);
    for (std::size_t r = 0; r < size; ++r) labels[r] = find(r);
    return Partition::from_labels(group, labels);
}

GroupFunction random_group_function(const GroupSpec& group, Rng& rng, int bound) {
    const std::uint32_t e = group.exponent();
    const std::uint32_t phi = euler_phi(e);
    std::uniform_int_distribution<int> coeff(-bound, bound);
    GroupFunction f;
    f.reserve(group.cardinality());
    for (std::size_t r = 0; r < group.cardinality(); ++r) {
        std::vector<BigInt> c(phi);
        for (auto& x : c) x = coeff(rng);
        f.emplace_back(e, std::move(c));
    }
    return f;
}

std::vector<Partition> all_partitions(const GroupSpec& group) {
    const std::size_t size = group.cardinality();
    if (size > 10) throw guard_exceeded("all_partitions: carrier too large for exhaustive enumeration");
    std::vector<Partition> out;
    std::vector<std::size_t> labels(size, 0);
    // Restricted growth strings: labels[i] <= 1 + max(labels[0..i-1]).
    auto recurse = [&](auto&& self, std::size_t i, std::size_t max_label) -> void {
        if (i == size) {
            out.push_back(Partition::from_labels(group, labels));
            return;
        }
        for (std::size_t l = 0; l <= max_label + 1; ++l) {
            labels[i] = l;
            self(self, i + 1, std::max(max_label, l));
        }
    };
    if (size == 0) return out;
    labels[0] = 0;
    recurse(recurse, 1, 0);
    return out;
}

std::vector<GroupSpec> groups_up_to(std::size_t max_order) {
    std::vector<GroupSpec> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, std::size_t product) -> void {
        if (!current.empty()) out.emplace_back(current);
        for (int n = 2; product * static_cast<std::size_t>(n) <= max_order; ++n) {
            current.push_back(n);
            self(self, product * static_cast<std::size_t>(n));
            current.pop_back();
        }
    };
    recurse(recurse, 1);
    return out;
}

}  // namespace fpart
