#include "fpart/induced.hpp"

#include <algorithm>

namespace fpart {

namespace {

std::vector<GroupSpec> factor_groups(std::span<const Partition> parts) {
    std::vector<GroupSpec> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(p.group());
    return out;
}

}  // namespace

std::vector<Element> split(const Element& g, std::span<const GroupSpec> factors) {
    std::vector<Element> out;
    out.reserve(factors.size());
    std::size_t offset = 0;
    for (const auto& f : factors) {
        if (offset + f.factors() > g.size()) throw invalid_input("split: element shorter than product carrier");
        out.emplace_back(std::vector<int>(g.residues.begin() + static_cast<std::ptrdiff_t>(offset),
                                          g.residues.begin() + static_cast<std::ptrdiff_t>(offset + f.factors())));
        offset += f.factors();
    }
    if (offset != g.size()) throw invalid_input("split: element longer than product carrier");
    return out;
}

std::vector<int> product_block_index(std::span<const Partition> parts, const Element& g) {
    const auto groups = factor_groups(parts);
    const auto pieces = split(g, groups);
    std::vector<int> index(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) index[i] = static_cast<int>(parts[i].block_of(pieces[i]));
    return index;
}

Partition product_partition(std::span<const Partition> parts, const Limits& limits) {
    const auto groups = factor_groups(parts);
    const GroupSpec product = product_group(groups);
    return Partition::from_weight(product, [&](const Element& g) { return product_block_index(parts, g); }, limits);
}

Partition power_partition(const Partition& base, std::size_t n, const Limits& limits) {
    const std::vector<Partition> parts(n, base);
    return product_partition(parts, limits);
}

CompositionVector composition_vector(const Partition& base, std::span<const Element> coordinates) {
    CompositionVector v{std::vector<int>(base.block_count(), 0)};
    for (const auto& g : coordinates) {
        base.group().require_element(g);
        ++v.counts[base.block_of(g)];
    }
    return v;
}

CompositionVector composition_vector_of(const Partition& base, const Element& g) {
    const std::size_t k = base.group().factors();
    if (k == 0 || g.size() % k != 0) throw invalid_input("composition_vector: element is not in a power of the base carrier");
    const std::vector<GroupSpec> groups(g.size() / k, base.group());
    const auto pieces = split(g, groups);
    return composition_vector(base, pieces);
}

Partition symmetrized_partition(const Partition& base, std::size_t n, const Limits& limits) {
    if (n == 0) throw invalid_input("symmetrized_partition: n must be positive");
    const GroupSpec power = power_group(base.group(), n);
    return Partition::from_weight(power, [&](const Element& g) { return composition_vector_of(base, g); }, limits);
}

std::vector<CompositionVector> symmetrized_block_keys(const Partition& base, std::size_t n, const Limits& limits) {
    const Partition sym = symmetrized_partition(base, n, limits);
    std::vector<CompositionVector> keys;
    for (std::size_t m = 0; m < sym.block_count(); ++m) keys.push_back(composition_vector_of(base, sym.representative(m)));
    return keys;
}

std::optional<DualityWitness> compare_partitions(const Partition& lhs, const Partition& rhs) {
    if (!(lhs.group() == rhs.group())) throw invalid_input("compare_partitions: different carriers");
    if (lhs == rhs) return std::nullopt;
    const GroupSpec& g = lhs.group();
    // Brute-force search for a pair grouped by exactly one side.
    const std::size_t size = g.cardinality();
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = a + 1; b < size; ++b) {
            const bool same_l = lhs.block_of_rank(a) == lhs.block_of_rank(b);
            const bool same_r = rhs.block_of_rank(a) == rhs.block_of_rank(b);
            if (same_l != same_r) {
                return DualityWitness{g.unrank(a), g.unrank(b),
                                      same_l ? "joined on the left, separated on the right"
                                             : "separated on the left, joined on the right"};
            }
        }
    }
    return DualityWitness{g.zero(), g.zero(), "partitions differ"};
}

std::optional<DualityWitness> check_product_duality(std::span<const Partition> parts, const Limits& limits) {
    const Partition lhs = dual_partition(product_partition(parts, limits), limits);
    std::vector<Partition> duals;
    for (const auto& p : parts) duals.push_back(dual_partition(p, limits));
    return compare_partitions(lhs, product_partition(duals, limits));
}

std::optional<DualityWitness> check_symmetrized_duality(const Partition& base, std::size_t n, const Limits& limits) {
    const Partition lhs = dual_partition(symmetrized_partition(base, n, limits), limits);
    return compare_partitions(lhs, symmetrized_partition(dual_partition(base, limits), n, limits));
}

}  // namespace fpart
