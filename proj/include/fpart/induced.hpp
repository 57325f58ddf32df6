#pragma once

// Partitions induced on cartesian products: the product partition (per-coordinate
// block membership) and the symmetrized partition (composition vectors).

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpart/partition.hpp"

namespace fpart {

/// counts[m] = number of coordinates falling in block m of the base partition.
struct CompositionVector {
    std::vector<int> counts;

    auto operator<=>(const CompositionVector&) const = default;
    bool operator==(const CompositionVector&) const = default;
};

/// Splits an element of G_1 x ... x G_n into its factor components.
std::vector<Element> split(const Element& g, std::span<const GroupSpec> factors);

/// Blocks are all products P_{1,m_1} x ... x P_{n,m_n}. In canonical order the
/// block with index tuple (m_1, ..., m_n) sits at its row-major position.
Partition product_partition(std::span<const Partition> parts, const Limits& limits = {});
Partition power_partition(const Partition& base, std::size_t n, const Limits& limits = {});

/// Block-index tuple (m_1, ..., m_n) of an element of the product carrier.
std::vector<int> product_block_index(std::span<const Partition> parts, const Element& g);

CompositionVector composition_vector(const Partition& base, std::span<const Element> coordinates);
/// Same, for an element of G^n given as one concatenated tuple.
CompositionVector composition_vector_of(const Partition& base, const Element& g);

/// Fibers of composition_vector on G^n.
Partition symmetrized_partition(const Partition& base, std::size_t n, const Limits& limits = {});

/// Composition vector carried by each block of symmetrized_partition(base, n), by block index.
std::vector<CompositionVector> symmetrized_block_keys(const Partition& base, std::size_t n, const Limits& limits = {});

/// Two characters that one partition separates and the other does not.
struct DualityWitness {
    Element first;
    Element second;
    std::string detail;
};

/// dual(P_1 x ... x P_n) == dual(P_1) x ... x dual(P_n); nullopt when it holds.
std::optional<DualityWitness> check_product_duality(std::span<const Partition> parts, const Limits& limits = {});

/// dual(sym(P, n)) == sym(dual(P), n); nullopt when it holds.
std::optional<DualityWitness> check_symmetrized_duality(const Partition& base, std::size_t n, const Limits& limits = {});

/// Witness for two partitions of the same carrier differing; nullopt if equal.
std::optional<DualityWitness> compare_partitions(const Partition& lhs, const Partition& rhs);

}  // namespace fpart
