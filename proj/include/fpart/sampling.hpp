#pragma once

// Random and exhaustive generators used by the property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "fpart/group.hpp"
#include "fpart/partition.hpp"

namespace fpart {

using Rng = std::mt19937_64;

/// Uniform labels from a random number of blocks.
Partition random_partition(const GroupSpec& group, Rng& rng);

/// {0} is a block; the rest is partitioned randomly.
Partition random_partition_with_zero_block(const GroupSpec& group, Rng& rng);

/// A random automorphism x -> A x with A an integer matrix compatible with the moduli.
GroupIso random_automorphism(const GroupSpec& group, Rng& rng);

/// Orbits of the group generated by a few random automorphisms; such partitions are reflexive.
Partition random_orbit_partition(const GroupSpec& group, Rng& rng);

/// Random CycInt values of order exponent(G) with coefficients in [-bound, bound].
GroupFunction random_group_function(const GroupSpec& group, Rng& rng, int bound = 4);

/// Every set partition of the carrier (restricted growth strings). Intended for |G| <= 8.
std::vector<Partition> all_partitions(const GroupSpec& group);

/// Every ordered list of moduli >= 2 whose product is at most max_order, trivial group excluded.
std::vector<GroupSpec> groups_up_to(std::size_t max_order);

}  // namespace fpart
