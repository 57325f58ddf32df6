#pragma once

// Partition enumerators of codes and their MacWilliams transforms.
//
// Enumerators are sparse integer count tables rather than symbolic polynomials.
// Transforms expand over CycInt and insist on exact integrality at the end; a
// non-integral result means the Krawtchouk matrix has the wrong orientation or
// does not belong to the partitions the enumerator was taken with.
//
// Orientation:
//   * macwilliams_transform takes K = krawtchouk(Q, P) where P = dual(Q) is the
//     partition on the code side: rows are P blocks, columns are Q blocks, and
//     B = (1/|C|) A K.
//   * product_transform / symmetrized_transform take, per factor, the matrix
//     krawtchouk(dual(P_i), P_i) of a reflexive P_i: X_m -> sum_l K(m, l) X_l.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fpart/induced.hpp"
#include "fpart/partition.hpp"

namespace fpart {

struct LinearEnumerator {
    std::vector<std::int64_t> counts;  ///< A_m = |C n P_m|

    bool operator==(const LinearEnumerator&) const = default;
};

struct ProductEnumerator {
    std::map<std::vector<int>, std::int64_t> counts;  ///< block-index tuple -> codewords

    bool operator==(const ProductEnumerator&) const = default;
};

struct SymmetrizedEnumerator {
    std::map<CompositionVector, std::int64_t> counts;

    bool operator==(const SymmetrizedEnumerator&) const = default;
};

LinearEnumerator linear_enumerator(const Code& code, const Partition& partition);

LinearEnumerator macwilliams_transform(const LinearEnumerator& a, const KrawtchoukMatrix& k, std::int64_t code_size);

ProductEnumerator product_enumerator(const Code& code, std::span<const Partition> parts);

ProductEnumerator product_transform(const ProductEnumerator& e, std::span<const KrawtchoukMatrix> ks,
                                    std::int64_t code_size, const Limits& limits = {});

/// Code on G^n, base partition P of G.
SymmetrizedEnumerator symmetrized_enumerator(const Code& code, const Partition& base, std::size_t n);

SymmetrizedEnumerator symmetrized_transform(const SymmetrizedEnumerator& e, const KrawtchoukMatrix& k,
                                            std::int64_t code_size, const Limits& limits = {});

/// Substitution X_{t,m} -> Y_m: forgets coordinate positions.
SymmetrizedEnumerator forget_positions(const ProductEnumerator& e, std::size_t blocks);

}  // namespace fpart
