#pragma once

// JSON encodings of the library types.
//
// CycInt:     {"order": E, "coeffs": ["1", "-2", ...]}, or a bare number when rational.
// group:      {"orders": [6]}
// element:    [1, 2]; a bare integer is accepted for one-factor groups
// code:       {"generators": [[2]]}
// partition:  {"blocks": [[[0]], [[1], [3]], ...]}
// poset:      {"n": 4, "cover": [[1, 2], [1, 3]]}, 1-based, a < b

#include "json.hpp"

#include "fpart/enumerator.hpp"
#include "fpart/group.hpp"
#include "fpart/partition.hpp"
#include "fpart/poset.hpp"

namespace fpart {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json to_json(const CycInt& v);
/// Bare numbers and decimal strings become integers of the given order.
CycInt cycint_from_json(const Json& j, std::uint32_t order);

Json to_json(const GroupSpec& group);
GroupSpec group_from_json(const Json& j);

Json to_json(const Element& g);
Element element_from_json(const GroupSpec& group, const Json& j);

/// Generators, size and the sorted element list.
Json to_json(const Code& code);
Code code_from_json(const GroupSpec& group, const Json& j, const Limits& limits = {});

Json to_json(const Partition& partition);
Partition partition_from_json(const GroupSpec& group, const Json& j, const Limits& limits = {});

/// Exact values, float approximations as [re, im] pairs, and block labels.
Json to_json(const KrawtchoukMatrix& k);
Json to_json(const Matrix<BigInt>& m);
Matrix<BigInt> bigint_matrix_from_json(const Json& j);

Json to_json(const Poset& poset);
Poset poset_from_json(const Json& j);

Json to_json(const LinearEnumerator& e);
Json to_json(const ProductEnumerator& e);
Json to_json(const SymmetrizedEnumerator& e);

}  // namespace fpart
