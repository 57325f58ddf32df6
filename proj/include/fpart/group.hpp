#pragma once

// Finite abelian groups as explicit products Z_{n_1} x ... x Z_{n_k}.
//
// The character group is realized on the same tuple carrier through the fixed
// pairing <chi, g> = zeta_E^(sum_i (E/n_i) chi_i g_i), E = lcm(n_i). This is one
// choice of identification G ~ G^; other identifications are expressed with a
// GroupIso (see dual_under_iso in partition.hpp).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "fpart/cyclotomic.hpp"

namespace fpart {

/// Size limits for exhaustive work. All are configurable per call.
struct Limits {
    std::size_t max_group = 4096;       ///< element enumeration
    std::size_t max_subgroup_group = 64;///< all_subgroups
    std::size_t max_expansion = 24;     ///< sum of per-factor block counts in enumerator transforms
    std::size_t full_representative_check = 256;
};

struct Element {
    std::vector<int> residues;

    Element() = default;
    explicit Element(std::vector<int> r) : residues(std::move(r)) {}
    Element(std::initializer_list<int> r) : residues(r) {}

    [[nodiscard]] std::size_t size() const noexcept { return residues.size(); }
    int operator[](std::size_t i) const { return residues[i]; }

    auto operator<=>(const Element&) const = default;
    bool operator==(const Element&) const = default;
};

class GroupSpec {
   public:
    GroupSpec() = default;
    /// Throws invalid_input unless every modulus is >= 2. An empty list is the trivial group.
    explicit GroupSpec(std::vector<int> orders);

    [[nodiscard]] const std::vector<int>& orders() const noexcept { return orders_; }
    [[nodiscard]] std::size_t factors() const noexcept { return orders_.size(); }
    [[nodiscard]] std::uint32_t exponent() const noexcept { return exponent_; }
    /// |G|, saturated at SIZE_MAX on overflow.
    [[nodiscard]] std::size_t cardinality() const noexcept { return cardinality_; }

    /// Lexicographic rank of an element; inverse of unrank.
    [[nodiscard]] std::size_t rank(const Element& g) const;
    [[nodiscard]] Element unrank(std::size_t index) const;

    [[nodiscard]] Element zero() const { return Element(std::vector<int>(orders_.size(), 0)); }
    [[nodiscard]] Element add(const Element& a, const Element& b) const;
    [[nodiscard]] Element negate(const Element& a) const;
    [[nodiscard]] bool contains(const Element& g) const noexcept;
    void require_element(const Element& g) const;

    /// Multiplier E/n_i that realizes zeta_{n_i} as a power of zeta_E.
    [[nodiscard]] int weight(std::size_t i) const { return weights_[i]; }

    bool operator==(const GroupSpec& rhs) const { return orders_ == rhs.orders_; }

   private:
    std::vector<int> orders_;
    std::vector<int> weights_;
    std::uint32_t exponent_ = 1;
    std::size_t cardinality_ = 1;
};

/// Direct product carrier: moduli concatenated.
GroupSpec product_group(std::span<const GroupSpec> factors);
GroupSpec power_group(const GroupSpec& base, std::size_t n);

/// All elements in lexicographic order; rank(elements(G)[i]) == i.
std::vector<Element> elements(const GroupSpec& group, const Limits& limits = {});

/// Exponent e with <chi, g> = zeta_E^e.
std::uint32_t pairing_exponent(const GroupSpec& group, const Element& chi, const Element& g);
CycInt pairing(const GroupSpec& group, const Element& chi, const Element& g);

/// A subgroup (additive code) with its full, sorted element list.
class Code {
   public:
    Code(GroupSpec group, std::vector<Element> generators, std::vector<Element> sorted_elements);

    [[nodiscard]] const GroupSpec& group() const noexcept { return group_; }
    [[nodiscard]] const std::vector<Element>& generators() const noexcept { return generators_; }
    [[nodiscard]] const std::vector<Element>& elements() const noexcept { return elements_; }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] bool contains(const Element& g) const;

    /// Equality is equality of the element sets.
    bool operator==(const Code& rhs) const { return group_ == rhs.group_ && elements_ == rhs.elements_; }

   private:
    GroupSpec group_;
    std::vector<Element> generators_;
    std::vector<Element> elements_;
};

/// Smallest subgroup containing gens.
Code generate(const GroupSpec& group, std::span<const Element> gens, const Limits& limits = {});

/// Builds a Code from a subgroup's element set, choosing a small generating set.
/// Throws invalid_input if the set is not a subgroup.
Code code_from_elements(const GroupSpec& group, std::vector<Element> subgroup_elements);

/// {a : <a, h> = 1 for all h in C}, on the same carrier.
Code dual_code(const GroupSpec& group, const Code& code, const Limits& limits = {});

/// Every subgroup exactly once, sorted by (size, elements).
std::vector<Code> all_subgroups(const GroupSpec& group, const Limits& limits = {});

/// A function on the carrier, indexed by element rank.
using GroupFunction = std::vector<CycInt>;

/// f+(chi) = sum_g <chi, g> f(g). Values of f must have order dividing exponent(G).
GroupFunction fourier_transform(const GroupSpec& group, const GroupFunction& f, const Limits& limits = {});

/// sum_{chi in C-perp} f+(chi) == |C-perp| * sum_{h in C} f(h), checked exactly.
bool poisson_check(const GroupSpec& group, const Code& code, const GroupFunction& f, const Limits& limits = {});

/// An additive bijection of the carrier, used as an identification G -> G^.
class GroupIso {
   public:
    /// Throws invalid_input unless the table is a bijective homomorphism.
    /// Additivity is checked exhaustively when |G| <= limits.full_representative_check,
    /// otherwise on generator pairs.
    GroupIso(GroupSpec group, const std::map<Element, Element>& table, const Limits& limits = {});
    static GroupIso identity(const GroupSpec& group);

    [[nodiscard]] const GroupSpec& group() const noexcept { return group_; }
    [[nodiscard]] Element operator()(const Element& g) const;
    [[nodiscard]] std::size_t image_rank(std::size_t rank) const { return image_[rank]; }
    /// <iota(a), b> == <iota(b), a> for all a, b.
    [[nodiscard]] bool is_symmetric() const;

   private:
    GroupIso(GroupSpec group, std::vector<std::size_t> image) : group_(std::move(group)), image_(std::move(image)) {}
    GroupSpec group_;
    std::vector<std::size_t> image_;
};

}  // namespace fpart
