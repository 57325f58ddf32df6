#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpart/cyclotomic.hpp"
#include "fpart/errors.hpp"
#include "fpart/group.hpp"
#include "fpart/matrix.hpp"

namespace fpart {

/// A partition of the group carrier.
///
/// Blocks are numbered canonically: block m is the block whose least element
/// (in lexicographic order) is the m-th smallest among all least elements.
/// Two partitions of the same carrier are equal iff they have the same blocks.
class Partition {
   public:
    /// Throws invalid_input on overlapping blocks, a gap, or an empty block.
    static Partition from_blocks(const GroupSpec& group, const std::vector<std::vector<Element>>& blocks,
                                 const Limits& limits = {});

    /// Fibers of a labeling given by element rank; labels are arbitrary and only compared for equality.
    template <class Label>
    static Partition from_labels(const GroupSpec& group, const std::vector<Label>& labels);

    /// Fibers of a weight function.
    template <class Weight>
    static Partition from_weight(const GroupSpec& group, Weight&& weight, const Limits& limits = {});

    /// Each element in its own block.
    static Partition singletons(const GroupSpec& group, const Limits& limits = {});
    /// The whole carrier as one block.
    static Partition whole(const GroupSpec& group, const Limits& limits = {});

    [[nodiscard]] const GroupSpec& group() const noexcept { return group_; }
    [[nodiscard]] std::size_t block_count() const noexcept { return blocks_.size(); }
    [[nodiscard]] std::size_t block_of_rank(std::size_t rank) const { return block_of_[rank]; }
    [[nodiscard]] std::size_t block_of(const Element& g) const { return block_of_[group_.rank(g)]; }
    [[nodiscard]] const std::vector<std::size_t>& block_ranks(std::size_t m) const { return blocks_[m]; }
    [[nodiscard]] std::vector<Element> block_elements(std::size_t m) const;
    [[nodiscard]] std::vector<std::vector<Element>> blocks() const;
    [[nodiscard]] Element representative(std::size_t m) const { return group_.unrank(blocks_[m].front()); }
    [[nodiscard]] const std::vector<std::size_t>& block_index() const noexcept { return block_of_; }

    bool operator==(const Partition& rhs) const { return group_ == rhs.group_ && block_of_ == rhs.block_of_; }

   private:
    Partition(GroupSpec group, std::vector<std::size_t> block_of);

    GroupSpec group_;
    std::vector<std::size_t> block_of_;
    std::vector<std::vector<std::size_t>> blocks_;
};

/// Per-block character sums sum_{g in P_m} <chi, g>, one per block of the primal partition.
struct Signature {
    std::vector<CycInt> sums;

    bool operator==(const Signature&) const = default;
    auto operator<=>(const Signature&) const = default;
};

Signature signature(const Partition& partition, const Element& chi);

/// Rows are indexed by the blocks of the dual-side partition Q, columns by the blocks of P:
/// entry (l, m) = sum_{g in P_m} <chi, g> for any chi in Q_l.
struct KrawtchoukMatrix {
    Matrix<CycInt> values;
    std::vector<Element> row_labels;  ///< least element of each Q block
    std::vector<Element> col_labels;  ///< least element of each P block

    [[nodiscard]] std::size_t rows() const noexcept { return values.rows(); }
    [[nodiscard]] std::size_t cols() const noexcept { return values.cols(); }
    const CycInt& operator()(std::size_t l, std::size_t m) const { return values(l, m); }
};

/// The entries as rational integers, if they all are.
std::optional<Matrix<BigInt>> integer_entries(const KrawtchoukMatrix& k);

/// Groups characters by exact signature equality.
Partition dual_partition(const Partition& partition, const Limits& limits = {});

/// Q must refine dual(P), so that every Q block has a constant signature;
/// throws invalid_input naming the first offending block otherwise.
KrawtchoukMatrix krawtchouk(const Partition& partition, const Partition& dual_side, const Limits& limits = {});

/// |P| == |dual(P)|.
bool is_reflexive(const Partition& partition, const Limits& limits = {});

Partition bidual(const Partition& partition, const Limits& limits = {});

/// P is finer than (or equal to) Q: every block of P lies in a block of Q.
bool refines(const Partition& finer, const Partition& coarser);
Partition join(const Partition& p, const Partition& q);
Partition meet(const Partition& p, const Partition& q);
/// Blocks replaced by their negatives.
Partition negate(const Partition& partition);

/// Dual partition pulled back to the primal carrier through the identification iota.
Partition dual_under_iso(const Partition& partition, const GroupIso& iota, const Limits& limits = {});

/// Check of the K'K structure for K = krawtchouk(P, dual P), K' = krawtchouk(dual P, bidual P).
struct KKCheck {
    Matrix<CycInt> product;       ///< K'K, rows by bidual blocks, columns by P blocks
    Matrix<char> entry_ok;        ///< entry matches |G| when -P''_r lies in P_m, 0 otherwise
    bool pattern_holds = false;
    bool reflexive = false;
    /// For reflexive P: pairing[r] = m with -P''_r contained in P_m.
    std::vector<std::size_t> pairing;
    /// For reflexive P: K'K with columns permuted by the pairing equals |G| I.
    bool scaled_identity = false;
};

KKCheck kk_product_check(const Partition& partition, const Limits& limits = {});

/// Compact text form such as "0|1,3,5|2,4" or "(0,0)|(0,1),(1,0)".
std::string to_string(const Partition& partition);
std::string to_string(const Element& g);

// ---------------------------------------------------------------------------

template <class Label>
Partition Partition::from_labels(const GroupSpec& group, const std::vector<Label>& labels) {
    if (labels.size() != group.cardinality()) throw invalid_input("partition labels must cover the carrier");
    std::map<Label, std::size_t> ids;
    std::vector<std::size_t> block_of(labels.size());
    for (std::size_t r = 0; r < labels.size(); ++r) {
        auto [it, inserted] = ids.try_emplace(labels[r], ids.size());
        block_of[r] = it->second;
    }
    return Partition(group, std::move(block_of));
}

template <class Weight>
Partition Partition::from_weight(const GroupSpec& group, Weight&& weight, const Limits& limits) {
    const auto elems = elements(group, limits);
    using Label = std::decay_t<decltype(weight(elems.front()))>;
    std::vector<Label> labels;
    labels.reserve(elems.size());
    for (const auto& g : elems) labels.push_back(weight(g));
    return from_labels(group, labels);
}

}  // namespace fpart
