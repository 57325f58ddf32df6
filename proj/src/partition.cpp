#include "fpart/partition.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace fpart {

namespace {

// Character sums for all characters at once, by exponent histogram per block.
class SignatureSweep {
   public:
    SignatureSweep(const Partition& p, const Limits& limits)
        : p_(p), elems_(elements(p.group(), limits)), e_(p.group().exponent()) {}

    Signature operator()(const Element& chi) const {
        const GroupSpec& g = p_.group();
        const std::size_t blocks = p_.block_count();
        std::vector<std::int64_t> counts(blocks * e_, 0);
        std::vector<std::uint64_t> coef(g.factors());
        for (std::size_t i = 0; i < g.factors(); ++i)
            coef[i] = static_cast<std::uint64_t>(g.weight(i)) * static_cast<std::uint64_t>(chi[i]);
        for (std::size_t r = 0; r < elems_.size(); ++r) {
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < coef.size(); ++i) acc += coef[i] * static_cast<std::uint64_t>(elems_[r][i]);
            ++counts[p_.block_of_rank(r) * e_ + acc % e_];
        }
        Signature s;
        s.sums.reserve(blocks);
        for (std::size_t m = 0; m < blocks; ++m)
            s.sums.push_back(CycInt::from_exponent_counts(e_, std::span(counts).subspan(m * e_, e_)));
        return s;
    }

    [[nodiscard]] const std::vector<Element>& elements_list() const { return elems_; }

   private:
    const Partition& p_;
    std::vector<Element> elems_;
    std::uint32_t e_;
};

void require_same_carrier(const Partition& p, const Partition& q, const char* what) {
    if (!(p.group() == q.group())) throw invalid_input(std::string(what) + ": partitions live on different carriers");
}

}  // namespace

Partition::Partition(GroupSpec group, std::vector<std::size_t> block_of)
    : group_(std::move(group)), block_of_(std::move(block_of)) {
    // Renumber by first occurrence so the numbering is canonical whatever the input ids were.
    std::vector<std::size_t> remap(block_of_.size(), static_cast<std::size_t>(-1));
    std::size_t next = 0;
    for (auto& b : block_of_) {
        if (remap[b] == static_cast<std::size_t>(-1)) remap[b] = next++;
        b = remap[b];
    }
    blocks_.assign(next, {});
    for (std::size_t r = 0; r < block_of_.size(); ++r) blocks_[block_of_[r]].push_back(r);
}

Partition Partition::from_blocks(const GroupSpec& group, const std::vector<std::vector<Element>>& blocks,
                                 const Limits& limits) {
    if (group.cardinality() > limits.max_group) throw guard_exceeded("partition carrier exceeds element limit");
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> block_of(group.cardinality(), unset);
    for (std::size_t m = 0; m < blocks.size(); ++m) {
        if (blocks[m].empty()) throw invalid_input("partition block " + std::to_string(m) + " is empty");
        for (const auto& g : blocks[m]) {
            group.require_element(g);
            auto& slot = block_of[group.rank(g)];
            if (slot != unset) throw invalid_input("element " + to_string(g) + " appears in two blocks");
            slot = m;
        }
    }
    for (std::size_t r = 0; r < block_of.size(); ++r)
        if (block_of[r] == unset) throw invalid_input("element " + to_string(group.unrank(r)) + " is in no block");
    return Partition(group, std::move(block_of));
}

Partition Partition::singletons(const GroupSpec& group, const Limits& limits) {
    if (group.cardinality() > limits.max_group) throw guard_exceeded("partition carrier exceeds element limit");
    std::vector<std::size_t> block_of(group.cardinality());
    std::iota(block_of.begin(), block_of.end(), std::size_t{0});
    return Partition(group, std::move(block_of));
}

Partition Partition::whole(const GroupSpec& group, const Limits& limits) {
    if (group.cardinality() > limits.max_group) throw guard_exceeded("partition carrier exceeds element limit");
    return Partition(group, std::vector<std::size_t>(group.cardinality(), 0));
}

std::vector<Element> Partition::block_elements(std::size_t m) const {
    std::vector<Element> out;
    out.reserve(blocks_[m].size());
    for (std::size_t r : blocks_[m]) out.push_back(group_.unrank(r));
    return out;
}

std::vector<std::vector<Element>> Partition::blocks() const {
    std::vector<std::vector<Element>> out;
    for (std::size_t m = 0; m < blocks_.size(); ++m) out.push_back(block_elements(m));
    return out;
}

Signature signature(const Partition& partition, const Element& chi) {
    partition.group().require_element(chi);
    return SignatureSweep(partition, Limits{.max_group = partition.group().cardinality()})(chi);
}

std::optional<Matrix<BigInt>> integer_entries(const KrawtchoukMatrix& k) {
    if (k.values.empty()) return Matrix<BigInt>{};
    Matrix<BigInt> out(k.rows(), k.cols(), BigInt(0));
    for (std::size_t i = 0; i < k.rows(); ++i) {
        for (std::size_t j = 0; j < k.cols(); ++j) {
            auto v = as_rational_integer(k(i, j));
            if (!v) return std::nullopt;
            out(i, j) = *v;
        }
    }
    return out;
}

Partition dual_partition(const Partition& partition, const Limits& limits) {
    const SignatureSweep sweep(partition, limits);
    std::vector<Signature> sigs;
    sigs.reserve(sweep.elements_list().size());
    for (const auto& chi : sweep.elements_list()) sigs.push_back(sweep(chi));
    return Partition::from_labels(partition.group(), sigs);
}

KrawtchoukMatrix krawtchouk(const Partition& partition, const Partition& dual_side, const Limits& limits) {
    require_same_carrier(partition, dual_side, "krawtchouk");
    const SignatureSweep sweep(partition, limits);
    const GroupSpec& g = partition.group();
    const bool exhaustive = g.cardinality() <= limits.full_representative_check;
    std::mt19937_64 rng(0x6b726177u);

    KrawtchoukMatrix k;
    std::vector<std::vector<CycInt>> rows;
    for (std::size_t l = 0; l < dual_side.block_count(); ++l) {
        const auto& members = dual_side.block_ranks(l);
        Signature sig = sweep(g.unrank(members.front()));
        auto verify = [&](std::size_t rank) {
            if (sweep(g.unrank(rank)) != sig)
                throw invalid_input("krawtchouk: character sums are not constant on dual-side block " +
                                    std::to_string(l) + "; the dual-side partition must refine the dual partition");
        };
        if (exhaustive) {
            for (std::size_t i = 1; i < members.size(); ++i) verify(members[i]);
        } else if (members.size() > 1) {
            std::uniform_int_distribution<std::size_t> pick(1, members.size() - 1);
            for (int t = 0; t < 3; ++t) verify(members[pick(rng)]);
        }
        rows.push_back(std::move(sig.sums));
        k.row_labels.push_back(dual_side.representative(l));
    }
    for (std::size_t m = 0; m < partition.block_count(); ++m) k.col_labels.push_back(partition.representative(m));
    k.values = from_rows(rows);
    return k;
}

bool is_reflexive(const Partition& partition, const Limits& limits) {
    return partition.block_count() == dual_partition(partition, limits).block_count();
}

Partition bidual(const Partition& partition, const Limits& limits) {
    return dual_partition(dual_partition(partition, limits), limits);
}

bool refines(const Partition& finer, const Partition& coarser) {
    require_same_carrier(finer, coarser, "refines");
    for (std::size_t m = 0; m < finer.block_count(); ++m) {
        const auto& members = finer.block_ranks(m);
        const std::size_t target = coarser.block_of_rank(members.front());
        for (std::size_t r : members)
            if (coarser.block_of_rank(r) != target) return false;
    }
    return true;
}

Partition join(const Partition& p, const Partition& q) {
    require_same_carrier(p, q, "join");
    const std::size_t size = p.group().cardinality();
    std::vector<std::size_t> parent(size);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite_blocks = [&](const Partition& part) {
        for (std::size_t m = 0; m < part.block_count(); ++m) {
            const auto& members = part.block_ranks(m);
            for (std::size_t r : members) {
                const std::size_t a = find(members.front()), b = find(r);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
    };
    unite_blocks(p);
    unite_blocks(q);
    std::vector<std::size_t> labels(size);
    for (std::size_t r = 0; r < size; ++r) labels[r] = find(r);
    return Partition::from_labels(p.group(), labels);
}

Partition meet(const Partition& p, const Partition& q) {
    require_same_carrier(p, q, "meet");
    const std::size_t size = p.group().cardinality();
    std::vector<std::pair<std::size_t, std::size_t>> labels(size);
    for (std::size_t r = 0; r < size; ++r) labels[r] = {p.block_of_rank(r), q.block_of_rank(r)};
    return Partition::from_labels(p.group(), labels);
}

Partition negate(const Partition& partition) {
    const GroupSpec& g = partition.group();
    std::vector<std::size_t> labels(g.cardinality());
    for (std::size_t r = 0; r < labels.size(); ++r) labels[r] = partition.block_of(g.negate(g.unrank(r)));
    return Partition::from_labels(g, labels);
}

Partition dual_under_iso(const Partition& partition, const GroupIso& iota, const Limits& limits) {
    if (!(iota.group() == partition.group())) throw invalid_input("dual_under_iso: iso lives on a different carrier");
    const Partition dual = dual_partition(partition, limits);
    std::vector<std::size_t> labels(partition.group().cardinality());
    for (std::size_t r = 0; r < labels.size(); ++r) labels[r] = dual.block_of_rank(iota.image_rank(r));
    return Partition::from_labels(partition.group(), labels);
}

KKCheck kk_product_check(const Partition& partition, const Limits& limits) {
    const GroupSpec& g = partition.group();
    const Partition dual = dual_partition(partition, limits);
    const Partition bi = dual_partition(dual, limits);
    const auto k = krawtchouk(partition, dual, limits);
    const auto k_prime = krawtchouk(dual, bi, limits);

    KKCheck out;
    out.product = k_prime.values * k.values;
    out.reflexive = bi.block_count() == partition.block_count();
    const std::uint32_t e = g.exponent();
    const CycInt order = CycInt::integer(e, static_cast<long long>(g.cardinality()));
    const CycInt zero = CycInt::integer(e, 0);

    out.entry_ok = Matrix<char>(bi.block_count(), partition.block_count(), 0);
    out.pattern_holds = true;
    std::vector<std::size_t> pairing(bi.block_count(), static_cast<std::size_t>(-1));
    for (std::size_t r = 0; r < bi.block_count(); ++r) {
        for (std::size_t m = 0; m < partition.block_count(); ++m) {
            bool contained = true;
            for (std::size_t x : bi.block_ranks(r)) {
                if (partition.block_of(g.negate(g.unrank(x))) != m) {
                    contained = false;
                    break;
                }
            }
            if (contained) pairing[r] = m;
            const bool ok = out.product(r, m) == (contained ? order : zero);
            out.entry_ok(r, m) = ok ? 1 : 0;
            out.pattern_holds = out.pattern_holds && ok;
        }
    }
    if (out.reflexive) {
        out.pairing = pairing;
        out.scaled_identity = true;
        for (std::size_t r = 0; r < pairing.size(); ++r) {
            if (pairing[r] == static_cast<std::size_t>(-1)) {
                out.scaled_identity = false;
                continue;
            }
            for (std::size_t c = 0; c < pairing.size(); ++c) {
                // Column c of the permuted product is column pairing[c] of K'K.
                if (pairing[c] == static_cast<std::size_t>(-1)) continue;
                if (out.product(r, pairing[c]) != (r == c ? order : zero)) out.scaled_identity = false;
            }
        }
        std::vector<std::size_t> sorted = pairing;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) out.scaled_identity = false;
    }
    return out;
}

std::string to_string(const Element& g) {
    if (g.size() == 1) return std::to_string(g[0]);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << ')';
    return os.str();
}

std::string to_string(const Partition& partition) {
    std::ostringstream os;
    for (std::size_t m = 0; m < partition.block_count(); ++m) {
        if (m) os << '|';
        const auto& members = partition.block_ranks(m);
        for (std::size_t i = 0; i < members.size(); ++i)
            os << (i ? "," : "") << to_string(partition.group().unrank(members[i]));
    }
    return os.str();
}

}  // namespace fpart
