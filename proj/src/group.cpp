#include "fpart/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "fpart/errors.hpp"

namespace fpart {

namespace {

void require_enumerable(const GroupSpec& group, std::size_t guard, const char* what) {
    if (group.cardinality() > guard)
        throw guard_exceeded(std::string(what) + ": |G| = " + std::to_string(group.cardinality()) +
                             " exceeds limit " + std::to_string(guard));
}

// Membership bitmap by rank.
std::vector<char> closure(const GroupSpec& group, std::vector<char> member, std::span<const std::size_t> gen_ranks) {
    std::vector<std::size_t> queue;
    for (std::size_t r = 0; r < member.size(); ++r)
        if (member[r]) queue.push_back(r);
    while (!queue.empty()) {
        const Element x = group.unrank(queue.back());
        queue.pop_back();
        for (std::size_t gr : gen_ranks) {
            const std::size_t y = group.rank(group.add(x, group.unrank(gr)));
            if (!member[y]) {
                member[y] = 1;
                queue.push_back(y);
            }
        }
    }
    return member;
}

std::vector<Element> members_to_elements(const GroupSpec& group, const std::vector<char>& member) {
    std::vector<Element> out;
    for (std::size_t r = 0; r < member.size(); ++r)
        if (member[r]) out.push_back(group.unrank(r));
    return out;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<int> orders) : orders_(std::move(orders)) {
    std::uint64_t e = 1;
    for (int n : orders_) {
        if (n < 2) throw invalid_input("group moduli must be >= 2, got " + std::to_string(n));
        e = std::lcm(e, static_cast<std::uint64_t>(n));
        if (e > std::numeric_limits<std::uint32_t>::max()) throw invalid_input("group exponent too large");
        if (cardinality_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(n))
            cardinality_ = std::numeric_limits<std::size_t>::max();
        else
            cardinality_ *= static_cast<std::size_t>(n);
    }
    exponent_ = static_cast<std::uint32_t>(e);
    for (int n : orders_) weights_.push_back(static_cast<int>(exponent_ / static_cast<std::uint32_t>(n)));
}

bool GroupSpec::contains(const Element& g) const noexcept {
    if (g.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        if (g[i] < 0 || g[i] >= orders_[i]) return false;
    return true;
}

void GroupSpec::require_element(const Element& g) const {
    if (!contains(g)) throw invalid_input("element does not belong to the group carrier");
}

std::size_t GroupSpec::rank(const Element& g) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) r = r * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(g[i]);
    return r;
}

Element GroupSpec::unrank(std::size_t index) const {
    std::vector<int> res(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
        res[i] = static_cast<int>(index % static_cast<std::size_t>(orders_[i]));
        index /= static_cast<std::size_t>(orders_[i]);
    }
    return Element(std::move(res));
}

Element GroupSpec::add(const Element& a, const Element& b) const {
    std::vector<int> res(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) res[i] = (a[i] + b[i]) % orders_[i];
    return Element(std::move(res));
}

Element GroupSpec::negate(const Element& a) const {
    std::vector<int> res(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) res[i] = (orders_[i] - a[i]) % orders_[i];
    return Element(std::move(res));
}

GroupSpec product_group(std::span<const GroupSpec> factors) {
    std::vector<int> orders;
    for (const auto& f : factors) orders.insert(orders.end(), f.orders().begin(), f.orders().end());
    return GroupSpec(std::move(orders));
}

GroupSpec power_group(const GroupSpec& base, std::size_t n) {
    std::vector<GroupSpec> copies(n, base);
    return product_group(copies);
}

std::vector<Element> elements(const GroupSpec& group, const Limits& limits) {
    require_enumerable(group, limits.max_group, "elements");
    std::vector<Element> out;
    out.reserve(group.cardinality());
    for (std::size_t r = 0; r < group.cardinality(); ++r) out.push_back(group.unrank(r));
    return out;
}

std::uint32_t pairing_exponent(const GroupSpec& group, const Element& chi, const Element& g) {
    group.require_element(chi);
    group.require_element(g);
    const std::uint64_t e = group.exponent();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < group.factors(); ++i) {
        acc += static_cast<std::uint64_t>(group.weight(i)) * static_cast<std::uint64_t>(chi[i] * g[i]);
        acc %= e;
    }
    return static_cast<std::uint32_t>(acc);
}

CycInt pairing(const GroupSpec& group, const Element& chi, const Element& g) {
    return zeta_pow(group.exponent(), pairing_exponent(group, chi, g));
}

Code::Code(GroupSpec group, std::vector<Element> generators, std::vector<Element> sorted_elements)
    : group_(std::move(group)), generators_(std::move(generators)), elements_(std::move(sorted_elements)) {}

bool Code::contains(const Element& g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

Code generate(const GroupSpec& group, std::span<const Element> gens, const Limits& limits) {
    require_enumerable(group, limits.max_group, "generate");
    std::vector<std::size_t> ranks;
    for (const auto& g : gens) {
        group.require_element(g);
        ranks.push_back(group.rank(g));
    }
    std::vector<char> member(group.cardinality(), 0);
    member[0] = 1;
    member = closure(group, std::move(member), ranks);
    return Code(group, std::vector<Element>(gens.begin(), gens.end()), members_to_elements(group, member));
}

Code code_from_elements(const GroupSpec& group, std::vector<Element> subgroup_elements) {
    std::sort(subgroup_elements.begin(), subgroup_elements.end());
    subgroup_elements.erase(std::unique(subgroup_elements.begin(), subgroup_elements.end()), subgroup_elements.end());
    std::vector<char> target(group.cardinality(), 0);
    for (const auto& g : subgroup_elements) {
        group.require_element(g);
        target[group.rank(g)] = 1;
    }
    // Greedy generating set: adjoin any element not yet in the span.
    std::vector<char> span(group.cardinality(), 0);
    span[0] = 1;
    std::vector<Element> gens;
    std::vector<std::size_t> gen_ranks;
    for (const auto& g : subgroup_elements) {
        const std::size_t r = group.rank(g);
        if (span[r]) continue;
        gens.push_back(g);
        gen_ranks.push_back(r);
        span = closure(group, std::move(span), gen_ranks);
    }
    if (span != target) throw invalid_input("element set is not a subgroup");
    return Code(group, std::move(gens), std::move(subgroup_elements));
}

Code dual_code(const GroupSpec& group, const Code& code, const Limits& limits) {
    require_enumerable(group, limits.max_group, "dual_code");
    if (!(code.group() == group)) throw invalid_input("dual_code: code lives on a different carrier");
    std::vector<Element> out;
    for (std::size_t r = 0; r < group.cardinality(); ++r) {
        const Element a = group.unrank(r);
        bool orthogonal = true;
        for (const auto& h : code.generators()) {
            if (pairing_exponent(group, a, h) != 0) {
                orthogonal = false;
                break;
            }
        }
        if (orthogonal) out.push_back(a);
    }
    return code_from_elements(group, std::move(out));
}

std::vector<Code> all_subgroups(const GroupSpec& group, const Limits& limits) {
    require_enumerable(group, limits.max_subgroup_group, "all_subgroups");
    const std::size_t size = group.cardinality();
    std::set<std::vector<char>> seen;
    std::vector<std::vector<char>> queue;
    std::vector<char> trivial(size, 0);
    trivial[0] = 1;
    seen.insert(trivial);
    queue.push_back(trivial);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto current = queue[head];
        for (std::size_t r = 0; r < size; ++r) {
            if (current[r]) continue;
            const std::size_t gen[] = {r};
            auto next = closure(group, current, gen);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    std::vector<Code> out;
    for (const auto& member : seen) out.push_back(code_from_elements(group, members_to_elements(group, member)));
    std::sort(out.begin(), out.end(), [](const Code& a, const Code& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements() < b.elements();
    });
    return out;
}

GroupFunction fourier_transform(const GroupSpec& group, const GroupFunction& f, const Limits& limits) {
    require_enumerable(group, limits.max_group, "fourier_transform");
    const std::size_t size = group.cardinality();
    if (f.size() != size) throw invalid_input("fourier_transform: function is not total on the carrier");
    const std::uint32_t e = group.exponent();
    std::vector<CycInt> values;
    values.reserve(size);
    for (const auto& v : f) values.push_back(v.order() == e ? v : change_order(v, e));
    std::vector<CycInt> zeta;
    for (std::uint32_t k = 0; k < e; ++k) zeta.push_back(zeta_pow(e, k));

    const auto elems = elements(group, limits);
    GroupFunction out;
    out.reserve(size);
    for (const auto& chi : elems) {
        CycInt acc = CycInt::integer(e, 0);
        for (std::size_t r = 0; r < size; ++r) {
            if (values[r].is_zero()) continue;
            acc += zeta[pairing_exponent(group, chi, elems[r])] * values[r];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

bool poisson_check(const GroupSpec& group, const Code& code, const GroupFunction& f, const Limits& limits) {
    const auto transformed = fourier_transform(group, f, limits);
    const Code dual = dual_code(group, code, limits);
    const std::uint32_t e = group.exponent();
    CycInt lhs = CycInt::integer(e, 0);
    for (const auto& chi : dual.elements()) lhs += transformed[group.rank(chi)];
    CycInt rhs = CycInt::integer(e, 0);
    for (const auto& h : code.elements()) {
        const auto& v = f[group.rank(h)];
        rhs += v.order() == e ? v : change_order(v, e);
    }
    rhs *= CycInt::integer(e, static_cast<long long>(dual.size()));
    return lhs == rhs;
}

GroupIso::GroupIso(GroupSpec group, const std::map<Element, Element>& table, const Limits& limits)
    : group_(std::move(group)) {
    const std::size_t size = group_.cardinality();
    if (size > limits.max_group) throw guard_exceeded("GroupIso: carrier too large");
    if (table.size() != size) throw invalid_input("GroupIso: table is not total");
    image_.assign(size, 0);
    std::vector<char> hit(size, 0);
    for (const auto& [from, to] : table) {
        group_.require_element(from);
        group_.require_element(to);
        const std::size_t t = group_.rank(to);
        if (hit[t]) throw invalid_input("GroupIso: table is not injective");
        hit[t] = 1;
        image_[group_.rank(from)] = t;
    }
    auto additive_on = [&](std::size_t a, std::size_t b) {
        const std::size_t sum = group_.rank(group_.add(group_.unrank(a), group_.unrank(b)));
        const std::size_t image_sum = group_.rank(group_.add(group_.unrank(image_[a]), group_.unrank(image_[b])));
        return image_[sum] == image_sum;
    };
    if (size <= limits.full_representative_check) {
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = a; b < size; ++b)
                if (!additive_on(a, b)) throw invalid_input("GroupIso: table is not additive");
    } else {
        // Unit vectors generate the group, so additivity on (unit, anything) suffices.
        for (std::size_t i = 0; i < group_.factors(); ++i) {
            Element unit = group_.zero();
            unit.residues[i] = 1;
            const std::size_t u = group_.rank(unit);
            for (std::size_t b = 0; b < size; ++b)
                if (!additive_on(u, b)) throw invalid_input("GroupIso: table is not additive");
        }
    }
}

GroupIso GroupIso::identity(const GroupSpec& group) {
    std::vector<std::size_t> image(group.cardinality());
    std::iota(image.begin(), image.end(), std::size_t{0});
    return GroupIso(group, std::move(image));
}

Element GroupIso::operator()(const Element& g) const {
    group_.require_element(g);
    return group_.unrank(image_[group_.rank(g)]);
}

bool GroupIso::is_symmetric() const {
    const std::size_t size = group_.cardinality();
    for (std::size_t a = 0; a < size; ++a) {
        const Element ia = group_.unrank(image_[a]);
        const Element ea = group_.unrank(a);
        for (std::size_t b = a + 1; b < size; ++b) {
            if (pairing_exponent(group_, ia, group_.unrank(b)) !=
                pairing_exponent(group_, group_.unrank(image_[b]), ea))
                return false;
        }
    }
    return true;
}

}  // namespace fpart
