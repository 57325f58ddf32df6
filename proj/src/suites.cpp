#include "fpart/suites.hpp"

#include <functional>
#include <map>

#include "fpart/enumerator.hpp"
#include "fpart/errors.hpp"
#include "fpart/induced.hpp"
#include "fpart/partition.hpp"
#include "fpart/poset.hpp"
#include "fpart/sampling.hpp"

namespace fpart {

namespace {

constexpr std::size_t kMaxMessages = 5;

class Recorder {
   public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& message) {
        ++result_.checks;
        if (ok) return;
        ++result_.failures;
        if (result_.messages.size() < kMaxMessages) result_.messages.push_back(message());
    }

    SuiteResult take() { return std::move(result_); }

   private:
    SuiteResult result_;
};

std::string describe(const Partition& p) {
    std::string orders;
    for (int n : p.group().orders()) orders += (orders.empty() ? "Z" : "xZ") + std::to_string(n);
    return orders + " " + to_string(p);
}

std::vector<GroupSpec> small_groups(std::size_t max_order) {
    std::vector<GroupSpec> out;
    for (auto& g : groups_up_to(max_order))
        if (g.factors() <= 3) out.push_back(std::move(g));
    return out;
}

SuiteResult cyclotomic_suite(Rng& rng) {
    Recorder rec("cyclotomic");
    std::uniform_int_distribution<int> small(-3, 3);
    for (std::uint32_t e = 1; e <= 30; ++e) {
        rec.expect(cyclotomic_polynomial(e).degree() == static_cast<int>(euler_phi(e)),
                   [&] { return "deg Phi_" + std::to_string(e) + " != phi"; });
        CycInt sum = CycInt::integer(e, 0);
        for (std::uint32_t k = 0; k < e; ++k) sum += zeta_pow(e, k);
        rec.expect(e == 1 ? sum == CycInt::integer(e, 1) : sum.is_zero(),
                   [&] { return "sum of all " + std::to_string(e) + "-th roots is " + to_string(sum); });
        auto random = [&] {
            std::vector<BigInt> c(e);
            for (auto& x : c) x = small(rng);
            return CycInt(e, std::move(c));
        };
        for (int trial = 0; trial < 5; ++trial) {
            const CycInt a = random(), b = random(), c = random();
            rec.expect((a * b) * c == a * (b * c), [&] { return "associativity fails at order " + std::to_string(e); });
            rec.expect(a * (b + c) == a * b + a * c, [&] { return "distributivity fails at order " + std::to_string(e); });
            rec.expect(a - a == CycInt::integer(e, 0), [&] { return "a - a != 0 at order " + std::to_string(e); });
            rec.expect(conjugate(a * b) == conjugate(a) * conjugate(b),
                       [&] { return "conjugation not multiplicative at order " + std::to_string(e); });
            rec.expect(change_order(a * b, 2 * e) == change_order(a, 2 * e) * change_order(b, 2 * e),
                       [&] { return "change_order not multiplicative at order " + std::to_string(e); });
        }
    }
    return rec.take();
}

SuiteResult group_suite(Rng& rng, const Limits& limits) {
    Recorder rec("group");
    for (const auto& g : small_groups(12)) {
        const auto elems = elements(g, limits);
        for (std::size_t r = 0; r < elems.size(); ++r)
            rec.expect(g.rank(elems[r]) == r, [&] { return "rank/unrank mismatch"; });
        for (const auto& c : all_subgroups(g, limits)) {
            const Code d = dual_code(g, c, limits);
            rec.expect(c.size() * d.size() == g.cardinality(), [&] { return "|C||C-perp| != |G|"; });
            rec.expect(dual_code(g, d, limits) == c, [&] { return "double dual code differs"; });
            const GroupFunction f = random_group_function(g, rng, 3);
            rec.expect(poisson_check(g, c, f, limits), [&] { return "Poisson summation fails"; });
        }
        const GroupFunction f = random_group_function(g, rng, 3);
        const GroupFunction ff = fourier_transform(g, fourier_transform(g, f, limits), limits);
        for (std::size_t r = 0; r < elems.size(); ++r) {
            const std::size_t minus = g.rank(g.negate(elems[r]));
            rec.expect(ff[r] == CycInt::integer(g.exponent(), static_cast<long>(g.cardinality())) * f[minus],
                       [&] { return "Fourier inversion fails"; });
        }
    }
    return rec.take();
}

SuiteResult partition_suite(Rng& rng, const Limits& limits) {
    Recorder rec("partition");
    const GroupSpec z6({6});
    const Partition p = Partition::from_blocks(z6, {{{0}}, {{1}, {3}, {5}}, {{2}, {4}}});
    const Partition expected = Partition::from_blocks(z6, {{{0}}, {{1}, {2}, {4}, {5}}, {{3}}});
    rec.expect(dual_partition(p, limits) == expected, [&] { return "Z6 worked example: dual differs"; });
    const Partition q = Partition::from_blocks(z6, {{{0}}, {{1}, {2}}, {{3}, {4}, {5}}});
    rec.expect(bidual(q, limits) == Partition::singletons(z6), [&] { return "Z6 non-reflexive example differs"; });

    for (const auto& g : small_groups(16)) {
        for (int trial = 0; trial < 4; ++trial) {
            const Partition part = random_partition(g, rng);
            const Partition d = dual_partition(part, limits);
            const Partition dd = dual_partition(d, limits);
            rec.expect(part.block_count() <= d.block_count(), [&] { return "|P| > |dual P| for " + describe(part); });
            rec.expect(refines(dd, part), [&] { return "bidual does not refine " + describe(part); });
            rec.expect((part.block_count() == d.block_count()) == (dd == part),
                       [&] { return "reflexivity criterion fails for " + describe(part); });
            const KKCheck kk = kk_product_check(part, limits);
            rec.expect(kk.pattern_holds, [&] { return "K'K pattern fails for " + describe(part); });
            rec.expect(!kk.reflexive || kk.scaled_identity, [&] { return "K'K != |G| I for " + describe(part); });
        }
        const Partition a = random_orbit_partition(g, rng);
        const Partition b = random_orbit_partition(g, rng);
        rec.expect(is_reflexive(a, limits), [&] { return "orbit partition not reflexive: " + describe(a); });
        const Partition j = join(a, b);
        rec.expect(is_reflexive(j, limits), [&] { return "join not reflexive: " + describe(j); });
        rec.expect(dual_partition(j, limits) == join(dual_partition(a, limits), dual_partition(b, limits)),
                   [&] { return "join duality fails for " + describe(a) + " and " + describe(b); });
    }
    return rec.take();
}

SuiteResult induced_suite(Rng& rng, const Limits& limits) {
    Recorder rec("induced");
    const std::vector<GroupSpec> bases{GroupSpec({2}), GroupSpec({3}), GroupSpec({4}), GroupSpec({2, 2})};
    for (const auto& base : bases) {
        for (int trial = 0; trial < 3; ++trial) {
            const Partition p = random_partition_with_zero_block(base, rng);
            for (std::size_t n = 1; n <= 2; ++n) {
                const std::vector<Partition> parts(n, p);
                const auto prod = check_product_duality(parts, limits);
                rec.expect(!prod, [&] { return "product duality fails for " + describe(p) + ": " + prod->detail; });
                const auto sym = check_symmetrized_duality(p, n, limits);
                rec.expect(!sym, [&] { return "symmetrized duality fails for " + describe(p) + ": " + sym->detail; });
            }
        }
    }
    return rec.take();
}

SuiteResult enumerator_suite(Rng& rng, const Limits& limits) {
    Recorder rec("enumerator");
    for (const auto& g : {GroupSpec({6}), GroupSpec({2, 4}), GroupSpec({3, 3})}) {
        for (const auto& c : all_subgroups(g, limits)) {
            const Code d = dual_code(g, c, limits);
            for (int trial = 0; trial < 3; ++trial) {
                const Partition q = random_partition(g, rng);
                const Partition p = dual_partition(q, limits);
                const auto a = linear_enumerator(c, p);
                const auto expected = linear_enumerator(d, q);
                bool ok = false;
                try {
                    ok = macwilliams_transform(a, krawtchouk(q, p, limits), static_cast<std::int64_t>(c.size())) == expected;
                } catch (const verification_failure&) {
                }
                rec.expect(ok, [&] { return "MacWilliams identity fails for " + describe(q); });
            }
        }
    }
    const GroupSpec z2({2});
    const Partition base = Partition::from_blocks(z2, {{{0}}, {{1}}});
    const GroupSpec g3 = power_group(z2, 3);
    const std::vector<Partition> parts(3, base);
    const KrawtchoukMatrix k = krawtchouk(dual_partition(base, limits), base, limits);
    const std::vector<KrawtchoukMatrix> ks(3, k);
    for (const auto& c : all_subgroups(g3, limits)) {
        const Code d = dual_code(g3, c, limits);
        const auto size = static_cast<std::int64_t>(c.size());
        rec.expect(product_transform(product_enumerator(c, parts), ks, size, limits) == product_enumerator(d, parts),
                   [&] { return "product MacWilliams identity fails on Z2^3"; });
        rec.expect(symmetrized_transform(symmetrized_enumerator(c, base, 3), k, size, limits) ==
                       symmetrized_enumerator(d, base, 3),
                   [&] { return "symmetrized MacWilliams identity fails on Z2^3"; });
    }
    return rec.take();
}

SuiteResult poset_suite(const Limits& limits) {
    Recorder rec("poset");
    for (int n = 1; n <= 3; ++n) {
        const GroupSpec g = power_group(GroupSpec({2}), static_cast<std::size_t>(n));
        for (const auto& poset : labeled_posets(n)) {
            const auto v = poset_duality_check(poset, g, limits);
            rec.expect(v.equal == v.shape.has_value(), [&] { return "hierarchy criterion fails for n=" + std::to_string(n); });
            if (v.shape) {
                const std::vector<int> qs(v.shape->levels.size(), 2);
                rec.expect(hierarchical_krawtchouk(*v.shape, qs, n) == poset_krawtchouk_brute(poset, g, limits),
                           [&] { return "closed-form Krawtchouk matrix differs for n=" + std::to_string(n); });
            }
        }
        for (int q = 2; q <= 3; ++q) {
            const Poset chain = Poset::chain(n);
            const GroupSpec gq = power_group(GroupSpec({q}), static_cast<std::size_t>(n));
            rec.expect(rt_krawtchouk(n, q) == poset_krawtchouk_brute(chain, gq, limits),
                       [&] { return "chain Krawtchouk matrix differs"; });
        }
    }
    return rec.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"cyclotomic", "group", "partition", "induced", "enumerator", "poset"};
    return names;
}

std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed, const Limits& limits) {
    std::vector<std::string> selected;
    if (name == "all") {
        selected = suite_names();
    } else {
        bool known = false;
        for (const auto& n : suite_names()) known = known || n == name;
        if (!known) throw invalid_input("unknown suite \"" + name + "\"");
        selected.push_back(name);
    }
    std::vector<SuiteResult> out;
    for (const auto& s : selected) {
        Rng rng(seed);
        if (s == "cyclotomic") out.push_back(cyclotomic_suite(rng));
        else if (s == "group") out.push_back(group_suite(rng, limits));
        else if (s == "partition") out.push_back(partition_suite(rng, limits));
        else if (s == "induced") out.push_back(induced_suite(rng, limits));
        else if (s == "enumerator") out.push_back(enumerator_suite(rng, limits));
        else out.push_back(poset_suite(limits));
    }
    return out;
}

}  // namespace fpart
