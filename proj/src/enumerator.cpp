#include "fpart/enumerator.hpp"

#include <numeric>
#include <string>

namespace fpart {

namespace {

std::int64_t extract_count(const CycInt& value, std::int64_t code_size, const char* what) {
    const auto n = as_rational_integer(value);
    if (!n) throw verification_failure(std::string(what) + ": coefficient " + to_string(value) + " is not a rational integer");
    if (*n % code_size != 0)
        throw verification_failure(std::string(what) + ": coefficient " + n->str() + " is not divisible by |C| = " +
                                   std::to_string(code_size));
    const BigInt q = *n / code_size;
    if (q < 0) throw verification_failure(std::string(what) + ": negative count " + q.str());
    return q.convert_to<std::int64_t>();
}

void require_code_size(std::int64_t code_size) {
    if (code_size <= 0) throw invalid_input("code size must be positive");
}

}  // namespace

LinearEnumerator linear_enumerator(const Code& code, const Partition& partition) {
    if (!(code.group() == partition.group())) throw invalid_input("linear_enumerator: code and partition carriers differ");
    LinearEnumerator a{std::vector<std::int64_t>(partition.block_count(), 0)};
    for (const auto& g : code.elements()) ++a.counts[partition.block_of(g)];
    return a;
}

LinearEnumerator macwilliams_transform(const LinearEnumerator& a, const KrawtchoukMatrix& k, std::int64_t code_size) {
    require_code_size(code_size);
    if (a.counts.size() != k.rows())
        throw invalid_input("macwilliams_transform: enumerator has " + std::to_string(a.counts.size()) +
                            " entries but K has " + std::to_string(k.rows()) + " rows");
    if (k.rows() == 0) return {};
    const std::uint32_t e = k(0, 0).order();
    LinearEnumerator b{std::vector<std::int64_t>(k.cols(), 0)};
    for (std::size_t l = 0; l < k.cols(); ++l) {
        CycInt acc = CycInt::integer(e, 0);
        for (std::size_t m = 0; m < k.rows(); ++m)
            if (a.counts[m] != 0) acc += CycInt::integer(e, a.counts[m]) * k(m, l);
        b.counts[l] = extract_count(acc, code_size, "macwilliams_transform");
    }
    return b;
}

ProductEnumerator product_enumerator(const Code& code, std::span<const Partition> parts) {
    std::vector<GroupSpec> groups;
    for (const auto& p : parts) groups.push_back(p.group());
    if (!(code.group() == product_group(groups))) throw invalid_input("product_enumerator: code is not on the product carrier");
    ProductEnumerator e;
    for (const auto& g : code.elements()) ++e.counts[product_block_index(parts, g)];
    return e;
}

ProductEnumerator product_transform(const ProductEnumerator& e, std::span<const KrawtchoukMatrix> ks,
                                    std::int64_t code_size, const Limits& limits) {
    require_code_size(code_size);
    std::size_t expansion = 0;
    for (const auto& k : ks) {
        if (k.rows() == 0 || k.cols() == 0) throw invalid_input("product_transform: empty Krawtchouk matrix");
        expansion += k.cols();
    }
    if (expansion > limits.max_expansion)
        throw guard_exceeded("product_transform: expansion size " + std::to_string(expansion) + " exceeds limit " +
                             std::to_string(limits.max_expansion));
    if (ks.empty()) throw invalid_input("product_transform: no factors");
    // Factors may have different exponents; work in the common cyclotomic ring.
    std::uint32_t e_order = 1;
    for (const auto& k : ks) e_order = std::lcm(e_order, k(0, 0).order());
    std::vector<Matrix<CycInt>> lifted;
    for (const auto& k : ks)
        lifted.push_back(map(k.values, [&](const CycInt& v) { return v.order() == e_order ? v : change_order(v, e_order); }));

    std::map<std::vector<int>, CycInt> acc;
    const std::size_t n = ks.size();
    for (const auto& [key, count] : e.counts) {
        if (key.size() != n) throw invalid_input("product_transform: key length does not match factor count");
        for (std::size_t i = 0; i < n; ++i)
            if (key[i] < 0 || static_cast<std::size_t>(key[i]) >= ks[i].rows())
                throw invalid_input("product_transform: block index out of range");
        // Expand prod_i (sum_l K_i(m_i, l) X_{i,l}) by walking all column tuples.
        std::vector<int> cols(n, 0);
        while (true) {
            CycInt term = CycInt::integer(e_order, count);
            bool zero = false;
            for (std::size_t i = 0; i < n && !zero; ++i) {
                const CycInt& entry = lifted[i](static_cast<std::size_t>(key[i]), static_cast<std::size_t>(cols[i]));
                if (entry.is_zero()) zero = true;
                else term *= entry;
            }
            if (!zero) {
                auto it = acc.find(cols);
                if (it == acc.end()) acc.emplace(cols, std::move(term));
                else it->second += term;
            }
            std::size_t i = n;
            while (i-- > 0) {
                if (static_cast<std::size_t>(++cols[i]) < ks[i].cols()) break;
                cols[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
    }
    ProductEnumerator out;
    for (const auto& [key, value] : acc) {
        const std::int64_t c = extract_count(value, code_size, "product_transform");
        if (c != 0) out.counts.emplace(key, c);
    }
    return out;
}

SymmetrizedEnumerator symmetrized_enumerator(const Code& code, const Partition& base, std::size_t n) {
    if (!(code.group() == power_group(base.group(), n)))
        throw invalid_input("symmetrized_enumerator: code is not on the n-th power of the base carrier");
    SymmetrizedEnumerator e;
    for (const auto& g : code.elements()) ++e.counts[composition_vector_of(base, g)];
    return e;
}

SymmetrizedEnumerator symmetrized_transform(const SymmetrizedEnumerator& e, const KrawtchoukMatrix& k,
                                            std::int64_t code_size, const Limits& limits) {
    require_code_size(code_size);
    if (k.rows() == 0 || k.cols() == 0) throw invalid_input("symmetrized_transform: empty Krawtchouk matrix");
    const std::uint32_t e_order = k(0, 0).order();
    using Poly = std::map<std::vector<int>, CycInt>;

    std::map<std::vector<int>, CycInt> acc;
    for (const auto& [key, count] : e.counts) {
        if (key.counts.size() != k.rows()) throw invalid_input("symmetrized_transform: key length does not match K");
        std::size_t degree = 0;
        for (int s : key.counts) degree += static_cast<std::size_t>(s);
        if (degree * k.rows() > limits.max_expansion)
            throw guard_exceeded("symmetrized_transform: expansion size " + std::to_string(degree * k.rows()) +
                                 " exceeds limit " + std::to_string(limits.max_expansion));

        Poly poly;
        poly.emplace(std::vector<int>(k.cols(), 0), CycInt::integer(e_order, count));
        for (std::size_t m = 0; m < key.counts.size(); ++m) {
            for (int rep = 0; rep < key.counts[m]; ++rep) {
                Poly next;
                for (const auto& [mono, coeff] : poly) {
                    for (std::size_t l = 0; l < k.cols(); ++l) {
                        if (k(m, l).is_zero()) continue;
                        auto bumped = mono;
                        ++bumped[l];
                        CycInt term = coeff * k(m, l);
                        auto it = next.find(bumped);
                        if (it == next.end()) next.emplace(std::move(bumped), std::move(term));
                        else it->second += term;
                    }
                }
                poly = std::move(next);
            }
        }
        for (auto& [mono, coeff] : poly) {
            auto it = acc.find(mono);
            if (it == acc.end()) acc.emplace(mono, std::move(coeff));
            else it->second += coeff;
        }
    }
    SymmetrizedEnumerator out;
    for (const auto& [mono, value] : acc) {
        const std::int64_t c = extract_count(value, code_size, "symmetrized_transform");
        if (c != 0) out.counts.emplace(CompositionVector{mono}, c);
    }
    return out;
}

SymmetrizedEnumerator forget_positions(const ProductEnumerator& e, std::size_t blocks) {
    SymmetrizedEnumerator out;
    for (const auto& [key, count] : e.counts) {
        CompositionVector v{std::vector<int>(blocks, 0)};
        for (int m : key) {
            if (m < 0 || static_cast<std::size_t>(m) >= blocks) throw invalid_input("forget_positions: block index out of range");
            ++v.counts[static_cast<std::size_t>(m)];
        }
        out.counts[v] += count;
    }
    return out;
}

}  // namespace fpart
