#include "fpart/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "fpart/errors.hpp"

namespace fpart {

namespace {

void trim(std::vector<BigInt>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; the remainder must vanish.
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const std::size_t d = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("divide_exact: degree too small");
    std::vector<BigInt> quot(num.size() - d);
    for (std::size_t i = num.size(); i-- > d;) {
        BigInt c = num[i];
        if (c == 0) continue;
        quot[i - d] = c;
        for (std::size_t j = 0; j <= d; ++j) num[i - d + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

CycPoly compute_cyclotomic(std::uint32_t order) {
    // x^E - 1 divided by Phi_d over the proper divisors d of E.
    std::vector<BigInt> num(order + 1);
    num[0] = -1;
    num[order] = 1;
    for (std::uint32_t d = 1; d < order; ++d) {
        if (order % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d).coeffs);
    }
    trim(num);
    return CycPoly{std::move(num)};
}

// In-place reduction modulo the monic Phi; leaves exactly phi(E) coefficients.
void reduce(std::vector<BigInt>& p, const CycPoly& phi) {
    const std::size_t d = phi.coeffs.size() - 1;
    for (std::size_t i = p.size(); i-- > d;) {
        if (p[i] == 0) continue;
        BigInt c = std::move(p[i]);
        p[i] = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (phi.coeffs[j] != 0) p[i - d + j] -= c * phi.coeffs[j];
        }
    }
    p.resize(d);
}

void require_same_order(const CycInt& a, const CycInt& b) {
    if (a.order() != b.order())
        throw invalid_input("cyclotomic order mismatch: " + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()));
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
    std::uint32_t result = n;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const CycPoly& cyclotomic_polynomial(std::uint32_t order) {
    if (order == 0) throw invalid_input("cyclotomic_polynomial: order must be positive");
    static std::recursive_mutex mutex;
    static std::map<std::uint32_t, CycPoly> memo;
    std::lock_guard lock(mutex);
    if (auto it = memo.find(order); it != memo.end()) return it->second;
    CycPoly phi = order == 1 ? CycPoly{{BigInt(-1), BigInt(1)}} : compute_cyclotomic(order);
    return memo.emplace(order, std::move(phi)).first->second;
}

CycInt::CycInt(std::uint32_t order, std::vector<BigInt> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (order == 0) throw invalid_input("CycInt: order must be positive");
    const auto& phi = cyclotomic_polynomial(order);
    const std::size_t d = phi.coeffs.size() - 1;
    if (coeffs_.size() < d) coeffs_.resize(d);
    reduce(coeffs_, phi);
}

CycInt CycInt::integer(std::uint32_t order, const BigInt& value) {
    return CycInt(order, std::vector<BigInt>{value});
}

CycInt CycInt::from_exponent_counts(std::uint32_t order, std::span<const std::int64_t> counts) {
    std::vector<BigInt> p(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) p[k] = counts[k];
    return CycInt(order, std::move(p));
}

bool CycInt::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& rhs) {
    require_same_order(*this, rhs);
    auto prod = multiply(coeffs_, rhs.coeffs_);
    const auto& phi = cyclotomic_polynomial(order_);
    if (prod.size() < coeffs_.size()) prod.resize(coeffs_.size());
    reduce(prod, phi);
    coeffs_ = std::move(prod);
    return *this;
}

std::strong_ordering CycInt::operator<=>(const CycInt& rhs) const {
    if (auto c = order_ <=> rhs.order_; c != 0) return c;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] < rhs.coeffs_[i]) return std::strong_ordering::less;
        if (coeffs_[i] > rhs.coeffs_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

CycInt zeta_pow(std::uint32_t order, std::int64_t k) {
    if (order == 0) throw invalid_input("zeta_pow: order must be positive");
    const std::int64_t e = static_cast<std::int64_t>(order);
    const auto r = static_cast<std::size_t>(((k % e) + e) % e);
    std::vector<BigInt> p(r + 1);
    p[r] = 1;
    return CycInt(order, std::move(p));
}

CycInt conjugate(const CycInt& a) {
    const std::uint32_t e = a.order();
    std::vector<BigInt> p(e);
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) p[(e - j) % e] += a.coeffs()[j];
    return CycInt(e, std::move(p));
}

std::optional<BigInt> as_rational_integer(const CycInt& a) {
    const auto& c = a.coeffs();
    for (std::size_t j = 1; j < c.size(); ++j)
        if (c[j] != 0) return std::nullopt;
    return c.empty() ? BigInt(0) : c[0];
}

CycInt change_order(const CycInt& a, std::uint32_t new_order) {
    if (new_order == 0 || new_order % a.order() != 0)
        throw invalid_input("change_order: " + std::to_string(a.order()) + " does not divide " +
                            std::to_string(new_order));
    const std::size_t step = new_order / a.order();
    std::vector<BigInt> p(step * a.coeffs().size() + 1);
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) p[j * step] = a.coeffs()[j];
    return CycInt(new_order, std::move(p));
}

std::pair<double, double> approx_complex(const CycInt& a) {
    double re = 0.0, im = 0.0;
    const double theta = 2.0 * std::numbers::pi / a.order();
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
        const double c = a.coeffs()[j].convert_to<double>();
        re += c * std::cos(theta * j);
        im += c * std::sin(theta * j);
    }
    return {re, im};
}

std::string to_string(const CycInt& a) {
    if (auto n = as_rational_integer(a)) return n->str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
        const BigInt& c = a.coeffs()[j];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (j == 0 || mag != 1) os << mag;
        if (j >= 1) os << (j == 0 || mag != 1 ? "*" : "") << "z" << a.order();
        if (j >= 2) os << "^" << j;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycInt& a) { return os << to_string(a); }

}  // namespace fpart
