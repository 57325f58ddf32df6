#pragma once

// Exact arithmetic in the cyclotomic integers Z[zeta_E].
//
// A CycInt is stored as its residue modulo the E-th cyclotomic polynomial in
// the power basis 1, zeta, ..., zeta^(phi(E)-1). Because the reduction is
// canonical, equality of algebraic numbers is equality of coefficient vectors.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fpart {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
struct CycPoly {
    std::vector<BigInt> coeffs;

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const CycPoly&) const = default;
};

/// Euler's totient.
std::uint32_t euler_phi(std::uint32_t n);

/// The E-th cyclotomic polynomial, memoized per process (thread-safe).
const CycPoly& cyclotomic_polynomial(std::uint32_t order);

class CycInt {
   public:
    /// Reduces an arbitrary-length coefficient vector modulo Phi_order.
    CycInt(std::uint32_t order, std::vector<BigInt> coeffs);

    /// The rational integer `value` viewed in Z[zeta_order].
    static CycInt integer(std::uint32_t order, const BigInt& value);

    /// Sum of counts[k] * zeta^k for k < counts.size(); the fast path for character sums.
    static CycInt from_exponent_counts(std::uint32_t order, std::span<const std::int64_t> counts);

    [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
    [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const;

    CycInt& operator+=(const CycInt& rhs);
    CycInt& operator-=(const CycInt& rhs);
    CycInt& operator*=(const CycInt& rhs);

    friend CycInt operator+(CycInt lhs, const CycInt& rhs) { return lhs += rhs; }
    friend CycInt operator-(CycInt lhs, const CycInt& rhs) { return lhs -= rhs; }
    friend CycInt operator*(CycInt lhs, const CycInt& rhs) { return lhs *= rhs; }
    friend CycInt operator-(CycInt a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    bool operator==(const CycInt& rhs) const = default;
    /// Total order on representations (order, then coefficients); not a field order.
    std::strong_ordering operator<=>(const CycInt& rhs) const;

   private:
    CycInt() = default;
    std::uint32_t order_ = 1;
    std::vector<BigInt> coeffs_;
};

/// zeta_E^(k mod E).
CycInt zeta_pow(std::uint32_t order, std::int64_t k);

inline CycInt add(const CycInt& a, const CycInt& b) { return a + b; }
inline CycInt mul(const CycInt& a, const CycInt& b) { return a * b; }
inline CycInt neg(const CycInt& a) { return -a; }

/// Image under zeta -> zeta^(E-1), i.e. complex conjugation.
CycInt conjugate(const CycInt& a);

/// The value as a rational integer if a lies in Z.
std::optional<BigInt> as_rational_integer(const CycInt& a);

/// Re-expresses a in Z[zeta_E2]; requires order(a) | E2.
CycInt change_order(const CycInt& a, std::uint32_t new_order);

/// Evaluation at exp(2*pi*i/E). Display only.
std::pair<double, double> approx_complex(const CycInt& a);

std::string to_string(const CycInt& a);
std::ostream& operator<<(std::ostream& os, const CycInt& a);

}  // namespace fpart
