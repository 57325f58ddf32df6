#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fpart {

/// Dense row-major matrix over an arbitrary ring scalar.
///
/// Scalars need copy, `+=` and `*`; nothing requires a literal zero, so ring
/// elements that carry runtime parameters (CycInt and its order) work as-is.
template <class Scalar>
class Matrix {
   public:
    using value_type = Scalar;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<const Scalar> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

    bool operator==(const Matrix&) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

template <class Scalar>
Matrix<Scalar> from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return {};
    Matrix<Scalar> out(rows.size(), rows.front().size(), rows.front().front());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != out.cols()) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = rows[i][j];
    }
    return out;
}

/// Matrix product; the inner dimension must be positive.
template <class Scalar>
Matrix<Scalar> operator*(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    if (a.cols() != b.rows() || a.cols() == 0) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix<Scalar> out(a.rows(), b.cols(), a(0, 0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar acc = a(i, 0) * b(0, j);
            for (std::size_t k = 1; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            out(i, j) = std::move(acc);
        }
    }
    return out;
}

template <class Scalar>
Matrix<Scalar> transpose(const Matrix<Scalar>& a) {
    if (a.empty()) return {};
    Matrix<Scalar> out(a.cols(), a.rows(), a(0, 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

/// Entrywise image under `f`.
template <class Scalar, class F>
auto map(const Matrix<Scalar>& a, F&& f) -> Matrix<std::decay_t<decltype(f(a(0, 0)))>> {
    using Out = std::decay_t<decltype(f(a(0, 0)))>;
    if (a.empty()) return {};
    Matrix<Out> out(a.rows(), a.cols(), f(a(0, 0)));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f(a(i, j));
    return out;
}

}  // namespace fpart
