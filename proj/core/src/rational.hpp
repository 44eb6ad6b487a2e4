#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "simphil/hilbert_ops.hpp"

namespace simphil::detail {

/// Dense row-major matrix over ℚ.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix from(const IntMatrix& m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    mpq_class& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const mpq_class& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    QMatrix transpose() const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> a_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
bool operator==(const QMatrix& a, const QMatrix& b);

/// Columns form a basis of the right kernel {v : a v = 0}.
QMatrix kernel_basis(const QMatrix& a);
/// Inverse of a square invertible matrix; throws invariant-violation if singular.
QMatrix inverse(const QMatrix& a);
std::size_t rank(const QMatrix& a);

/// Rank over ℚ by sparse fraction-free elimination over ℤ.
std::size_t sparse_rank(const IntMatrix& m);

}  // namespace simphil::detail
