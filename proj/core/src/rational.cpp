#include "rational.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "simphil/error.hpp"

namespace simphil::detail {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

QMatrix QMatrix::from(const IntMatrix& m) {
    QMatrix q(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index k = 0; k < m.outerSize(); ++k)
        for (IntMatrix::InnerIterator it(m, k); it; ++it)
            q(static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col())) += mpz_class(static_cast<long>(it.value()));
    return q;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool QMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const mpq_class& v) { return sgn(v) == 0; });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) fail(ErrorKind::invariant_violation, "rational product shape mismatch");
    QMatrix c(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const mpq_class& v = a(r, k);
            if (sgn(v) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0) c(r, j) += v * b(k, j);
        }
    return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorKind::invariant_violation, "rational difference shape mismatch");
    QMatrix c(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t j = 0; j < a.cols(); ++j) c(r, j) = a(r, j) - b(r, j);
    return c;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).is_zero();
}

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const mpq_class inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            const mpq_class f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

QMatrix kernel_basis(const QMatrix& a) {
    QMatrix m = a;
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMatrix k(a.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k(free_cols[f], f) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], f) = -m(r, free_cols[f]);
    }
    return k;
}

QMatrix inverse(const QMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) fail(ErrorKind::invariant_violation, "inverse of a non-square matrix");
    QMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        fail(ErrorKind::invariant_violation, "inverse of a singular matrix");
    QMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

std::size_t rank(const QMatrix& a) {
    QMatrix m = a;
    return rref(m).size();
}

std::size_t sparse_rank(const IntMatrix& m) {
    using Row = std::vector<std::pair<Eigen::Index, mpz_class>>;
    // Rows of m gathered from the column-major storage.
    std::vector<Row> rows(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index k = 0; k < m.outerSize(); ++k)
        for (IntMatrix::InnerIterator it(m, k); it; ++it)
            if (it.value() != 0) rows[static_cast<std::size_t>(it.row())].emplace_back(it.col(), mpz_class(static_cast<long>(it.value())));
    std::map<Eigen::Index, Row> pivots;
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        while (!row.empty()) {
            auto found = pivots.find(row.front().first);
            if (found == pivots.end()) {
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            const Row& p = found->second;
            const mpz_class a = p.front().second;
            const mpz_class b = row.front().second;
            // row <- a*row - b*p, which cancels the leading entry.
            Row next;
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < p.size()) {
                Eigen::Index col;
                mpz_class v;
                if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
                    col = row[i].first;
                    v = a * row[i].second;
                    ++i;
                } else if (i == row.size() || p[j].first < row[i].first) {
                    col = p[j].first;
                    v = -b * p[j].second;
                    ++j;
                } else {
                    col = row[i].first;
                    v = a * row[i].second - b * p[j].second;
                    ++i;
                    ++j;
                }
                if (sgn(v) != 0) next.emplace_back(col, std::move(v));
            }
            mpz_class g = 0;
            for (const auto& e : next) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
            if (g > 1)
                for (auto& e : next) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
            row = std::move(next);
        }
    }
    return pivots.size();
}

}  // namespace simphil::detail
