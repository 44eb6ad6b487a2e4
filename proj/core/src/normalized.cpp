#include <string>
#include <unordered_map>

#include "rational.hpp"
#include "simphil/error.hpp"
#include "simphil/homology.hpp"

namespace simphil {

namespace {

std::string at(const char* what, int n) { return std::string(what) + " at n=" + std::to_string(n); }

/// Selection matrix mapping a subset basis into the full simplex basis (|X_n| x |basis|).
IntMatrix inclusion(const std::vector<Index>& basis, std::size_t full) {
    IntMatrix e(static_cast<Eigen::Index>(full), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) e.insert(basis[c], static_cast<Eigen::Index>(c)) = 1;
    return e;
}

std::vector<Index> all_indices(std::size_t size) {
    std::vector<Index> v(size);
    for (Index k = 0; k < size; ++k) v[k] = k;
    return v;
}

}  // namespace

ChainComplexView full_complex(const SimplicialSet& x) {
    ChainComplexView c;
    c.tag = ChainComplexView::Basis::full;
    for (int n = 0; n <= x.cutoff(); ++n) {
        c.basis.push_back(all_indices(x.size(n)));
        c.q.push_back(n == 0 ? LinearOperator{0, -1, zero_matrix(0, x.size(0))}
                             : boundary_operator(x, BoundaryKind::QD, n));
    }
    return c;
}

ChainComplexView normalized_complex(const SimplicialSet& x) {
    ChainComplexView c;
    c.tag = ChainComplexView::Basis::normalized;
    std::vector<std::unordered_map<Index, Index>> position(static_cast<std::size_t>(x.cutoff()) + 1);
    for (int n = 0; n <= x.cutoff(); ++n) {
        c.basis.push_back(nondegenerate(x, n));
        for (Index p = 0; p < c.basis.back().size(); ++p) position[n][c.basis.back()[p]] = p;
    }
    c.q.push_back({0, -1, zero_matrix(0, c.dim(0))});
    for (int n = 1; n <= x.cutoff(); ++n) {
        std::vector<Eigen::Triplet<std::int64_t>> trips;
        for (Index col = 0; col < c.dim(n); ++col)
            for (int i = 0; i <= n; ++i) {
                auto it = position[n - 1].find(x.face(n, i, c.basis[n][col]));
                if (it != position[n - 1].end()) trips.emplace_back(it->second, col, i % 2 == 0 ? 1 : -1);
            }
        IntMatrix q(static_cast<Eigen::Index>(c.dim(n - 1)), static_cast<Eigen::Index>(c.dim(n)));
        q.setFromTriplets(trips.begin(), trips.end());
        c.q.push_back({n, n - 1, pruned(q)});
    }
    return c;
}

ChainComplexView normalized_complex_via_projector(const SimplicialSet& x) {
    ChainComplexView c;
    c.tag = ChainComplexView::Basis::normalized;
    for (int n = 0; n <= x.cutoff(); ++n) c.basis.push_back(nondegenerate(x, n));
    c.q.push_back({0, -1, zero_matrix(0, c.dim(0))});
    for (int n = 1; n <= x.cutoff(); ++n) {
        const IntMatrix complement =
            identity_matrix(x.size(n - 1)) - auxiliary_operator(x, AuxKind::Pi, n - 1).matrix;
        const IntMatrix q = transpose(inclusion(c.basis[n - 1], x.size(n - 1))) * complement *
                            boundary_operator(x, BoundaryKind::QD, n).matrix * inclusion(c.basis[n], x.size(n));
        c.q.push_back({n, n - 1, pruned(q)});
    }
    return c;
}

IntMatrix complex_laplacian(const ChainComplexView& c, int n) {
    if (n < 0 || n > c.cutoff()) fail(ErrorKind::degree_out_of_range, at("complex Laplacian", n));
    IntMatrix h = zero_matrix(c.dim(n), c.dim(n));
    if (n >= 1) h += transpose(c.q[n].matrix) * c.q[n].matrix;
    if (n + 1 <= c.cutoff()) h += c.q[n + 1].matrix * transpose(c.q[n + 1].matrix);
    return pruned(h);
}

LinearOperator normalized_laplacian(const SimplicialSet& x, int n) {
    if (n < 0 || n > x.cutoff()) fail(ErrorKind::degree_out_of_range, at("normalized Laplacian", n));
    return {n, n, complex_laplacian(normalized_complex(x), n)};
}

CheckReport chain_equivalence_check(const SimplicialSet& x, int n_max) {
    using detail::QMatrix;
    if (n_max < 0 || n_max > x.cutoff() - 1)
        fail(ErrorKind::degree_out_of_range, "chain equivalence needs 0 <= n_max <= N-1");
    CheckReport r;
    const ChainComplexView cn = normalized_complex(x);
    const ChainComplexView cp = normalized_complex_via_projector(x);

    // Quotient model per degree: q_n spans the annihilator of the degenerate
    // span, so v -> q_n v realizes H_n -> H_n / sH_n; L_n is a right inverse.
    std::vector<QMatrix> q, lift, inc, proj;
    for (int n = 0; n <= n_max; ++n) {
        const std::size_t size = x.size(n);
        QMatrix span(size, 0);
        if (n >= 1) {
            std::vector<IntMatrix> blocks;
            for (int i = 0; i < n; ++i) blocks.push_back(simplicial_operator(x, OperatorKind::degeneracy, n - 1, i).matrix);
            span = QMatrix(size, x.size(n - 1) * static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const QMatrix b = QMatrix::from(blocks[i]);
                for (std::size_t row = 0; row < size; ++row)
                    for (std::size_t col = 0; col < b.cols(); ++col) span(row, i * b.cols() + col) = b(row, col);
            }
        }
        const QMatrix qn = detail::kernel_basis(span.transpose()).transpose();
        q.push_back(qn);
        lift.push_back(qn.transpose() * detail::inverse(qn * qn.transpose()));
        inc.push_back(QMatrix::from(inclusion(cn.basis[n], size)));
        proj.push_back(QMatrix::from(identity_matrix(size) - auxiliary_operator(x, AuxKind::Pi, n).matrix));
        r.expect(qn.rows() == cn.dim(n), at("quotient dimension equals non-degenerate count", n));
    }
    for (int n = 0; n <= n_max; ++n) {
        const QMatrix I = inc[n].transpose() * proj[n] * lift[n];
        const QMatrix J = q[n] * inc[n];
        r.expect(I * J == QMatrix::identity(cn.dim(n)), at("I J = 1", n));
        r.expect(J * I == QMatrix::identity(q[n].rows()), at("J I = 1", n));
        if (n == 0) continue;
        const QMatrix Qn = QMatrix::from(boundary_operator(x, BoundaryKind::QD, n).matrix);
        const QMatrix cQ = QMatrix::from(cn.q[n].matrix);
        const QMatrix Qbar = q[n - 1] * Qn * lift[n];
        const QMatrix I_prev = inc[n - 1].transpose() * proj[n - 1] * lift[n - 1];
        const QMatrix J_prev = q[n - 1] * inc[n - 1];
        r.expect(I_prev * Qbar == cQ * I, at("I Q̄ = ᶜQ I", n));
        r.expect(J_prev * cQ == Qbar * J, at("J ᶜQ = Q̄ J", n));
        r.expect(equal(cn.q[n].matrix, cp.q[n].matrix), at("ᶜQ formula equals projected boundary", n));
        const IntMatrix pin = auxiliary_operator(x, AuxKind::Pi, n).matrix;
        const IntMatrix comp_prev = identity_matrix(x.size(n - 1)) - auxiliary_operator(x, AuxKind::Pi, n - 1).matrix;
        r.expect(is_zero(comp_prev * boundary_operator(x, BoundaryKind::QD, n).matrix * pin),
                 at("(1 - Π) Q_D Π = 0", n));
        if (n >= 2) r.expect(is_zero(cn.q[n - 1].matrix * cn.q[n].matrix), at("ᶜQ ᶜQ = 0", n));
    }
    return r;
}

}  // namespace simphil
