#include "simphil/homology.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rational.hpp"
#include "simphil/error.hpp"
#include "spectral.hpp"

namespace simphil {

namespace {

std::string at(const char* what, int n) { return std::string(what) + " at n=" + std::to_string(n); }

IntMatrix D(const SimplicialSet& x, int n, int i) { return simplicial_operator(x, OperatorKind::face, n, i).matrix; }
IntMatrix S(const SimplicialSet& x, int n, int i) {
    return simplicial_operator(x, OperatorKind::degeneracy, n, i).matrix;
}
IntMatrix Pi(const SimplicialSet& x, int n, int i) { return auxiliary_operator(x, AuxKind::PiI, n, i).matrix; }
IntMatrix aux(const SimplicialSet& x, AuxKind kind, int n, int i) { return auxiliary_operator(x, kind, n, i).matrix; }

IntMatrix QD(const SimplicialSet& x, int n) { return boundary_operator(x, BoundaryKind::QD, n).matrix; }
IntMatrix QS(const SimplicialSet& x, int n) { return boundary_operator(x, BoundaryKind::QS, n).matrix; }

}  // namespace

LinearOperator boundary_operator(const SimplicialSet& x, BoundaryKind kind, int n) {
    if (kind == BoundaryKind::QD) {
        if (n < 1 || n > x.cutoff()) fail(ErrorKind::degree_out_of_range, at("face boundary operator", n));
        IntMatrix q = zero_matrix(x.size(n - 1), x.size(n));
        for (int i = 0; i <= n; ++i) q += (i % 2 == 0 ? 1 : -1) * D(x, n, i);
        return {n, n - 1, pruned(q)};
    }
    if (n < 0 || n >= x.cutoff()) fail(ErrorKind::degree_out_of_range, at("degeneracy coboundary operator", n));
    IntMatrix q = zero_matrix(x.size(n + 1), x.size(n));
    for (int i = 0; i <= n; ++i) q += (i % 2 == 0 ? 1 : -1) * S(x, n, i);
    return {n, n + 1, pruned(q)};
}

LinearOperator hodge_laplacian(const SimplicialSet& x, LaplacianKind kind, int n) {
    const int cutoff = x.cutoff();
    switch (kind) {
        case LaplacianKind::DD: {
            if (n < 0 || n > cutoff) fail(ErrorKind::degree_out_of_range, at("face Laplacian", n));
            IntMatrix h = zero_matrix(x.size(n), x.size(n));
            if (n >= 1) {
                const IntMatrix q = QD(x, n);
                h += transpose(q) * q;
            }
            if (n + 1 <= cutoff) {
                const IntMatrix q = QD(x, n + 1);
                h += q * transpose(q);
            }
            return {n, n, pruned(h)};
        }
        case LaplacianKind::SD: {
            if (n < 2 || n > cutoff) fail(ErrorKind::degree_out_of_range, at("mixed Laplacian", n));
            IntMatrix h = transpose(QS(x, n - 2)) * QD(x, n) + QD(x, n - 1) * transpose(QS(x, n - 1));
            return {n, n - 2, pruned(h)};
        }
        case LaplacianKind::SS: {
            if (n < 0 || n >= cutoff) fail(ErrorKind::degree_out_of_range, at("degeneracy Laplacian", n));
            const IntMatrix q = QS(x, n);
            IntMatrix h = transpose(q) * q;
            if (n >= 1) {
                const IntMatrix p = QS(x, n - 1);
                h += p * transpose(p);
            }
            return {n, n, pruned(h)};
        }
    }
    fail(ErrorKind::invalid_input, "unknown Laplacian kind");
}

LinearOperator upsilon(const SimplicialSet& x, DefectKind kind, int n) {
    const int cutoff = x.cutoff();
    auto sign = [](int i, int j) { return (i + j) % 2 == 0 ? 1 : -1; };
    switch (kind) {
        case DefectKind::DD: {
            if (n < 0 || n + 1 > cutoff) fail(ErrorKind::degree_out_of_range, at("Υ_DD", n));
            IntMatrix u = zero_matrix(x.size(n), x.size(n));
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j) u += sign(i, j) * defect(x, kind, n, i, j).matrix;
            return {n, n, pruned(u)};
        }
        case DefectKind::DS: {
            if (n < 0 || n + 2 > cutoff) fail(ErrorKind::degree_out_of_range, at("Υ_DS", n));
            IntMatrix u = zero_matrix(x.size(n + 2), x.size(n));
            for (int i = 0; i <= n; ++i)
                for (int j = i; j <= n; ++j) u += sign(i, j) * defect(x, kind, n, i, j).matrix;
            return {n, n + 2, pruned(u)};
        }
        case DefectKind::SD: {
            if (n < 2 || n > cutoff) fail(ErrorKind::degree_out_of_range, at("Υ_SD", n));
            IntMatrix u = zero_matrix(x.size(n - 2), x.size(n));
            for (int i = 0; i <= n; ++i)
                for (int j = i + 2; j <= n; ++j) u += sign(i, j) * defect(x, kind, n, i, j).matrix;
            return {n, n - 2, pruned(u)};
        }
        case DefectKind::SS: break;
    }
    fail(ErrorKind::invalid_input, "Υ is not defined for SS defects");
}

LinearOperator h0_operator(const SimplicialSet& x, LaplacianKind kind, int n) {
    const int cutoff = x.cutoff();
    switch (kind) {
        case LaplacianKind::DD: {
            if (n < 0 || n + 1 > cutoff) fail(ErrorKind::degree_out_of_range, at("H⁰_DD", n));
            IntMatrix h = zero_matrix(x.size(n), x.size(n));
            for (int i = 0; i <= n + 1; ++i) h += aux(x, AuxKind::Omega, n, i);
            for (int i = 0; i <= n; ++i) {
                const IntMatrix g = aux(x, AuxKind::Gamma, n, i);
                h += aux(x, AuxKind::Theta, n, i) - g - transpose(g);
            }
            return {n, n, pruned(h)};
        }
        case LaplacianKind::SD: {
            if (n < 2 || n > cutoff) fail(ErrorKind::degree_out_of_range, at("H⁰_SD", n));
            IntMatrix h = zero_matrix(x.size(n - 2), x.size(n));
            for (int i = 0; i <= n - 1; ++i) h += D(x, n - 1, i) * D(x, n, i + 1) * Pi(x, n, i);
            for (int i = 0; i <= n - 2; ++i) h -= D(x, n - 1, i) * Pi(x, n - 1, i) * D(x, n, i + 1);
            return {n, n - 2, pruned(h)};
        }
        case LaplacianKind::SS: {
            if (n < 0 || n >= cutoff) fail(ErrorKind::degree_out_of_range, at("H⁰_SS", n));
            IntMatrix h = static_cast<std::int64_t>(n + 1) * identity_matrix(x.size(n));
            for (int i = 0; i <= n - 1; ++i) h -= Pi(x, n, i);
            return {n, n, pruned(h)};
        }
    }
    fail(ErrorKind::invalid_input, "unknown Laplacian kind");
}

CheckReport laplacian_decomposition_check(const SimplicialSet& x, int n) {
    const int cutoff = x.cutoff();
    if (n < 0 || n > cutoff) fail(ErrorKind::degree_out_of_range, at("Laplacian decomposition", n));
    CheckReport r;
    if (n + 1 <= cutoff) {
        const IntMatrix u = upsilon(x, DefectKind::DD, n).matrix;
        r.expect(equal(hodge_laplacian(x, LaplacianKind::DD, n).matrix,
                       u + transpose(u) + h0_operator(x, LaplacianKind::DD, n).matrix),
                 at("H_DD = Υ_DD + Υ_DD^T + H⁰_DD", n));
        if (n == 0) r.expect(is_zero(u), "Υ_DD0 = 0");
    }
    if (n >= 2) {
        r.expect(equal(hodge_laplacian(x, LaplacianKind::SD, n).matrix,
                       upsilon(x, DefectKind::SD, n).matrix + transpose(upsilon(x, DefectKind::DS, n - 2).matrix) +
                           h0_operator(x, LaplacianKind::SD, n).matrix),
                 at("H_SD = Υ_SD + Υ_DS^T + H⁰_SD", n));
    }
    if (n + 1 <= cutoff) {
        const IntMatrix h = hodge_laplacian(x, LaplacianKind::SS, n).matrix;
        r.expect(equal(h, h0_operator(x, LaplacianKind::SS, n).matrix), at("H_SS = H⁰_SS", n));
        // Diagonal form (n+1) - Σ_i |𝔖_{n-1,i}(σ)|, bounded below by 1.
        IntMatrix diag = zero_matrix(x.size(n), x.size(n));
        std::int64_t min_diag = n + 1;
        for (Index k = 0; k < x.size(n); ++k) {
            std::int64_t v = n + 1;
            for (int i = 0; i < n; ++i) v -= static_cast<std::int64_t>(preimage_set(x, OperatorKind::degeneracy, n - 1, i, k).size());
            diag.insert(k, k) = v;
            min_diag = std::min(min_diag, v);
        }
        r.expect(equal(h, diag), at("H_SS diagonal counting form", n));
        r.expect(min_diag >= 1, at("H_SS >= 1", n));
    }
    return r;
}

std::string to_string(BettiMethod m) {
    switch (m) {
        case BettiMethod::exact_rank: return "exact_rank";
        case BettiMethod::hodge: return "hodge";
        case BettiMethod::normalized_hodge: return "normalized_hodge";
    }
    return "?";
}

std::size_t rational_rank(const IntMatrix& m) { return detail::sparse_rank(m); }

BettiResult betti(const SimplicialSet& x, int n, BettiMethod method) {
    const int cutoff = x.cutoff();
    if (n < 0 || n > cutoff) fail(ErrorKind::degree_out_of_range, at("Betti number", n));
    BettiResult r{n, 0, method, cutoff - 1, n == cutoff};
    switch (method) {
        case BettiMethod::exact_rank: {
            const std::size_t down = n >= 1 ? rational_rank(QD(x, n)) : 0;
            const std::size_t up = n + 1 <= cutoff ? rational_rank(QD(x, n + 1)) : 0;
            r.value = x.size(n) - down - up;
            break;
        }
        case BettiMethod::hodge: {
            const auto h = detail::to_dense(hodge_laplacian(x, LaplacianKind::DD, n).matrix);
            r.value = static_cast<std::size_t>(detail::symmetric_spectrum(h, at("H_DD", n)).kernel_dim);
            break;
        }
        case BettiMethod::normalized_hodge: {
            const auto h = detail::to_dense(normalized_laplacian(x, n).matrix);
            r.value = static_cast<std::size_t>(detail::symmetric_spectrum(h, at("normalized H_DD", n)).kernel_dim);
            break;
        }
    }
    return r;
}

CheckReport hodge_resolution_check(const SimplicialSet& x, ChainComplexView::Basis basis, int n) {
    const int cutoff = x.cutoff();
    if (n < 0 || n > cutoff) fail(ErrorKind::degree_out_of_range, at("Hodge resolution", n));
    const ChainComplexView c = basis == ChainComplexView::Basis::full ? full_complex(x) : normalized_complex(x);
    CheckReport r;
    const bool has_down = n >= 1;
    const bool has_up = n + 1 <= cutoff;
    const IntMatrix hn = complex_laplacian(c, n);
    const auto spec = detail::symmetric_spectrum(detail::to_dense(hn), at("Laplacian", n));

    Eigen::MatrixXd sum = spec.kernel_projector();
    if (has_up) {
        const Eigen::MatrixXd q = detail::to_dense(c.q[n + 1].matrix);
        const auto up = detail::symmetric_spectrum(detail::to_dense(complex_laplacian(c, n + 1)), at("Laplacian", n + 1));
        sum += q * up.pseudo_inverse() * q.transpose();
    }
    if (has_down) {
        const Eigen::MatrixXd q = detail::to_dense(c.q[n].matrix);
        const auto down = detail::symmetric_spectrum(detail::to_dense(complex_laplacian(c, n - 1)), at("Laplacian", n - 1));
        sum += q.transpose() * down.pseudo_inverse() * q;
        const double res = detail::max_abs(q * spec.pseudo_inverse() - down.pseudo_inverse() * q);
        r.max_residual = std::max(r.max_residual, res);
        r.expect(res < 1e-10, at("Q H^+ = H^+ Q", n));
        r.expect(equal(c.q[n].matrix * hn, complex_laplacian(c, n - 1) * c.q[n].matrix), at("Q H = H Q", n));
    }
    const double res = detail::max_abs(sum - Eigen::MatrixXd::Identity(sum.rows(), sum.cols()));
    r.max_residual = std::max(r.max_residual, res);
    r.expect(res < 1e-10, at("resolution of the identity", n));

    // Exact kernel over ℚ.
    const detail::QMatrix k = detail::kernel_basis(detail::QMatrix::from(hn));
    r.expect(static_cast<Eigen::Index>(k.cols()) == spec.kernel_dim, at("rational and spectral kernel dimensions", n));
    if (has_down) r.expect((detail::QMatrix::from(c.q[n].matrix) * k).is_zero(), at("Q_n P_n = 0", n));
    if (has_up)
        r.expect((detail::QMatrix::from(transpose(c.q[n + 1].matrix)) * k).is_zero(), at("Q_{n+1}^T P_n = 0", n));
    return r;
}

Eigen::MatrixXd harmonic_basis(const SimplicialSet& x, int n) {
    const auto h = detail::to_dense(hodge_laplacian(x, LaplacianKind::DD, n).matrix);
    return detail::symmetric_spectrum(h, at("H_DD", n)).kernel();
}

Eigen::MatrixXd induced_homology_map(const SimplicialMorphismTable& phi, const SimplicialSet& x,
                                     const SimplicialSet& y, int n) {
    if (!morphism_validate(phi, x, y).ok()) fail(ErrorKind::invalid_input, "map is not a simplicial morphism");
    const IntMatrix f = morphism_operator(phi, x, y, n).matrix;
    if (n >= 1 && !equal(morphism_operator(phi, x, y, n - 1).matrix * QD(x, n), QD(y, n) * f))
        fail(ErrorKind::invariant_violation, at("morphism operator does not commute with Q_D", n));
    if (n + 1 <= x.cutoff() &&
        !equal(f * QD(x, n + 1), QD(y, n + 1) * morphism_operator(phi, x, y, n + 1).matrix))
        fail(ErrorKind::invariant_violation, at("morphism operator does not commute with Q_D", n + 1));
    const Eigen::MatrixXd kx = harmonic_basis(x, n);
    const Eigen::MatrixXd ky = harmonic_basis(y, n);
    return ky.transpose() * detail::to_dense(f) * kx;
}

}  // namespace simphil
