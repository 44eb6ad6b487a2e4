#include "spectral.hpp"

#include <cmath>
#include <sstream>

#include "simphil/error.hpp"

namespace simphil::detail {

Eigen::MatrixXd Spectrum::kernel() const {
    Eigen::MatrixXd k(vectors.rows(), kernel_dim);
    Eigen::Index c = 0;
    for (Eigen::Index j = 0; j < values.size(); ++j)
        if (std::abs(values[j]) < tol) k.col(c++) = vectors.col(j);
    return k;
}

Eigen::MatrixXd Spectrum::kernel_projector() const {
    const Eigen::MatrixXd k = kernel();
    return k * k.transpose();
}

Eigen::MatrixXd Spectrum::pseudo_inverse() const {
    Eigen::VectorXd inv(values.size());
    for (Eigen::Index j = 0; j < values.size(); ++j) inv[j] = std::abs(values[j]) < tol ? 0.0 : 1.0 / values[j];
    return vectors * inv.asDiagonal() * vectors.transpose();
}

Spectrum symmetric_spectrum(const Eigen::MatrixXd& h, const std::string& what) {
    Spectrum s;
    const double norm = h.size() == 0 ? 0.0 : h.cwiseAbs().rowwise().sum().maxCoeff();
    s.tol = 1e-9 * std::max(1.0, norm);
    if (h.rows() == 0) return s;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) fail(ErrorKind::invariant_violation, what + ": eigen-solver failed");
    s.values = es.eigenvalues();
    s.vectors = es.eigenvectors();
    for (Eigen::Index j = 0; j < s.values.size(); ++j) {
        const double a = std::abs(s.values[j]);
        if (a < s.tol) {
            ++s.kernel_dim;
        } else if (a < 10 * s.tol) {
            std::ostringstream msg;
            msg << what << ": eigenvalue " << s.values[j] << " lies in the ambiguity band [" << s.tol << ", "
                << 10 * s.tol << ")";
            fail(ErrorKind::ambiguous_spectrum, msg.str());
        }
    }
    return s;
}

Eigen::MatrixXd to_dense(const IntMatrix& m) { return Eigen::MatrixXd(m.cast<double>()); }

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace simphil::detail
