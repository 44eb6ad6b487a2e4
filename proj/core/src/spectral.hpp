#pragma once

#include <string>

#include <Eigen/Dense>

#include "simphil/hilbert_ops.hpp"

namespace simphil::detail {

/// Eigen-decomposition of a real symmetric matrix with the zero threshold
/// tol = 1e-9 * max(1, ||H||_inf).  Eigenvalues with |λ| in [tol, 10 tol)
/// raise ambiguous-spectrum.
struct Spectrum {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
    double tol = 0.0;
    Eigen::Index kernel_dim = 0;

    /// Orthonormal kernel basis as columns.
    Eigen::MatrixXd kernel() const;
    Eigen::MatrixXd kernel_projector() const;
    /// Moore–Penrose inverse on the complement of the kernel.
    Eigen::MatrixXd pseudo_inverse() const;
};

Spectrum symmetric_spectrum(const Eigen::MatrixXd& h, const std::string& what);

Eigen::MatrixXd to_dense(const IntMatrix& m);

/// Largest absolute entry, 0 for an empty matrix.
double max_abs(const Eigen::MatrixXd& m);

}  // namespace simphil::detail
