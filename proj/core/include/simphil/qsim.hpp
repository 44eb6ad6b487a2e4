#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "simphil/homology.hpp"

namespace simphil {

/// Pure state over the simplex basis of one degree, or over the whole
/// normalized register when degree = -1.
struct QuantumState {
    int degree = 0;
    Eigen::VectorXcd amplitudes;
};

/// Hermitian, positive semidefinite, unit trace.
struct DensityMatrix {
    Eigen::MatrixXcd rho;
};

/// Largest violation of the state invariants: |trace - 1|, Hermiticity
/// residual and the negative part of the smallest eigenvalue.
double density_defect(const DensityMatrix& d);

/// |X_n|^{-1/2} on every n-simplex.
QuantumState uniform_state(const SimplicialSet& x, int n);

/// G_n = -W D_0 W^T D on the span of X_n.  W is the Householder reflection
/// sending |0> to the uniform state, D_0 flips |0>, D flips non-degenerate simplices.
Eigen::MatrixXd grover_operator(const SimplicialSet& x, int n);

struct GroverResult {
    QuantumState state;
    int iterations = 0;          // p_n = floor((π/4) ρ^{1/2}), capped by max_iters
    double ratio = 0.0;          // ρ_n
    double theta = 0.0;          // sin(θ/2) = ρ^{-1/2}
    double success_probability = 0.0;
    double analytic_probability = 0.0;  // sin²((2p+1)θ/2)
    /// |<target|state>|² against the uniform non-degenerate superposition.
    double target_fidelity = 0.0;
};

/// Throws no-target when X_n has no non-degenerate simplex and invariant-violation
/// when the simulated mass departs from the analytic value by more than 1e-10.
GroverResult grover_project(const SimplicialSet& x, int n, std::optional<int> max_iters = std::nullopt);

struct CountingResult {
    int bits = 0;
    std::vector<double> distribution;  // clock outcome probabilities
    std::size_t outcome = 0;           // mode, ties to the smallest outcome
    double theta = 0.0;
    double theta_estimate = 0.0;       // 2π min(φ, 1 - φ), φ = outcome / 2^bits
    double ratio = 0.0;
    double ratio_estimate = 0.0;       // 1 / sin²(θ̂/2), infinite when θ̂ = 0
    double bin_width = 0.0;            // 2π / 2^bits
};

/// Phase estimation on G_n started from the uniform state.  bits in [3, 12].
CountingResult quantum_count(const SimplicialSet& x, int n, int bits);

/// ᶜB_D^{(N)} = Σ_n (ᶜQ_{D,n} + ᶜQ_{D,n}^T) on the normalized register
/// ᶜX_0 ⊕ ... ⊕ ᶜX_N.  offsets[n] is the first register index of degree n.
struct DiracOperator {
    IntMatrix matrix;
    std::vector<std::size_t> offsets;

    std::size_t dim() const { return offsets.back(); }
};

/// Also checks B² = ᶜH_DD^{(N)} exactly (invariant-violation otherwise).
DiracOperator dirac_operator(const SimplicialSet& x);
/// ᶜH_DD^{(N)}: block diagonal, top degree truncated.
IntMatrix direct_sum_laplacian(const SimplicialSet& x);

/// exp(iτB) by exact spectral exponentiation.  Asymmetry above 1e-12 throws invalid-input.
Eigen::MatrixXcd evolve(const Eigen::MatrixXd& b, double tau);

struct QPEConfig {
    int clock_bits = 8;
    /// Evolution scale; chosen from the spectrum when absent.
    std::optional<double> tau;
    std::size_t shots = 10000;
    std::uint64_t seed = 0;
};

/// τ = 2πc/λ_max with c = 1/(1 + μ_min/λ_max), which puts every nonzero eigenphase
/// at circular distance >= μ_min/(λ_max + μ_min) from 0.  Throws config, naming the
/// eigenvalue, when that distance is below 2/2^bits.  τ = 1 when the spectrum is zero.
double phase_safe_tau(const Eigen::VectorXd& eigenvalues, double tol, int clock_bits);

/// Density-matrix path.  pure_average runs one statevector QPE per
/// non-degenerate basis state; direct evolves the mixture through the
/// measurement operators.  automatic picks pure_average up to 64 states.
enum class DensityPath { automatic, pure_average, direct };

struct QPEResult {
    int degree = 0;
    int clock_bits = 0;
    double tau = 0.0;
    DensityPath path = DensityPath::automatic;
    std::vector<double> distribution;     // exact clock outcome probabilities
    double p_zero = 0.0;                  // P(λ = 0)
    std::size_t nondegenerate = 0;        // |ᶜX_n|
    std::size_t kernel_dim = 0;           // dim ker ᶜH_DD,N,n
    double kernel_fraction = 0.0;
    double min_phase_distance = 0.0;      // 1 when the spectrum is zero
    double leakage_bound = 0.0;           // (1 - w_ker) / (2^{2b} sin²(π d_min))
    std::vector<std::pair<std::size_t, std::size_t>> histogram;  // (outcome, count), nonzero counts
    double p_zero_sampled = 0.0;
    std::size_t betti_estimate = 0;       // round(P̂ |ᶜX_n|)
    DensityMatrix post_state;             // on the register, empty when P(λ = 0) = 0
    double support_error = 0.0;           // weight of post_state outside ker ᶜH_DD^{(N)}
    bool support_ok = false;              // support_error <= 1e-8
    bool truncation_sensitive = false;    // n = N
};

/// Throws invariant-violation when P(λ = 0) leaves [w_ker, w_ker + leakage_bound].
QPEResult qpe_betti(const SimplicialSet& x, int n, const QPEConfig& cfg, DensityPath path = DensityPath::automatic);

const char* to_string(DensityPath p) noexcept;

}  // namespace simphil
