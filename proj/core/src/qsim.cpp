#include "simphil/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "simphil/error.hpp"
#include "spectral.hpp"

namespace simphil {

namespace {

constexpr double pi = 3.14159265358979323846;
using cd = std::complex<double>;

void check_degree(const SimplicialSet& x, int n, const char* what) {
    if (n < 0 || n > x.cutoff())
        fail(ErrorKind::degree_out_of_range, std::string(what) + ": degree " + std::to_string(n) + " outside 0.." +
                                                 std::to_string(x.cutoff()));
}

std::string format_double(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

/// Circular distance of the eigenphase τλ/2π from 0.
double phase_distance(double tau, double lambda) {
    double phi = std::fmod(tau * lambda / (2 * pi), 1.0);
    if (phi < 0) phi += 1.0;
    return std::min(phi, 1.0 - phi);
}

/// F[c][m] = ω^{-cm} / sqrt(2^b), the inverse quantum Fourier transform on the clock.
Eigen::MatrixXcd inverse_qft(int bits) {
    const std::size_t t = std::size_t{1} << bits;
    std::vector<cd> roots(t);
    for (std::size_t k = 0; k < t; ++k) roots[k] = std::polar(1.0, -2 * pi * static_cast<double>(k) / static_cast<double>(t));
    Eigen::MatrixXcd f(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(t));
    const double scale = 1.0 / std::sqrt(static_cast<double>(t));
    for (std::size_t c = 0; c < t; ++c)
        for (std::size_t m = 0; m < t; ++m) f(c, m) = roots[(c * m) % t] * scale;
    return f;
}

/// Statevector QPE: column c of `psi` holds the system amplitude under clock |c>.
/// Applies the controlled powers, then the inverse QFT; returns the system
/// amplitudes per outcome as columns.
Eigen::MatrixXcd run_qpe(Eigen::MatrixXcd psi, const std::vector<Eigen::MatrixXcd>& powers, const Eigen::MatrixXcd& f) {
    const Eigen::Index t = psi.cols();
    for (std::size_t j = 0; j < powers.size(); ++j) {
        std::vector<Eigen::Index> cols;
        for (Eigen::Index c = 0; c < t; ++c)
            if ((c >> j) & 1) cols.push_back(c);
        Eigen::MatrixXcd block(psi.rows(), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t k = 0; k < cols.size(); ++k) block.col(static_cast<Eigen::Index>(k)) = psi.col(cols[k]);
        block = powers[j] * block;
        for (std::size_t k = 0; k < cols.size(); ++k) psi.col(cols[k]) = block.col(static_cast<Eigen::Index>(k));
    }
    return psi * f;
}

}  // namespace

const char* to_string(DensityPath p) noexcept {
    switch (p) {
        case DensityPath::automatic: return "automatic";
        case DensityPath::pure_average: return "pure_average";
        case DensityPath::direct: return "direct";
    }
    return "unknown";
}

double density_defect(const DensityMatrix& d) {
    if (d.rho.size() == 0) return 0.0;
    const double trace = std::abs(d.rho.trace() - cd(1.0, 0.0));
    const double herm = (d.rho - d.rho.adjoint()).cwiseAbs().maxCoeff();
    const Eigen::MatrixXcd h = (d.rho + d.rho.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    const double neg = std::max(0.0, -es.eigenvalues().minCoeff());
    return std::max({trace, herm, neg});
}

QuantumState uniform_state(const SimplicialSet& x, int n) {
    check_degree(x, n, "uniform state");
    const auto size = static_cast<Eigen::Index>(x.size(n));
    if (size == 0) fail(ErrorKind::invalid_input, "uniform state on an empty degree");
    return {n, Eigen::VectorXcd::Constant(size, cd(1.0 / std::sqrt(static_cast<double>(size)), 0.0))};
}

Eigen::MatrixXd grover_operator(const SimplicialSet& x, int n) {
    check_degree(x, n, "Grover operator");
    const auto size = static_cast<Eigen::Index>(x.size(n));
    const Eigen::VectorXd u = Eigen::VectorXd::Constant(size, 1.0 / std::sqrt(static_cast<double>(size)));
    Eigen::MatrixXd w = Eigen::MatrixXd::Identity(size, size);
    Eigen::VectorXd v = -u;
    v[0] += 1.0;
    if (v.squaredNorm() > 1e-30) w -= 2.0 * v * v.transpose() / v.squaredNorm();
    Eigen::MatrixXd d0 = Eigen::MatrixXd::Identity(size, size);
    d0(0, 0) = -1.0;
    Eigen::VectorXd oracle = Eigen::VectorXd::Ones(size);
    for (Index k : nondegenerate(x, n)) oracle[static_cast<Eigen::Index>(k)] = -1.0;
    return -(w * d0 * w.transpose()) * oracle.asDiagonal();
}

GroverResult grover_project(const SimplicialSet& x, int n, std::optional<int> max_iters) {
    check_degree(x, n, "Grover projection");
    const auto good = nondegenerate(x, n);
    if (good.empty()) fail(ErrorKind::no_target, "no non-degenerate simplex in degree " + std::to_string(n));
    if (max_iters && *max_iters < 0) fail(ErrorKind::config, "iteration cap must be non-negative");
    const auto size = static_cast<Eigen::Index>(x.size(n));

    GroverResult r;
    r.ratio = static_cast<double>(size) / static_cast<double>(good.size());
    r.theta = 2.0 * std::asin(1.0 / std::sqrt(r.ratio));
    r.iterations = static_cast<int>(std::floor(pi / 4.0 * std::sqrt(r.ratio)));
    if (max_iters) r.iterations = std::min(r.iterations, *max_iters);

    const Eigen::MatrixXd g = grover_operator(x, n);
    // W|0> is the uniform superposition.
    Eigen::VectorXd psi = Eigen::VectorXd::Constant(size, 1.0 / std::sqrt(static_cast<double>(size)));
    for (int k = 0; k < r.iterations; ++k) psi = g * psi;

    Eigen::VectorXd target = Eigen::VectorXd::Zero(size);
    for (Index k : good) target[static_cast<Eigen::Index>(k)] = 1.0 / std::sqrt(static_cast<double>(good.size()));
    for (Index k : good) r.success_probability += psi[static_cast<Eigen::Index>(k)] * psi[static_cast<Eigen::Index>(k)];
    const double s = std::sin((2 * r.iterations + 1) * r.theta / 2);
    r.analytic_probability = s * s;
    const double overlap = target.dot(psi);
    r.target_fidelity = overlap * overlap;
    r.state = {n, psi.cast<cd>()};
    if (std::abs(r.success_probability - r.analytic_probability) > 1e-10)
        fail(ErrorKind::invariant_violation, "Grover mass " + format_double(r.success_probability) +
                                                 " differs from sin²((2p+1)θ/2) = " +
                                                 format_double(r.analytic_probability));
    return r;
}

CountingResult quantum_count(const SimplicialSet& x, int n, int bits) {
    check_degree(x, n, "quantum counting");
    if (bits < 3 || bits > 12) fail(ErrorKind::config, "counting needs 3 <= bits <= 12");
    const auto good = nondegenerate(x, n);
    if (good.empty()) fail(ErrorKind::no_target, "no non-degenerate simplex in degree " + std::to_string(n));
    const auto size = static_cast<Eigen::Index>(x.size(n));
    const Eigen::Index t = Eigen::Index{1} << bits;

    CountingResult r;
    r.bits = bits;
    r.ratio = static_cast<double>(size) / static_cast<double>(good.size());
    r.theta = 2.0 * std::asin(1.0 / std::sqrt(r.ratio));
    r.bin_width = 2 * pi / static_cast<double>(t);

    std::vector<Eigen::MatrixXcd> powers;
    Eigen::MatrixXd p = grover_operator(x, n);
    for (int j = 0; j < bits; ++j) {
        powers.push_back(p.cast<cd>());
        p = p * p;
    }
    const Eigen::VectorXcd u = uniform_state(x, n).amplitudes / std::sqrt(static_cast<double>(t));
    Eigen::MatrixXcd psi = u.replicate(1, t);
    const Eigen::MatrixXcd out = run_qpe(std::move(psi), powers, inverse_qft(bits));

    r.distribution.resize(static_cast<std::size_t>(t));
    for (Eigen::Index m = 0; m < t; ++m) r.distribution[static_cast<std::size_t>(m)] = out.col(m).squaredNorm();
    // Mode, with ties (to 1e-12) resolved towards the smaller outcome.
    for (std::size_t m = 1; m < r.distribution.size(); ++m)
        if (r.distribution[m] > r.distribution[r.outcome] + 1e-12) r.outcome = m;
    const double phi = static_cast<double>(r.outcome) / static_cast<double>(t);
    r.theta_estimate = 2 * pi * std::min(phi, 1.0 - phi);
    const double s = std::sin(r.theta_estimate / 2);
    r.ratio_estimate = s == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / (s * s);
    return r;
}

IntMatrix direct_sum_laplacian(const SimplicialSet& x) {
    const ChainComplexView c = normalized_complex(x);
    std::vector<std::size_t> offsets{0};
    for (int n = 0; n <= c.cutoff(); ++n) offsets.push_back(offsets.back() + c.dim(n));
    std::vector<Eigen::Triplet<int64_t>> entries;
    for (int n = 0; n <= c.cutoff(); ++n) {
        const IntMatrix h = complex_laplacian(c, n);
        for (Eigen::Index k = 0; k < h.outerSize(); ++k)
            for (IntMatrix::InnerIterator it(h, k); it; ++it)
                entries.emplace_back(static_cast<Eigen::Index>(offsets[n]) + it.row(),
                                     static_cast<Eigen::Index>(offsets[n]) + it.col(), it.value());
    }
    const auto dim = static_cast<Eigen::Index>(offsets.back());
    IntMatrix h(dim, dim);
    h.setFromTriplets(entries.begin(), entries.end());
    return h;
}

DiracOperator dirac_operator(const SimplicialSet& x) {
    const ChainComplexView c = normalized_complex(x);
    DiracOperator b;
    b.offsets.push_back(0);
    for (int n = 0; n <= c.cutoff(); ++n) b.offsets.push_back(b.offsets.back() + c.dim(n));
    std::vector<Eigen::Triplet<int64_t>> entries;
    for (int n = 1; n <= c.cutoff(); ++n) {
        const IntMatrix& q = c.q[n].matrix;
        const auto row0 = static_cast<Eigen::Index>(b.offsets[n - 1]);
        const auto col0 = static_cast<Eigen::Index>(b.offsets[n]);
        for (Eigen::Index k = 0; k < q.outerSize(); ++k)
            for (IntMatrix::InnerIterator it(q, k); it; ++it) {
                entries.emplace_back(row0 + it.row(), col0 + it.col(), it.value());
                entries.emplace_back(col0 + it.col(), row0 + it.row(), it.value());
            }
    }
    const auto dim = static_cast<Eigen::Index>(b.dim());
    b.matrix = IntMatrix(dim, dim);
    b.matrix.setFromTriplets(entries.begin(), entries.end());
    if (!equal(IntMatrix(b.matrix * b.matrix), direct_sum_laplacian(x)))
        fail(ErrorKind::invariant_violation, "Dirac operator does not square to the direct-sum Laplacian");
    return b;
}

Eigen::MatrixXcd evolve(const Eigen::MatrixXd& b, double tau) {
    if (b.rows() != b.cols()) fail(ErrorKind::invalid_input, "evolve needs a square operator");
    if (b.size() > 0 && (b - b.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        fail(ErrorKind::invalid_input, "evolve needs a symmetric operator");
    if (b.size() == 0) return Eigen::MatrixXcd(0, 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    if (es.info() != Eigen::Success) fail(ErrorKind::invariant_violation, "evolve: eigen-solver failed");
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) phases[k] = std::polar(1.0, tau * es.eigenvalues()[k]);
    const Eigen::MatrixXcd v = es.eigenvectors().cast<cd>();
    return v * phases.asDiagonal() * v.adjoint();
}

double phase_safe_tau(const Eigen::VectorXd& eigenvalues, double tol, int clock_bits) {
    double lmax = 0.0;
    double mu = std::numeric_limits<double>::infinity();
    double mu_signed = 0.0;
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
        const double a = std::abs(eigenvalues[k]);
        if (a < tol) continue;
        lmax = std::max(lmax, a);
        if (a < mu) {
            mu = a;
            mu_signed = eigenvalues[k];
        }
    }
    if (lmax == 0.0) return 1.0;
    const double ratio = mu / lmax;
    const double distance = ratio / (1.0 + ratio);
    const double need = 2.0 / std::ldexp(1.0, clock_bits);
    if (distance < need)
        fail(ErrorKind::config, "eigenvalue " + format_double(mu_signed) + " sits at phase distance " +
                                    format_double(distance) + " from 0, below 2/2^" + std::to_string(clock_bits) +
                                    "; add clock bits");
    return 2 * pi / (1.0 + ratio) / lmax;
}

QPEResult qpe_betti(const SimplicialSet& x, int n, const QPEConfig& cfg, DensityPath path) {
    check_degree(x, n, "QPE Betti");
    if (cfg.clock_bits < 1 || cfg.clock_bits > 12) fail(ErrorKind::config, "QPE needs 1 <= clock bits <= 12");
    if (cfg.shots == 0) fail(ErrorKind::config, "QPE needs at least one shot");
    if (cfg.tau && !(*cfg.tau > 0.0)) fail(ErrorKind::config, "QPE needs τ > 0");

    const ChainComplexView c = normalized_complex(x);
    QPEResult r;
    r.degree = n;
    r.clock_bits = cfg.clock_bits;
    r.nondegenerate = c.dim(n);
    r.truncation_sensitive = n == x.cutoff();
    if (r.nondegenerate == 0) fail(ErrorKind::no_target, "no non-degenerate simplex in degree " + std::to_string(n));

    const DiracOperator dirac = dirac_operator(x);
    const Eigen::MatrixXd b = detail::to_dense(dirac.matrix);
    const detail::Spectrum spec = detail::symmetric_spectrum(b, "Dirac operator");
    const Eigen::Index dim = b.rows();

    // Phase-grid safety.
    const double need = 2.0 / std::ldexp(1.0, cfg.clock_bits);
    if (cfg.tau) {
        r.tau = *cfg.tau;
        for (Eigen::Index k = 0; k < spec.values.size(); ++k)
            if (std::abs(spec.values[k]) >= spec.tol && phase_distance(r.tau, spec.values[k]) < need)
                fail(ErrorKind::config, "eigenvalue " + format_double(spec.values[k]) + " has eigenphase within 2/2^" +
                                            std::to_string(cfg.clock_bits) + " of 0 at τ = " + format_double(r.tau));
    } else {
        r.tau = phase_safe_tau(spec.values, spec.tol, cfg.clock_bits);
    }
    r.min_phase_distance = 1.0;
    for (Eigen::Index k = 0; k < spec.values.size(); ++k)
        if (std::abs(spec.values[k]) >= spec.tol)
            r.min_phase_distance = std::min(r.min_phase_distance, phase_distance(r.tau, spec.values[k]));

    const detail::Spectrum lap =
        detail::symmetric_spectrum(detail::to_dense(complex_laplacian(c, n)), "normalized Laplacian");
    r.kernel_dim = static_cast<std::size_t>(lap.kernel_dim);
    r.kernel_fraction = static_cast<double>(r.kernel_dim) / static_cast<double>(r.nondegenerate);

    const auto offset = static_cast<Eigen::Index>(dirac.offsets[n]);
    const auto count = static_cast<Eigen::Index>(r.nondegenerate);
    const double weight = 1.0 / static_cast<double>(count);
    const Eigen::MatrixXd kernel = spec.kernel_projector();
    double w_ker = 0.0;
    for (Eigen::Index k = 0; k < count; ++k) w_ker += weight * kernel(offset + k, offset + k);
    if (std::abs(w_ker - r.kernel_fraction) > 1e-9)
        fail(ErrorKind::invariant_violation, "kernel weight of the Dirac operator " + format_double(w_ker) +
                                                 " differs from dim ker / |nondeg| = " + format_double(r.kernel_fraction));
    const double t = std::ldexp(1.0, cfg.clock_bits);
    if (spec.kernel_dim < dim) {
        const double s = std::sin(pi * r.min_phase_distance);
        r.leakage_bound = std::max(0.0, 1.0 - w_ker) / (t * t * s * s);
    }

    r.path = path == DensityPath::automatic ? (count <= 64 ? DensityPath::pure_average : DensityPath::direct) : path;
    const auto outcomes = static_cast<Eigen::Index>(t);
    r.distribution.assign(static_cast<std::size_t>(outcomes), 0.0);
    Eigen::MatrixXcd post = Eigen::MatrixXcd::Zero(dim, dim);

    if (r.path == DensityPath::pure_average) {
        std::vector<Eigen::MatrixXcd> powers;
        for (int j = 0; j < cfg.clock_bits; ++j) powers.push_back(evolve(b, std::ldexp(r.tau, j)));
        const Eigen::MatrixXcd f = inverse_qft(cfg.clock_bits);
        for (Eigen::Index k = 0; k < count; ++k) {
            Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(dim, outcomes);
            psi.row(offset + k).setConstant(cd(1.0 / std::sqrt(t), 0.0));
            const Eigen::MatrixXcd out = run_qpe(std::move(psi), powers, f);
            for (Eigen::Index m = 0; m < outcomes; ++m)
                r.distribution[static_cast<std::size_t>(m)] += weight * out.col(m).squaredNorm();
            post += weight * out.col(0) * out.col(0).adjoint();
        }
    } else {
        // Measurement operators M_m = V diag(f_m) V^T with
        // f_m(λ) = 2^{-b} Σ_c exp(2πi c (τλ/2π - m/2^b)).
        Eigen::MatrixXd rho0 = Eigen::MatrixXd::Zero(dim, dim);
        for (Eigen::Index k = 0; k < count; ++k) rho0(offset + k, offset + k) = weight;
        const Eigen::MatrixXd& v = spec.vectors;
        const Eigen::VectorXd occupation = (v.transpose() * rho0 * v).diagonal();
        Eigen::VectorXcd f0(dim);
        for (Eigen::Index e = 0; e < dim; ++e) {
            const double phi = r.tau * spec.values[e] / (2 * pi);
            for (Eigen::Index m = 0; m < outcomes; ++m) {
                cd sum = 0.0;
                for (Eigen::Index cc = 0; cc < outcomes; ++cc)
                    sum += std::polar(1.0, 2 * pi * static_cast<double>(cc) * (phi - static_cast<double>(m) / t));
                sum /= t;
                r.distribution[static_cast<std::size_t>(m)] += std::norm(sum) * occupation[e];
                if (m == 0) f0[e] = sum;
            }
        }
        const Eigen::MatrixXcd vc = v.cast<cd>();
        const Eigen::MatrixXcd m0 = vc * f0.asDiagonal() * vc.adjoint();
        post = m0 * rho0.cast<cd>() * m0.adjoint();
    }

    double total = 0.0;
    for (double p : r.distribution) total += p;
    if (std::abs(total - 1.0) > 1e-10)
        fail(ErrorKind::invariant_violation, "QPE outcome distribution sums to " + format_double(total));
    r.p_zero = r.distribution[0];
    if (r.p_zero < w_ker - 1e-10 || r.p_zero > w_ker + r.leakage_bound + 1e-10)
        fail(ErrorKind::invariant_violation, "P(λ=0) = " + format_double(r.p_zero) + " outside [" + format_double(w_ker) +
                                                 ", " + format_double(w_ker + r.leakage_bound) + "]");

    if (r.p_zero > 1e-15) {
        r.post_state.rho = post / r.p_zero;
        const double inside = (kernel.cast<cd>() * r.post_state.rho).trace().real();
        r.support_error = std::max(0.0, 1.0 - inside);
    }
    r.support_ok = r.support_error <= 1e-8;

    // Seeded shots by inverse CDF on u = (rng() >> 11) 2^-53.
    std::mt19937_64 rng(cfg.seed);
    std::vector<double> cdf(r.distribution.size());
    double acc = 0.0;
    for (std::size_t m = 0; m < cdf.size(); ++m) cdf[m] = acc += r.distribution[m];
    std::vector<std::size_t> counts(cdf.size(), 0);
    for (std::size_t s = 0; s < cfg.shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) --it;
        ++counts[static_cast<std::size_t>(it - cdf.begin())];
    }
    for (std::size_t m = 0; m < counts.size(); ++m)
        if (counts[m] > 0) r.histogram.emplace_back(m, counts[m]);
    r.p_zero_sampled = static_cast<double>(counts[0]) / static_cast<double>(cfg.shots);
    r.betti_estimate = static_cast<std::size_t>(std::llround(r.p_zero_sampled * static_cast<double>(r.nondegenerate)));
    return r;
}

}  // namespace simphil
