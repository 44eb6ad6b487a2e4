#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "simphil/error.hpp"
#include "simphil/qsim.hpp"

using namespace simphil;

namespace {

constexpr double pi = M_PI;

Eigen::MatrixXd dense(const IntMatrix& m) { return Eigen::MatrixXd(m.cast<double>()); }

}  // namespace

TEST(UniformState, Amplitudes) {
    const auto p = uniform_state(fixtures::point(2), 0);
    ASSERT_EQ(p.amplitudes.size(), 1);
    EXPECT_NEAR(std::abs(p.amplitudes[0] - std::complex<double>(1.0, 0.0)), 0.0, 1e-15);
    const auto z = uniform_state(fixtures::nerve_cyclic(2, 3), 2);
    ASSERT_EQ(z.amplitudes.size(), 4);
    for (Eigen::Index k = 0; k < 4; ++k) EXPECT_NEAR(z.amplitudes[k].real(), 0.5, 1e-15);
    for (const auto& f : fixtures::all())
        for (int n = 0; n <= f.set.cutoff(); ++n) EXPECT_NEAR(uniform_state(f.set, n).amplitudes.norm(), 1.0, 1e-12);
}

TEST(Grover, TrivialAndQuarterFraction) {
    const auto p = grover_project(fixtures::torus(3), 0);
    EXPECT_EQ(p.iterations, 0);
    EXPECT_NEAR(p.success_probability, 1.0, 1e-12);
    const auto z = grover_project(fixtures::nerve_cyclic(2, 3), 2);
    EXPECT_DOUBLE_EQ(z.ratio, 4.0);
    EXPECT_NEAR(z.theta, pi / 3, 1e-12);
    EXPECT_EQ(z.iterations, 1);
    EXPECT_NEAR(z.success_probability, 1.0, 1e-12);
    EXPECT_NEAR(z.target_fidelity, 1.0, 1e-12);
}

TEST(Grover, AnalyticFormulaOnAllFixtures) {
    for (const auto& f : fixtures::all())
        for (int n = 0; n <= f.set.cutoff(); ++n) {
            if (nondegenerate(f.set, n).empty()) {
                EXPECT_THROW(grover_project(f.set, n), Error);
                continue;
            }
            const auto r = grover_project(f.set, n);
            if (r.ratio > 64) continue;
            const double s = std::sin((2 * r.iterations + 1) * std::asin(1.0 / std::sqrt(r.ratio)));
            EXPECT_NEAR(r.success_probability, s * s, 1e-10) << f.name << " n=" << n;
            EXPECT_EQ(r.iterations, static_cast<int>(std::floor(pi / 4 * std::sqrt(r.ratio))));
            EXPECT_NEAR(r.state.amplitudes.norm(), 1.0, 1e-12);
        }
}

TEST(Grover, IterationCap) {
    const auto r = grover_project(fixtures::nerve_cyclic(2, 3), 2, 0);
    EXPECT_EQ(r.iterations, 0);
    EXPECT_NEAR(r.success_probability, 0.25, 1e-12);
}

TEST(Grover, OperatorIsOrthogonal) {
    const Eigen::MatrixXd g = grover_operator(fixtures::torus(3), 2);
    EXPECT_TRUE((g.transpose() * g).isApprox(Eigen::MatrixXd::Identity(g.rows(), g.cols()), 1e-12));
}

TEST(Counting, RatioOneIsExact) {
    const auto r = quantum_count(fixtures::torus(3), 0, 3);
    EXPECT_EQ(r.outcome, 4u);
    EXPECT_NEAR(r.theta_estimate, pi, 1e-12);
    EXPECT_NEAR(r.ratio_estimate, 1.0, 1e-12);
    EXPECT_NEAR(r.distribution[4], 1.0, 1e-12);
}

TEST(Counting, DistributionMatchesClosedForm) {
    const auto x = fixtures::nerve_cyclic(2, 3);
    for (int bits = 3; bits <= 8; ++bits) {
        const auto r = quantum_count(x, 2, bits);
        const double phi = r.theta / (2 * pi);
        for (std::size_t m = 0; m < r.distribution.size(); ++m) {
            const double expected =
                0.5 * oracles::qpe_outcome(phi, static_cast<unsigned>(bits), m) +
                0.5 * oracles::qpe_outcome(1.0 - phi, static_cast<unsigned>(bits), m);
            EXPECT_NEAR(r.distribution[m], expected, 1e-10) << "bits=" << bits << " m=" << m;
        }
        EXPECT_LE(std::abs(r.theta_estimate - r.theta), r.bin_width + 1e-12);
    }
}

TEST(Counting, ErrorShrinksWithBits) {
    const auto x = fixtures::simplex(2, 2);
    double previous = 1e9;
    for (int bits = 3; bits <= 9; ++bits) {
        const auto r = quantum_count(x, 1, bits);
        EXPECT_LE(std::abs(r.theta_estimate - r.theta), r.bin_width + 1e-12);
        EXPECT_LT(r.bin_width, previous);
        previous = r.bin_width;
    }
    EXPECT_THROW(quantum_count(x, 1, 2), Error);
}

TEST(Dirac, PointIsZero) {
    const auto b = dirac_operator(fixtures::point(0));
    EXPECT_EQ(b.dim(), 1u);
    EXPECT_TRUE(is_zero(b.matrix));
}

TEST(Dirac, SquaresToLaplacianAndSpectrumIsSymmetric) {
    for (const auto& f : fixtures::all()) {
        const auto b = dirac_operator(f.set);
        EXPECT_TRUE(equal(b.matrix, transpose(b.matrix)));
        EXPECT_TRUE(equal(IntMatrix(b.matrix * b.matrix), direct_sum_laplacian(f.set))) << f.name;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(b.matrix));
        Eigen::VectorXd v = es.eigenvalues();
        Eigen::VectorXd neg = -v.reverse();
        EXPECT_TRUE(v.isApprox(neg, 1e-9) || (v - neg).norm() < 1e-9) << f.name;
    }
}

TEST(Dirac, WorkedNerveInstance) {
    const auto x = fixtures::nerve_cyclic(2, 2);
    const auto b = dirac_operator(x);
    EXPECT_EQ(b.offsets, (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(b.matrix.coeff(0, 1), 0);
    EXPECT_EQ(b.matrix.coeff(1, 2), 2);
    EXPECT_EQ(b.matrix.coeff(2, 1), 2);
}

TEST(Evolve, GroupLawAndKernel) {
    const auto x = fixtures::torus(3);
    const Eigen::MatrixXd b = dense(dirac_operator(x).matrix);
    const auto n = b.rows();
    EXPECT_TRUE(evolve(b, 0.0).isApprox(Eigen::MatrixXcd::Identity(n, n), 1e-12));
    const Eigen::MatrixXcd u = evolve(b, 0.7);
    EXPECT_LT((u * evolve(b, -0.7) - Eigen::MatrixXcd::Identity(n, n)).norm(), 1e-10);
    EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm(), 1e-10);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::VectorXcd v = es.eigenvectors().col(k).cast<std::complex<double>>();
        const std::complex<double> phase = std::polar(1.0, 0.7 * es.eigenvalues()[k]);
        EXPECT_LT((u * v - phase * v).norm(), 1e-10);
    }
    Eigen::MatrixXd asym = b;
    asym(0, 1) += 1.0;
    EXPECT_THROW(evolve(asym, 1.0), Error);
}

TEST(QPE, Point) {
    const auto r = qpe_betti(fixtures::point(2), 0, QPEConfig{8, std::nullopt, 1000, 1});
    EXPECT_NEAR(r.p_zero, 1.0, 1e-12);
    EXPECT_EQ(r.betti_estimate, 1u);
    EXPECT_DOUBLE_EQ(r.tau, 1.0);
}

TEST(QPE, WorkedNerveInstance) {
    const auto x = fixtures::nerve_cyclic(2, 2);
    const auto r = qpe_betti(x, 1, QPEConfig{8, std::nullopt, 10000, 42});
    EXPECT_NEAR(r.tau, pi / 2, 1e-12);
    EXPECT_EQ(r.kernel_dim, 0u);
    EXPECT_LE(r.p_zero, r.leakage_bound + 1e-12);
    EXPECT_EQ(r.betti_estimate, 0u);
    EXPECT_FALSE(r.truncation_sensitive);
    EXPECT_TRUE(qpe_betti(x, 2, QPEConfig{}).truncation_sensitive);
}

TEST(QPE, TorusEdges) {
    const auto x = fixtures::torus(3);
    const QPEConfig cfg{8, std::nullopt, 10000, 42};
    const auto r = qpe_betti(x, 1, cfg);
    EXPECT_EQ(r.nondegenerate, 3u);
    EXPECT_EQ(r.kernel_dim, 2u);
    EXPECT_LE(std::abs(r.p_zero - 2.0 / 3.0), r.leakage_bound + 1e-12);
    const double sigma = std::sqrt(r.p_zero * (1 - r.p_zero) / 10000.0);
    EXPECT_LE(std::abs(r.p_zero_sampled - r.p_zero), 3 * sigma);
    EXPECT_EQ(r.betti_estimate, 2u);
    EXPECT_TRUE(r.support_ok);
    EXPECT_LE(density_defect(r.post_state), 1e-12);
    const auto again = qpe_betti(x, 1, cfg);
    EXPECT_EQ(again.histogram, r.histogram);
}

TEST(QPE, DensityPathsAgree) {
    for (const auto& x : {fixtures::torus(3), fixtures::sphere2(3), fixtures::simplex(2, 3)}) {
        for (int n = 0; n <= 2; ++n) {
            const QPEConfig cfg{6, std::nullopt, 100, 3};
            const auto a = qpe_betti(x, n, cfg, DensityPath::pure_average);
            const auto b = qpe_betti(x, n, cfg, DensityPath::direct);
            ASSERT_EQ(a.distribution.size(), b.distribution.size());
            for (std::size_t m = 0; m < a.distribution.size(); ++m) EXPECT_NEAR(a.distribution[m], b.distribution[m], 1e-12);
            if (a.post_state.rho.size() > 0) {
                EXPECT_LT((a.post_state.rho - b.post_state.rho).cwiseAbs().maxCoeff(), 1e-12);
                EXPECT_LE(density_defect(a.post_state), 1e-12);
                EXPECT_LE(density_defect(b.post_state), 1e-12);
            }
        }
    }
}

TEST(QPE, LeakageBoundShrinksWithClockBits) {
    const auto x = fixtures::simplex(2, 3);
    double previous = 2.0;
    for (int bits = 4; bits <= 9; ++bits) {
        const auto r = qpe_betti(x, 1, QPEConfig{bits, std::nullopt, 10, 0});
        EXPECT_LE(r.leakage_bound, previous);
        EXPECT_GE(r.p_zero, r.kernel_fraction - 1e-12);
        EXPECT_LE(r.p_zero, r.kernel_fraction + r.leakage_bound + 1e-12);
        previous = r.leakage_bound;
    }
}

TEST(QPE, ConfigErrors) {
    const auto x = fixtures::torus(3);
    try {
        qpe_betti(x, 1, QPEConfig{1, std::nullopt, 10, 0});
        FAIL() << "expected config error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::config);
        EXPECT_NE(std::string(e.what()).find("eigenvalue"), std::string::npos);
    }
    EXPECT_THROW(qpe_betti(x, 1, QPEConfig{8, 2 * pi / std::sqrt(6.0), 10, 0}), Error);
    EXPECT_THROW(qpe_betti(x, 1, QPEConfig{8, -1.0, 10, 0}), Error);
    EXPECT_THROW(qpe_betti(x, 1, QPEConfig{8, std::nullopt, 0, 0}), Error);
    EXPECT_THROW(qpe_betti(x, 3, QPEConfig{}), Error);
}

TEST(QPE, PhaseSafeTau) {
    Eigen::VectorXd ev(4);
    ev << -2.0, 0.0, 1.0, 2.0;
    const double tau = phase_safe_tau(ev, 1e-9, 4);
    EXPECT_NEAR(tau, 2 * pi * (2.0 / 3.0) / 2.0, 1e-12);
    EXPECT_THROW(phase_safe_tau(ev, 1e-9, 2), Error);
    EXPECT_DOUBLE_EQ(phase_safe_tau(Eigen::VectorXd::Zero(3), 1e-9, 2), 1.0);
}
