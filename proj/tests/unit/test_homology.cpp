#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "simphil/error.hpp"
#include "simphil/homology.hpp"

using namespace simphil;

namespace {

/// Q_{D,n} assembled from the face tables.
oracles::Dense boundary_oracle(const SimplicialSet& x, int n) {
    oracles::Dense q(x.size(n - 1), std::vector<long long>(x.size(n), 0));
    for (Index s = 0; s < x.size(n); ++s)
        for (int i = 0; i <= n; ++i) q[x.face(n, i, s)][s] += (i % 2 == 0) ? 1 : -1;
    return q;
}

/// β_n over ℚ from oracle ranks, n <= N-1.
std::size_t betti_oracle(const SimplicialSet& x, int n) {
    const std::size_t down = n == 0 ? 0 : oracles::rank(boundary_oracle(x, n));
    const std::size_t up = oracles::rank(boundary_oracle(x, n + 1));
    return x.size(n) - down - up;
}

IntMatrix q(const SimplicialSet& x, BoundaryKind k, int n) { return boundary_operator(x, k, n).matrix; }

std::vector<std::size_t> betti_table(const SimplicialSet& x, int top, BettiMethod m) {
    std::vector<std::size_t> out;
    for (int n = 0; n <= top; ++n) out.push_back(betti(x, n, m).value);
    return out;
}

}  // namespace

TEST(Boundary, PointAndTorusRanks) {
    EXPECT_TRUE(is_zero(q(fixtures::point(2), BoundaryKind::QD, 1)));
    const auto t = fixtures::torus(3);
    const auto c = normalized_complex(t);
    EXPECT_EQ(rational_rank(c.q[1].matrix), 0u);
    EXPECT_EQ(rational_rank(c.q[2].matrix), 1u);
    // The full complex also sees s_0 v = d_0 s_0 a - d_1 s_0 a + d_2 s_0 a.
    EXPECT_EQ(rational_rank(q(t, BoundaryKind::QD, 1)), 0u);
    EXPECT_EQ(rational_rank(q(t, BoundaryKind::QD, 2)), 2u);
    EXPECT_EQ(oracles::rank(boundary_oracle(t, 2)), 2u);
    EXPECT_THROW(boundary_operator(t, BoundaryKind::QD, 0), Error);
    EXPECT_THROW(boundary_operator(t, BoundaryKind::QS, 3), Error);
}

TEST(Boundary, HomologicalRelations) {
    for (const auto& f : fixtures::all()) {
        const auto& x = f.set;
        const int top = x.cutoff();
        for (int n = 2; n <= top; ++n)
            EXPECT_TRUE(is_zero(IntMatrix(q(x, BoundaryKind::QD, n - 1) * q(x, BoundaryKind::QD, n)))) << f.name;
        for (int n = 0; n + 2 <= top; ++n)
            EXPECT_TRUE(is_zero(IntMatrix(q(x, BoundaryKind::QS, n + 1) * q(x, BoundaryKind::QS, n)))) << f.name;
        for (int n = 1; n + 1 <= top; ++n)
            EXPECT_TRUE(is_zero(IntMatrix(q(x, BoundaryKind::QS, n - 1) * q(x, BoundaryKind::QD, n) +
                                          q(x, BoundaryKind::QD, n + 1) * q(x, BoundaryKind::QS, n))))
                << f.name << " n=" << n;
    }
}

TEST(Boundary, RationalRankMatchesOracle) {
    for (const auto& f : fixtures::all())
        for (int n = 1; n <= f.set.cutoff(); ++n)
            EXPECT_EQ(rational_rank(q(f.set, BoundaryKind::QD, n)), oracles::rank(boundary_oracle(f.set, n))) << f.name;
}

TEST(Laplacians, DegeneracyLaplacianIsPositiveDiagonal) {
    for (const auto& f : fixtures::all()) {
        const auto& x = f.set;
        for (int n = 0; n < x.cutoff(); ++n) {
            const IntMatrix h = hodge_laplacian(x, LaplacianKind::SS, n).matrix;
            for (Eigen::Index c = 0; c < h.cols(); ++c) {
                long long count = 0;
                for (int i = 0; i < n; ++i)
                    count += static_cast<long long>(preimage_set(x, OperatorKind::degeneracy, n - 1, i, static_cast<Index>(c)).size());
                EXPECT_EQ(h.coeff(c, c), n + 1 - count);
                EXPECT_GE(h.coeff(c, c), 1);
                for (IntMatrix::InnerIterator it(h, c); it; ++it)
                    if (it.row() != c) EXPECT_EQ(it.value(), 0);
            }
        }
    }
}

TEST(Laplacians, FaceLaplacianSymmetric) {
    for (const auto& f : fixtures::all())
        for (int n = 0; n <= f.set.cutoff(); ++n) {
            const IntMatrix h = hodge_laplacian(f.set, LaplacianKind::DD, n).matrix;
            EXPECT_TRUE(equal(h, transpose(h)));
        }
}

TEST(Laplacians, DecompositionsHoldEverywhere) {
    for (const auto& f : fixtures::all(4))
        for (int n = 0; n <= f.set.cutoff(); ++n) {
            const auto r = laplacian_decomposition_check(f.set, n);
            EXPECT_TRUE(r.ok()) << f.name << " n=" << n << ": " << (r.ok() ? "" : r.failures.front());
        }
}

TEST(Laplacians, UpsilonVanishing) {
    const auto z2 = fixtures::nerve_cyclic(2, 4);
    EXPECT_TRUE(is_zero(upsilon(z2, DefectKind::DD, 0).matrix));
    for (int n = 1; n <= 3; ++n) {
        EXPECT_TRUE(is_zero(upsilon(z2, DefectKind::DD, n).matrix));
        EXPECT_TRUE(equal(hodge_laplacian(z2, LaplacianKind::DD, n).matrix, h0_operator(z2, LaplacianKind::DD, n).matrix));
    }
    const auto tri = build_from_complex(OrderedComplexTable::from_facets(4, {{0, 1, 2}, {1, 2, 3}}), 4);
    bool dd_nonzero = false;
    for (int n = 1; n <= 3; ++n) dd_nonzero = dd_nonzero || !is_zero(upsilon(tri, DefectKind::DD, n).matrix);
    EXPECT_TRUE(dd_nonzero);
    for (int n = 0; n <= 2; ++n) EXPECT_TRUE(is_zero(upsilon(tri, DefectKind::DS, n).matrix));
    for (int n = 2; n <= 4; ++n) EXPECT_TRUE(is_zero(upsilon(tri, DefectKind::SD, n).matrix));
}

TEST(Betti, FrozenTables) {
    EXPECT_EQ(betti_table(fixtures::point(3), 2, BettiMethod::exact_rank), (std::vector<std::size_t>{1, 0, 0}));
    EXPECT_EQ(betti_table(fixtures::simplex(3, 4), 3, BettiMethod::exact_rank), (std::vector<std::size_t>{1, 0, 0, 0}));
    EXPECT_EQ(betti_table(fixtures::sphere2(3), 2, BettiMethod::exact_rank), (std::vector<std::size_t>{1, 0, 1}));
    EXPECT_EQ(betti_table(fixtures::torus(3), 2, BettiMethod::exact_rank), (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_EQ(betti_table(fixtures::nerve_cyclic(2, 4), 3, BettiMethod::exact_rank),
              (std::vector<std::size_t>{1, 0, 0, 0}));
}

TEST(Betti, MethodsAgreeWithOracle) {
    for (const auto& f : fixtures::all()) {
        const auto& x = f.set;
        for (int n = 0; n < x.cutoff(); ++n) {
            const std::size_t expected = betti_oracle(x, n);
            for (BettiMethod m : {BettiMethod::exact_rank, BettiMethod::hodge, BettiMethod::normalized_hodge}) {
                const BettiResult r = betti(x, n, m);
                EXPECT_EQ(r.value, expected) << f.name << " n=" << n << " " << to_string(m);
                EXPECT_EQ(r.valid_up_to, x.cutoff() - 1);
                EXPECT_FALSE(r.truncation_sensitive);
            }
        }
        EXPECT_TRUE(betti(x, x.cutoff(), BettiMethod::hodge).truncation_sensitive);
    }
}

TEST(Betti, DisjointUnionAddsComponents) {
    const auto a = fixtures::torus(3), b = fixtures::sphere2(3);
    const auto u = disjoint_union(a, b);
    for (int n = 0; n <= 2; ++n)
        EXPECT_EQ(betti(u, n, BettiMethod::normalized_hodge).value,
                  betti(a, n, BettiMethod::exact_rank).value + betti(b, n, BettiMethod::exact_rank).value);
}

TEST(Betti, TruncationInvariance) {
    const auto x = fixtures::sphere2(4);
    for (int cut = 1; cut <= 4; ++cut) {
        const auto t = truncate(x, cut);
        for (int n = 0; n < cut; ++n)
            EXPECT_EQ(betti(t, n, BettiMethod::exact_rank).value, betti(x, n, BettiMethod::exact_rank).value);
    }
}

TEST(Betti, EulerCharacteristic) {
    for (const auto& f : fixtures::all(4)) {
        const auto& x = f.set;
        if (!nondegenerate(x, 3).empty() || !nondegenerate(x, 4).empty()) continue;
        long long chi_cells = 0, chi_betti = 0;
        for (int n = 0; n <= 3; ++n) {
            const long long sign = n % 2 == 0 ? 1 : -1;
            chi_cells += sign * static_cast<long long>(nondegenerate(x, n).size());
            chi_betti += sign * static_cast<long long>(betti(x, n, BettiMethod::exact_rank).value);
        }
        EXPECT_EQ(chi_cells, chi_betti) << f.name;
    }
}

TEST(Normalized, DimensionsAndRelations) {
    const auto t = fixtures::torus(3);
    const auto c = normalized_complex(t);
    EXPECT_EQ(c.dim(0), 1u);
    EXPECT_EQ(c.dim(1), 3u);
    EXPECT_EQ(c.dim(2), 2u);
    EXPECT_EQ(c.dim(3), 0u);
    for (const auto& f : fixtures::all()) {
        const auto n = normalized_complex(f.set);
        const auto p = normalized_complex_via_projector(f.set);
        for (int k = 0; k <= f.set.cutoff(); ++k) EXPECT_EQ(n.dim(k), nondegenerate(f.set, k).size());
        for (int k = 1; k <= f.set.cutoff(); ++k) EXPECT_TRUE(equal(n.q[k].matrix, p.q[k].matrix)) << f.name;
        for (int k = 2; k <= f.set.cutoff(); ++k) EXPECT_TRUE(is_zero(IntMatrix(n.q[k - 1].matrix * n.q[k].matrix)));
        // (1 - Π_{n-1}) Q_D Π_n = 0.
        for (int k = 1; k <= f.set.cutoff(); ++k) {
            const IntMatrix pi_low = auxiliary_operator(f.set, AuxKind::Pi, k - 1).matrix;
            const IntMatrix pi = auxiliary_operator(f.set, AuxKind::Pi, k).matrix;
            const IntMatrix lhs = (identity_matrix(f.set.size(k - 1)) - pi_low) * q(f.set, BoundaryKind::QD, k) * pi;
            EXPECT_TRUE(is_zero(lhs)) << f.name;
        }
    }
}

TEST(Normalized, ChainEquivalence) {
    const auto p = chain_equivalence_check(fixtures::point(2), 1);
    EXPECT_TRUE(p.ok());
    for (const auto& f : fixtures::all()) {
        const auto r = chain_equivalence_check(f.set, f.set.cutoff() - 1);
        EXPECT_TRUE(r.ok()) << f.name << ": " << (r.ok() ? "" : r.failures.front());
        EXPECT_GT(r.checks, 0u);
    }
    EXPECT_THROW(chain_equivalence_check(fixtures::torus(3), 3), Error);
}

TEST(Hodge, ResolutionOfIdentity) {
    for (const auto& f : fixtures::all())
        for (auto basis : {ChainComplexView::Basis::full, ChainComplexView::Basis::normalized})
            for (int n = 0; n < f.set.cutoff(); ++n) {
                const auto r = hodge_resolution_check(f.set, basis, n);
                EXPECT_TRUE(r.ok()) << f.name << " n=" << n << ": " << (r.ok() ? "" : r.failures.front());
                EXPECT_LT(r.max_residual, 1e-10);
            }
}

TEST(InducedMaps, IdentityConstantAndComposite) {
    const auto t = fixtures::torus(3);
    const Eigen::MatrixXd id = induced_homology_map(identity_morphism(t), t, t, 1);
    EXPECT_TRUE(id.isApprox(Eigen::MatrixXd::Identity(2, 2), 1e-10));
    const auto pt = fixtures::point(3);
    const Eigen::MatrixXd c = induced_homology_map(constant_morphism(t, pt, 0), t, pt, 1);
    EXPECT_EQ(c.rows(), 0);
    EXPECT_EQ(c.cols(), 2);
    const Eigen::MatrixXd c0 = induced_homology_map(constant_morphism(t, pt, 0), t, pt, 0);
    EXPECT_NEAR(std::abs(c0(0, 0)), 1.0, 1e-10);

    const FiniteGroup z4 = FiniteGroup::cyclic(4), z2 = FiniteGroup::cyclic(2), z1 = FiniteGroup::cyclic(1);
    const auto a = build_nerve_group(z4, 3), b = build_nerve_group(z2, 3), e = build_nerve_group(z1, 3);
    const auto phi = nerve_group_morphism(z4, z2, {0, 1, 0, 1}, a, b);
    const auto psi = nerve_group_morphism(z2, z1, {0, 0}, b, e);
    for (int n = 0; n <= 2; ++n) {
        const Eigen::MatrixXd lhs = induced_homology_map(compose(phi, psi), a, e, n);
        const Eigen::MatrixXd rhs = induced_homology_map(psi, b, e, n) * induced_homology_map(phi, a, b, n);
        EXPECT_TRUE(lhs.isApprox(rhs, 1e-10) || (lhs - rhs).norm() < 1e-10);
    }
}

TEST(InducedMaps, CompositeThroughSphere) {
    const auto s = fixtures::sphere2(3);
    const auto u = disjoint_union(s, s);
    // Fold map: both copies onto one.
    SimplicialMorphismTable fold;
    for (int n = 0; n <= 3; ++n) {
        std::vector<Index> m(u.size(n));
        for (Index k = 0; k < u.size(n); ++k) {
            const std::string& l = u.label(n, k);
            m[k] = *s.find(n, l.substr(2));
        }
        fold.map.push_back(m);
    }
    ASSERT_TRUE(morphism_validate(fold, u, s).ok());
    const Eigen::MatrixXd f2 = induced_homology_map(fold, u, s, 2);
    EXPECT_EQ(f2.rows(), 1);
    EXPECT_EQ(f2.cols(), 2);
    EXPECT_EQ((f2 * f2.transpose())(0, 0) > 0.5, true);
}
