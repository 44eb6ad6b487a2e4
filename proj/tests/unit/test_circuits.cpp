#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "simphil/circuits.hpp"
#include "simphil/error.hpp"
#include "simphil/homology.hpp"

using namespace simphil;

namespace {

SimplicialMorphismTable constant_to(const SimplicialSet& x, const SimplicialSet& y, Index element) {
    SimplicialMorphismTable m;
    for (int n = 0; n <= x.cutoff(); ++n) m.map.emplace_back(x.size(n), element);
    return m;
}

bool is_identity(const SimpleCircuit& c) {
    for (const auto& p : c.perm)
        for (Index k = 0; k < p.size(); ++k)
            if (p[k] != k) return false;
    return true;
}

}  // namespace

TEST(GroupStructure, DiscreteAndAbelianNerve) {
    const FiniteGroup z3 = FiniteGroup::cyclic(3);
    const auto d = build_discrete_group(z3, 3);
    const auto g = attach_group_structure(d);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(g.multiply(n, 1, 2), 0u);
    const auto z2 = fixtures::nerve_cyclic(2, 3);
    const auto h = attach_group_structure(z2);
    ASSERT_EQ(h.unit.size(), 4u);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(z2.label(n, h.unit[n]), nerve_group_label(FiniteGroup::cyclic(2), std::vector<Index>(n, 0)));
}

TEST(GroupStructure, NonAbelianNerveRejected) {
    try {
        attach_group_structure(fixtures::nerve_s3(2));
        FAIL() << "expected unsupported";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::unsupported);
        EXPECT_NE(std::string(e.what()).find("("), std::string::npos) << e.what();
    }
    EXPECT_THROW(attach_group_structure(fixtures::torus(2)), Error);
}

TEST(Circuits, TrivialMorphismGivesIdentity) {
    const auto x = fixtures::torus(3);
    const auto target = build_discrete_group(FiniteGroup::cyclic(2), 3);
    const auto grp = attach_group_structure(target);
    const auto pc = circuit_from_morphism(constant_to(x, target, 0), x, target, grp);
    EXPECT_TRUE(is_identity(pc.circuit));
    EXPECT_TRUE(validate_circuit(pc.space, pc.circuit).ok());
    const auto shifted = circuit_from_morphism(constant_to(x, target, 1), x, target, grp);
    EXPECT_FALSE(is_identity(shifted.circuit));
    EXPECT_TRUE(validate_circuit(shifted.space, shifted.circuit).ok());
}

TEST(Circuits, MultiplicationCircuit) {
    const auto dz2 = build_discrete_group(FiniteGroup::cyclic(2), 3);
    const auto grp = attach_group_structure(dz2);
    const auto pc = circuit_from_morphism(identity_morphism(dz2), dz2, dz2, grp);
    for (int n = 0; n <= 3; ++n) {
        for (Index a = 0; a < 2; ++a)
            for (Index b = 0; b < 2; ++b) {
                const Index from = *pc.space.find(n, product_label(dz2.label(n, a), dz2.label(n, b)));
                const Index to = *pc.space.find(n, product_label(dz2.label(n, a), dz2.label(n, (a + b) % 2)));
                EXPECT_EQ(pc.circuit.perm[n][from], to);
            }
        const IntMatrix u = pc.circuit.matrix(n);
        EXPECT_TRUE(equal(IntMatrix(transpose(u) * u), identity_matrix(pc.space.size(n))));
    }
    EXPECT_TRUE(validate_circuit(pc.space, pc.circuit).ok());
}

TEST(Circuits, NerveCircuitsAndInverse) {
    const FiniteGroup z3 = FiniteGroup::cyclic(3);
    const auto x = build_nerve_group(z3, 3);
    const auto grp = attach_group_structure(x);
    const auto phi = identity_morphism(x);
    const auto psi = nerve_group_morphism(z3, z3, {0, 2, 1}, x, x);
    const auto a = circuit_from_morphism(phi, x, x, grp);
    const auto b = circuit_from_morphism(psi, x, x, grp);
    EXPECT_TRUE(validate_circuit(a.space, a.circuit).ok());
    EXPECT_TRUE(validate_circuit(b.space, b.circuit).ok());
    EXPECT_TRUE(is_identity(compose(a.circuit, b.circuit)));
    EXPECT_TRUE(is_identity(compose(a.circuit, inverse(a.circuit))));
    EXPECT_EQ(inverse(a.circuit).perm, b.circuit.perm);
}

TEST(Circuits, BrokenDegreeIsReported) {
    const auto dz2 = build_discrete_group(FiniteGroup::cyclic(2), 2);
    const auto x = fixtures::simplex(1, 2);
    const auto grp = attach_group_structure(dz2);
    auto pc = circuit_from_morphism(constant_to(x, dz2, 1), x, dz2, grp);
    std::mt19937_64 rng(7);
    auto& p = pc.circuit.perm[1];
    const auto original = p;
    while (p == original) std::shuffle(p.begin(), p.end(), rng);
    const auto r = validate_circuit(pc.space, pc.circuit);
    ASSERT_FALSE(r.ok());
    const bool at_one = std::any_of(r.violations.begin(), r.violations.end(), [](const Violation& v) {
        return (v.relation == "circuit-face" || v.relation == "circuit-degeneracy") && (v.n == 1 || v.n == 2 || v.n == 0);
    });
    EXPECT_TRUE(at_one);
}

TEST(Circuits, NonPermutationRejected) {
    const auto x = fixtures::point(2);
    SimpleCircuit c = identity_circuit(x);
    c.perm[0] = {0, 0};
    EXPECT_THROW(validate_circuit(x, c), Error);
}

TEST(HomologyAction, IdentityAndUnitarity) {
    const auto t = fixtures::torus(3);
    const auto id = homology_action(t, identity_circuit(t), 1);
    EXPECT_TRUE(id.full.isApprox(Eigen::MatrixXd::Identity(2, 2), 1e-10));
    EXPECT_TRUE(id.normalized.isApprox(Eigen::MatrixXd::Identity(2, 2), 1e-10));

    const auto dz2 = build_discrete_group(FiniteGroup::cyclic(2), 3);
    const auto grp = attach_group_structure(dz2);
    const auto pc = circuit_from_morphism(constant_to(t, dz2, 1), t, dz2, grp);
    for (int n = 0; n <= 2; ++n) {
        const auto act = homology_action(pc.space, pc.circuit, n);
        EXPECT_LT(act.unitarity_residual, 1e-10);
        EXPECT_EQ(act.full.rows(), static_cast<Eigen::Index>(betti(pc.space, n, BettiMethod::exact_rank).value));
    }
}

TEST(HomologyAction, Functoriality) {
    const FiniteGroup z3 = FiniteGroup::cyclic(3);
    const auto sphere = disjoint_union(fixtures::sphere2(3), fixtures::sphere2(3));
    const auto dz3 = build_discrete_group(z3, 3);
    const auto grp = attach_group_structure(dz3);
    const auto a = circuit_from_morphism(constant_to(sphere, dz3, 1), sphere, dz3, grp);
    const auto b = circuit_from_morphism(constant_to(sphere, dz3, 2), sphere, dz3, grp);
    for (int n = 0; n <= 2; ++n) {
        const auto ab = homology_action(a.space, compose(a.circuit, b.circuit), n);
        const auto ha = homology_action(a.space, a.circuit, n);
        const auto hb = homology_action(a.space, b.circuit, n);
        EXPECT_LT((ab.full - hb.full * ha.full).norm(), 1e-10);
        EXPECT_LT((ab.normalized - hb.normalized * ha.normalized).norm(), 1e-10);
    }
}
