#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "simphil/hilbert_ops.hpp"
#include "simphil/morphism.hpp"
#include "simphil/sset.hpp"
#include "simphil/validate.hpp"

namespace simphil {

/// Degreewise group operation on the simplices of a simplicial set.
struct SimplicialGroupStructure {
    std::vector<std::vector<std::vector<Index>>> mul;  // mul[n][a][b] = a·b
    std::vector<std::vector<Index>> inverse;
    std::vector<Index> unit;

    Index multiply(int n, Index a, Index b) const { return mul[static_cast<std::size_t>(n)][a][b]; }
};

/// Group structure on build_discrete_group(G) or on build_nerve_group(G) for
/// abelian G.  Every face and degeneracy map is checked to be a homomorphism;
/// failure throws unsupported with the violating pair named.  Other inputs
/// throw unsupported as well.
SimplicialGroupStructure attach_group_structure(const SimplicialSet& x);

/// Simple circuit with permutation components: U_n |k> = |perm[n][k]>.
struct SimpleCircuit {
    std::vector<std::vector<Index>> perm;

    IntMatrix matrix(int n) const;
};

SimpleCircuit identity_circuit(const SimplicialSet& x);
/// Degreewise composite: first a, then b.
SimpleCircuit compose(const SimpleCircuit& a, const SimpleCircuit& b);
SimpleCircuit inverse(const SimpleCircuit& c);

struct ProductCircuit {
    SimplicialSet space;  // product(x, target)
    SimpleCircuit circuit;
};

/// Û_φ on x × target: (σ, σ') -> (σ, σ'·φ_n(σ)).
ProductCircuit circuit_from_morphism(const SimplicialMorphismTable& phi, const SimplicialSet& x,
                                     const SimplicialSet& target, const SimplicialGroupStructure& group);

/// Checks that every component is a permutation and that U intertwines all face
/// and degeneracy operators ("circuit-face", "circuit-degeneracy", "circuit-unitary"),
/// then checks X^(α)_{A,i} U_A = U_{A+α} X^(α)_{A,i} for the block circuits
/// U_A = ⊕_{n∈A} U_n over all A ⊆ {0..N} with |A| <= max_arity ("circuit-p-ary",
/// reported with n = |A| and simplex = index of the failing (A, α, i) instance).
ValidationReport validate_circuit(const SimplicialSet& x, const SimpleCircuit& c, std::size_t max_arity = 3);

struct HomologyAction {
    Eigen::MatrixXd full;        // U_n on ker H_DD,n in an orthonormal harmonic basis
    Eigen::MatrixXd normalized;  // ᶜU_n on ker ᶜH_DD,n
    double unitarity_residual = 0.0;
};

/// Verifies U Q_D = Q_D U, [H_DD,n, U_n] = 0 and [Π_n, U_n] = 0 exactly (throws
/// invariant-violation otherwise) and returns the restrictions to the kernels.
HomologyAction homology_action(const SimplicialSet& x, const SimpleCircuit& c, int n);

}  // namespace simphil
