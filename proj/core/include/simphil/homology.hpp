#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "simphil/hilbert_ops.hpp"
#include "simphil/morphism.hpp"

namespace simphil {

enum class BoundaryKind { QD, QS };

/// Q_{D,n} = Σ (-1)^i D_{n,i} for 1 <= n <= N, Q_{S,n} = Σ (-1)^i S_{n,i} for 0 <= n <= N-1.
LinearOperator boundary_operator(const SimplicialSet& x, BoundaryKind kind, int n);

enum class LaplacianKind { DD, SD, SS };

/// H_DD,n (0 <= n <= N; at n = N the term Q_{D,N+1} Q_{D,N+1}^T lies outside the
/// truncation and is omitted), H_SD,n (2 <= n <= N), H_SS,n (0 <= n <= N-1).
LinearOperator hodge_laplacian(const SimplicialSet& x, LaplacianKind kind, int n);

/// Υ_DD,n (1 <= n <= N-1, zero at n = 0), Υ_DS,n (0 <= n <= N-2), Υ_SD,n (2 <= n <= N).
LinearOperator upsilon(const SimplicialSet& x, DefectKind kind, int n);
/// H⁰ operators: DD via Ω, Θ, Γ; SD via the projectors Π_{n,i}; SS = (n+1) - Σ Π_{n,i}.
LinearOperator h0_operator(const SimplicialSet& x, LaplacianKind kind, int n);

/// Outcome of an identity check.  `failures` names every identity that did not hold.
struct CheckReport {
    std::vector<std::string> failures;
    std::size_t checks = 0;
    double max_residual = 0.0;

    bool ok() const noexcept { return failures.empty(); }
    void expect(bool holds, const std::string& name) {
        ++checks;
        if (!holds) failures.push_back(name);
    }
};

/// Verifies every Laplacian decomposition that exists at degree n.
CheckReport laplacian_decomposition_check(const SimplicialSet& x, int n);

enum class BettiMethod { exact_rank, hodge, normalized_hodge };
std::string to_string(BettiMethod m);

struct BettiResult {
    int degree = 0;
    std::size_t value = 0;
    BettiMethod method = BettiMethod::exact_rank;
    int valid_up_to = 0;
    /// Set at n = N, where the value depends on the truncation.
    bool truncation_sensitive = false;
};

BettiResult betti(const SimplicialSet& x, int n, BettiMethod method);

/// Rank over ℚ of an integer matrix by fraction-free elimination.
std::size_t rational_rank(const IntMatrix& m);

/// Chain complex in a fixed basis: q[n] : C_n -> C_{n-1} for 1 <= n <= N.
/// basis[n] lists the simplex indices spanning C_n.
struct ChainComplexView {
    enum class Basis { full, normalized };
    Basis tag = Basis::full;
    std::vector<std::vector<Index>> basis;
    std::vector<LinearOperator> q;

    int cutoff() const { return static_cast<int>(basis.size()) - 1; }
    std::size_t dim(int n) const { return basis[static_cast<std::size_t>(n)].size(); }
};

ChainComplexView full_complex(const SimplicialSet& x);
/// Normalized complex on the non-degenerate simplices; ᶜQ_{D,n} has entry (-1)^i
/// wherever d_{n,i} σ is non-degenerate.
ChainComplexView normalized_complex(const SimplicialSet& x);
/// Same complex computed as (1 - Π_{n-1}) Q_{D,n} restricted to the non-degenerate basis.
ChainComplexView normalized_complex_via_projector(const SimplicialSet& x);

/// Laplacian of a chain complex view at degree n (top degree drops the up term).
IntMatrix complex_laplacian(const ChainComplexView& c, int n);
/// ᶜH_DD,N,n.
LinearOperator normalized_laplacian(const SimplicialSet& x, int n);

/// Chain equivalence between the quotient complex (modelled on coordinates of a
/// rational complement of the degenerate span) and the normalized complex, for
/// degrees 0..n_max <= N-1.  All identities exact over ℚ.
CheckReport chain_equivalence_check(const SimplicialSet& x, int n_max);

/// Hodge resolution of the identity, kernel annihilation and intertwining at
/// degree n of the full or normalized complex.
CheckReport hodge_resolution_check(const SimplicialSet& x, ChainComplexView::Basis basis, int n);

/// Orthonormal basis (columns) of ker H_DD,n.
Eigen::MatrixXd harmonic_basis(const SimplicialSet& x, int n);
/// Matrix of Φ_* : ker H_DD,n(x) -> ker H_DD,n(y) in the harmonic bases.
/// Throws invariant-violation if Φ does not commute with Q_D.
Eigen::MatrixXd induced_homology_map(const SimplicialMorphismTable& phi, const SimplicialSet& x,
                                     const SimplicialSet& y, int n);

}  // namespace simphil
