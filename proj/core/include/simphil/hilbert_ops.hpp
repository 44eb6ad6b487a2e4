#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/SparseCore>

#include "simphil/morphism.hpp"
#include "simphil/sset.hpp"
#include "simphil/validate.hpp"

namespace simphil {

/// Exact integer sparse matrix; rows index target simplices, columns source simplices.
using IntMatrix = Eigen::SparseMatrix<std::int64_t>;

struct LinearOperator {
    int source_degree = 0;
    int target_degree = 0;
    IntMatrix matrix;
};

enum class OperatorKind { face, degeneracy };

/// D_{n,i} (face, 1 <= n <= N) or S_{n,i} (degeneracy, 0 <= n <= N-1), 0 <= i <= n.
LinearOperator simplicial_operator(const SimplicialSet& x, OperatorKind kind, int n, int i);
LinearOperator adjoint(const LinearOperator& a);

/// Fiber 𝔇_{n,i}(target) ⊂ X_n for target in X_{n-1} (face) or 𝔖_{n,i}(target) ⊂ X_n for
/// target in X_{n+1} (degeneracy).  Sorted indices.
std::vector<Index> preimage_set(const SimplicialSet& x, OperatorKind kind, int n, int i, Index target);

/// Checks the five simplicial Hilbert identities and S^T S = 1 as matrix equations.
ValidationReport hilbert_identities(const SimplicialSet& x);

enum class DefectKind { DD, DS, SD, SS };
std::string to_string(DefectKind kind);

struct DefectReport {
    DefectKind kind = DefectKind::DD;
    int n = 0;
    int i = 0;
    int j = 0;
    IntMatrix matrix;
    bool is_zero = true;
};

/// Δ^DD_{nij} (i <= j, acts on X_n), Δ^DS_{nij} (i <= j, X_n -> X_{n+2}),
/// Δ^SD_{nij} (i+1 < j, X_n -> X_{n-2}), Δ^SS_{nij} (i < j, acts on X_n).
/// The matrix is computed from the exchange identity and from the fiber
/// counting formula; disagreement throws invariant-violation.  Throws
/// degree-out-of-range when an operator lies outside the truncation and
/// invalid-input for an inadmissible (i, j).
DefectReport defect(const SimplicialSet& x, DefectKind kind, int n, int i, int j);

/// Whether (n, i, j) is admissible for `kind` within the truncation of x.
bool defect_in_range(const SimplicialSet& x, DefectKind kind, int n, int i, int j);

enum class Perfectness { perfect, quasi_perfect, semi_perfect, none };
std::string to_string(Perfectness p);

struct PerfectnessReport {
    Perfectness cls = Perfectness::none;
    int scan_depth = 0;
    std::size_t scanned = 0;
    /// First nonzero defect per family in scan order: DD with i = j, DD with
    /// i < j, DS, SD, SS.
    std::vector<DefectReport> witnesses;
};

/// Scans every defect whose operators live in degrees <= scan_depth + 2.
/// Requires scan_depth <= N - 2.
PerfectnessReport perfectness_class(const SimplicialSet& x, int scan_depth);

enum class AuxKind { Omega, Theta, Gamma, PiI, Pi };

/// Ω_{n,i} = D_{n+1,i} D_{n+1,i}^T (0 <= i <= n+1), Θ_{n,i} = D_{n,i}^T D_{n,i} (Θ_{0,0} = 0),
/// Γ_{n,i} = D_{n+1,i+1} D_{n+1,i}^T (0 <= i <= n), Π_{n,i} = S_{n-1,i} S_{n-1,i}^T
/// (0 <= i <= n-1), Π_n = 1 - Π_i (1 - Π_{n,i}) with Π_0 = 0 (i ignored).
LinearOperator auxiliary_operator(const SimplicialSet& x, AuxKind kind, int n, int i = 0);

/// Φ_n for a morphism x -> y.
LinearOperator morphism_operator(const SimplicialMorphismTable& phi, const SimplicialSet& x, const SimplicialSet& y,
                                 int n);

IntMatrix identity_matrix(std::size_t size);
IntMatrix zero_matrix(std::size_t rows, std::size_t cols);
IntMatrix transpose(const IntMatrix& a);
/// Removes stored zeros.
IntMatrix pruned(IntMatrix a);
bool is_zero(const IntMatrix& a);
bool equal(const IntMatrix& a, const IntMatrix& b);
/// Coordinate list (row, col, value) in column-major order.
std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> coordinates(const IntMatrix& a);

}  // namespace simphil
