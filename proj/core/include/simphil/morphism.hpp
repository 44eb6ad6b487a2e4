#pragma once

#include <vector>

#include "simphil/group.hpp"
#include "simphil/sset.hpp"
#include "simphil/validate.hpp"

namespace simphil {

/// Degreewise index maps φ_n : X_n -> X'_n.
struct SimplicialMorphismTable {
    std::vector<std::vector<Index>> map;
};

/// Checks φ d = d' φ and φ s = s' φ exhaustively.  Shape mismatches are
/// reported as invalid-input errors.
ValidationReport morphism_validate(const SimplicialMorphismTable& phi, const SimplicialSet& x,
                                   const SimplicialSet& y);

SimplicialMorphismTable identity_morphism(const SimplicialSet& x);
/// Constant map onto the degeneracies of a vertex v of y.
SimplicialMorphismTable constant_morphism(const SimplicialSet& x, const SimplicialSet& y, Index vertex);
/// Nerve map N B(h) induced by a group homomorphism h : G -> H, between
/// build_nerve_group(G, N) and build_nerve_group(H, N).
SimplicialMorphismTable nerve_group_morphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Index>& hom,
                                             const SimplicialSet& x, const SimplicialSet& y);
/// Composite ψ∘φ.
SimplicialMorphismTable compose(const SimplicialMorphismTable& phi, const SimplicialMorphismTable& psi);

}  // namespace simphil
