#pragma once

#include <string>
#include <vector>

#include "simphil/sset.hpp"

namespace simphil {

/// Eilenberg–Zilber normal form: σ = s_{j_{k-1}} ... s_{j_1} s_{j_0} base with
/// j_0 < j_1 < ... < j_{k-1} and base non-degenerate.
struct EZForm {
    std::vector<int> indices;
    SimplexRef base;

    friend bool operator==(const EZForm&, const EZForm&) = default;
};

/// Rewrites a degeneracy word (innermost letter first) into the canonical
/// strictly increasing string using s_i s_j = s_{j+1} s_i for i <= j.
std::vector<int> canonical_degeneracy_string(std::vector<int> word);

EZForm ez_normal_form(const SimplicialSet& x, SimplexRef sigma);
/// Applies the degeneracy string of `form` to its base using the stored maps.
SimplexRef realize(const SimplicialSet& x, const EZForm& form);

/// Label used for a degenerate simplex held symbolically, e.g. "s[0,2](a)".
std::string ez_label(const std::vector<int>& indices, const std::string& base_label);

/// Returns the M-truncation of the N-skeleton of x.  Degrees <= N are kept
/// verbatim; higher degrees hold the degenerate simplices s_J b with b
/// non-degenerate of degree <= N.  Throws invalid-input when M <= N.
SimplicialSet skeleton_extend(const SimplicialSet& x, int m);

/// Non-degenerate generating data: per degree a list of named simplices and,
/// for degree >= 1, the names of their faces (which must be non-degenerate).
struct NondegenerateCell {
    std::string name;
    std::vector<std::string> faces;
};
using NondegenerateData = std::vector<std::vector<NondegenerateCell>>;

/// Simplicial set freely generated by non-degenerate simplices with the
/// given faces, truncated at `cutoff`.  The result's simplicial relations are
/// checked by validate(); this function only checks names and arities.
SimplicialSet build_from_nondegenerate(const NondegenerateData& data, int cutoff, Provenance provenance);

}  // namespace simphil
