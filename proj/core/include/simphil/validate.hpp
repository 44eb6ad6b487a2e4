#pragma once

#include <string>
#include <vector>

#include "simphil/sset.hpp"

namespace simphil {

/// One failed instance of a simplicial relation.  `relation` is one of
///   "face-face"            d_{n-1,i} d_{n,j} = d_{n-1,j-1} d_{n,i}      (i < j)
///   "face-degeneracy-low"  d_{n+1,i} s_{n,j} = s_{n-1,j-1} d_{n,i}      (i < j)
///   "face-degeneracy-id"   d_{n+1,i} s_{n,j} = id                       (i = j, j+1)
///   "face-degeneracy-high" d_{n+1,i} s_{n,j} = s_{n-1,j} d_{n,i-1}      (i > j+1)
///   "degeneracy-degeneracy" s_{n+1,i} s_{n,j} = s_{n+1,j+1} s_{n,i}    (i <= j)
/// and for morphisms "morphism-face" / "morphism-degeneracy".
struct Violation {
    std::string relation;
    int n = 0;
    int i = 0;
    int j = 0;
    Index simplex = 0;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::size_t checks = 0;

    bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive check of all five relation families within the truncation.
ValidationReport validate(const SimplicialSet& x);

}  // namespace simphil
