#pragma once

#include "simphil/group.hpp"
#include "simphil/sset.hpp"
#include "simphil/tables.hpp"

namespace simphil {

/// Discrete simplicial set D A on a set of `set_size` elements: every map is
/// the identity.
SimplicialSet build_discrete(Index set_size, int cutoff);
/// Discrete simplicial set on the elements of a group; records the group so
/// that a simplicial group structure can be attached.
SimplicialSet build_discrete_group(const FiniteGroup& group, int cutoff);

/// Nerve of a finite category.  Degree-0 simplices are object names, degree
/// n >= 1 simplices are composable strings "(f1,...,fn)".
SimplicialSet build_nerve(const FiniteCategoryTable& cat, int cutoff);
/// Nerve of the delooping BG; the vertex is labelled "*".
SimplicialSet build_nerve_group(const FiniteGroup& group, int cutoff);
/// Label of the nerve simplex (g1,...,gn) of BG.
std::string nerve_group_label(const FiniteGroup& group, const std::vector<Index>& elements);

/// Simplicial set K S of an ordered complex: non-decreasing vertex sequences
/// "[v0,...,vn]" whose support is a simplex.
SimplicialSet build_from_complex(const OrderedComplexTable& cx, int cutoff);
std::string vertex_sequence_label(const std::vector<Index>& vertices);

/// Degreewise cartesian product; labels "a|b" (nested products flatten).
SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y);
/// Label of the pair (a, b) in product(x, y).
std::string product_label(const std::string& a, const std::string& b);
/// Degreewise disjoint union; labels "0:a" and "1:b".
SimplicialSet disjoint_union(const SimplicialSet& x, const SimplicialSet& y);

/// Drops all degrees above `cutoff`.
SimplicialSet truncate(const SimplicialSet& x, int cutoff);

}  // namespace simphil
