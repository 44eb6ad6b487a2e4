#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "simphil/group.hpp"

namespace simphil {

struct CategoryMorphism {
    std::string name;
    Index source = 0;
    Index target = 0;
};

/// Finite category: objects, morphisms, identities and a composition table.
///
/// `compose[{f, g}]` is the composite g∘f and must be defined exactly on the
/// pairs with t(f) = s(g).
struct FiniteCategoryTable {
    std::vector<std::string> objects;
    std::vector<CategoryMorphism> morphisms;
    std::vector<Index> identity;
    std::map<std::pair<Index, Index>, Index> compose;

    /// Throws invalid-input naming the violated law.
    void check() const;
    bool is_groupoid() const;

    /// One-object category of a group.  The composite g∘f is the product f*g,
    /// so that the interior nerve face multiplies neighbouring entries in order.
    static FiniteCategoryTable delooping(const FiniteGroup& group);
    /// Totally ordered set 0 < 1 < ... < size-1 viewed as a category.
    static FiniteCategoryTable chain(Index size);
};

/// Abstract simplicial complex on vertices 0..vertex_count-1 with the
/// natural vertex order.  Simplices are stored as strictly increasing lists.
struct OrderedComplexTable {
    Index vertex_count = 0;
    std::vector<std::vector<Index>> simplices;

    /// Throws invalid-input if the family is not a downward-closed family of
    /// non-empty subsets containing every singleton.
    void check() const;
    Index dimension() const;

    /// All non-empty subsets of {0..d}.
    static OrderedComplexTable full_simplex(Index d);
    /// All proper non-empty subsets of {0..d}.
    static OrderedComplexTable simplex_boundary(Index d);
    /// Downward closure of the given facets.
    static OrderedComplexTable from_facets(Index vertex_count, const std::vector<std::vector<Index>>& facets);
};

}  // namespace simphil
