#pragma once

#include <string>
#include <vector>

#include "simphil/builders.hpp"
#include "simphil/ez.hpp"

namespace fixtures {

using namespace simphil;

inline SimplicialSet point(int cutoff = 3) { return build_discrete(1, cutoff); }

inline SimplicialSet simplex(Index d, int cutoff) {
    return build_from_complex(OrderedComplexTable::full_simplex(d), cutoff);
}

inline SimplicialSet sphere2(int cutoff = 3) {
    return build_from_complex(OrderedComplexTable::simplex_boundary(3), cutoff);
}

/// One vertex, edges a, b, c (c the diagonal), triangles U and L.
inline SimplicialSet torus(int cutoff = 3) {
    NondegenerateData data(3);
    data[0] = {{"v", {}}};
    data[1] = {{"a", {"v", "v"}}, {"b", {"v", "v"}}, {"c", {"v", "v"}}};
    data[2] = {{"U", {"b", "c", "a"}}, {"L", {"a", "c", "b"}}};
    Provenance p;
    p.kind = "explicit";
    p.detail = "torus";
    return build_from_nondegenerate(data, cutoff, p);
}

inline SimplicialSet nerve_cyclic(Index order, int cutoff) {
    return build_nerve_group(FiniteGroup::cyclic(order), cutoff);
}

inline SimplicialSet nerve_s3(int cutoff) { return build_nerve_group(FiniteGroup::symmetric(3), cutoff); }

/// Nerve of the chain 0 < 1 < ... < size-1; not a groupoid.
inline SimplicialSet nerve_chain(Index size, int cutoff) {
    return build_nerve(FiniteCategoryTable::chain(size), cutoff);
}

struct Named {
    std::string name;
    SimplicialSet set;
};

/// Small fixtures shared by the exhaustive property tests.
inline std::vector<Named> all(int cutoff = 3) {
    std::vector<Named> out;
    out.push_back({"point", point(cutoff)});
    out.push_back({"discrete3", build_discrete(3, cutoff)});
    out.push_back({"simplex1", simplex(1, cutoff)});
    out.push_back({"simplex2", simplex(2, cutoff)});
    out.push_back({"simplex3", simplex(3, cutoff)});
    out.push_back({"sphere2", sphere2(cutoff)});
    out.push_back({"torus", torus(cutoff)});
    out.push_back({"nerve_z2", nerve_cyclic(2, cutoff)});
    out.push_back({"nerve_z3", nerve_cyclic(3, cutoff)});
    out.push_back({"nerve_s3", nerve_s3(cutoff)});
    out.push_back({"nerve_chain2", nerve_chain(2, cutoff)});
    out.push_back({"nerve_chain3", nerve_chain(3, cutoff)});
    out.push_back({"z2_union_point", disjoint_union(nerve_cyclic(2, cutoff), point(cutoff))});
    out.push_back({"interval_squared", product(simplex(1, cutoff), simplex(1, cutoff))});
    return out;
}

}  // namespace fixtures
