#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "simphil/error.hpp"
#include "simphil/morphism.hpp"
#include "simphil/validate.hpp"

using namespace simphil;

namespace {

Index at(const SimplicialSet& x, int n, const std::string& label) {
    auto k = x.find(n, label);
    EXPECT_TRUE(k.has_value()) << label;
    return k.value_or(0);
}

bool has_relation(const ValidationReport& r, const std::string& rel) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.relation == rel; });
}

}  // namespace

TEST(Builders, DiscreteCountsAndMaps) {
    const auto p = build_discrete(1, 3);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(p.size(n), 1u);
    const auto d = build_discrete(3, 2);
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(d.size(n), 3u);
    for (Index k = 0; k < 3; ++k) {
        EXPECT_EQ(d.face(1, 0, k), k);
        EXPECT_EQ(d.degeneracy(1, 1, k), k);
    }
    const auto two = build_discrete(2, 2);
    for (Index k = 0; k < 2; ++k) EXPECT_TRUE(is_degenerate(two, {1, k}));
}

TEST(Builders, DiscreteRejectsEmptySet) { EXPECT_THROW(build_discrete(0, 2), Error); }

TEST(Builders, NerveCounts) {
    const auto trivial = build_nerve_group(FiniteGroup::cyclic(1), 3);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(trivial.size(n), 1u);
    const auto z2 = fixtures::nerve_cyclic(2, 3);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(z2.size(n), oracles::power(2, static_cast<unsigned>(n)));
}

TEST(Builders, NerveMiddleFaceComposes) {
    const FiniteGroup g = FiniteGroup::cyclic(3);
    const auto x = build_nerve_group(g, 2);
    for (Index a = 0; a < 3; ++a)
        for (Index b = 0; b < 3; ++b) {
            const Index s = at(x, 2, nerve_group_label(g, {a, b}));
            EXPECT_EQ(x.label(1, x.face(2, 1, s)), nerve_group_label(g, {(a + b) % 3}));
            EXPECT_EQ(x.label(1, x.face(2, 0, s)), nerve_group_label(g, {b}));
            EXPECT_EQ(x.label(1, x.face(2, 2, s)), nerve_group_label(g, {a}));
        }
}

TEST(Builders, BrokenCategoryNamesLaw) {
    FiniteCategoryTable c = FiniteCategoryTable::chain(3);
    // Point 0<1 then 1<2 at 0<1 instead of 0<2.
    for (auto& [pair, result] : c.compose)
        if (c.morphisms[pair.first].name == "0<1" && c.morphisms[pair.second].name == "1<2") result = pair.first;
    try {
        build_nerve(c, 2);
        FAIL() << "expected invalid input";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_input);
        EXPECT_NE(std::string(e.what()).find("law"), std::string::npos) << e.what();
    }
}

TEST(Builders, ComplexCounts) {
    const auto triangle = fixtures::simplex(2, 1);
    EXPECT_EQ(triangle.size(1), 6u);
    OrderedComplexTable vertex;
    vertex.vertex_count = 1;
    vertex.simplices = {{0}};
    const auto v = build_from_complex(vertex, 2);
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(v.size(n), 1u);
    const auto sphere = fixtures::sphere2(3);
    const std::vector<std::uint64_t> nondeg{4, 6, 4, 0};
    for (int n = 0; n <= 3; ++n) {
        std::uint64_t expected = 0;
        for (int m = 0; m <= n; ++m) expected += oracles::binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) * nondeg[m];
        EXPECT_EQ(sphere.size(n), expected);
        EXPECT_EQ(nondegenerate(sphere, n).size(), nondeg[n]);
    }
}

TEST(Builders, ComplexRejectsNonClosedFamily) {
    OrderedComplexTable cx;
    cx.vertex_count = 3;
    cx.simplices = {{0}, {1}, {2}, {0, 1, 2}};
    EXPECT_THROW(build_from_complex(cx, 2), Error);
}

TEST(Builders, ProductAndUnion) {
    const auto z2 = fixtures::nerve_cyclic(2, 3);
    const auto p = product(fixtures::point(3), z2);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(p.size(n), z2.size(n));
    const auto zz = product(z2, z2);
    EXPECT_EQ(zz.size(2), 16u);
    EXPECT_TRUE(validate(zz).ok());
    const auto u = disjoint_union(z2, fixtures::torus(3));
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(u.size(n), z2.size(n) + fixtures::torus(3).size(n));
    EXPECT_THROW(product(z2, fixtures::point(2)), Error);
    EXPECT_THROW(disjoint_union(z2, fixtures::point(2)), Error);
}

TEST(Validate, EveryFixturePasses) {
    for (const auto& f : fixtures::all()) EXPECT_TRUE(validate(f.set).ok()) << f.name;
}

TEST(Validate, SwappedFacesNameFaceFace) {
    const auto x = fixtures::simplex(2, 2);
    MapTable faces = x.faces();
    // Swap d_{1,0} and d_{1,1} on one non-degenerate edge that is a face of the 2-simplex.
    const Index edge = at(x, 1, "[0,1]");
    std::swap(faces[1][0][edge], faces[1][1][edge]);
    std::vector<std::vector<std::string>> labels;
    for (int n = 0; n <= 2; ++n) labels.push_back(x.labels(n));
    const auto broken = SimplicialSet::assemble(2, labels, faces, x.degeneracies(), x.provenance());
    const auto r = validate(broken);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has_relation(r, "face-face"));
}

TEST(Validate, FaceOfOwnDegeneracyIsIdentity) {
    for (const auto& f : fixtures::all())
        for (int n = 0; n < f.set.cutoff(); ++n)
            for (int i = 0; i <= n; ++i)
                for (Index k = 0; k < f.set.size(n); ++k) {
                    EXPECT_EQ(f.set.face(n + 1, i, f.set.degeneracy(n, i, k)), k);
                    EXPECT_EQ(f.set.face(n + 1, i + 1, f.set.degeneracy(n, i, k)), k);
                }
}

TEST(Degeneracy, Examples) {
    const auto z2 = fixtures::nerve_cyclic(2, 3);
    const FiniteGroup g = FiniteGroup::cyclic(2);
    EXPECT_FALSE(is_degenerate(z2, {0, 0}));
    EXPECT_TRUE(is_degenerate(z2, {2, at(z2, 2, nerve_group_label(g, {1, 0}))}));
    EXPECT_FALSE(is_degenerate(z2, {2, at(z2, 2, nerve_group_label(g, {1, 1}))}));
    const auto k = fixtures::simplex(2, 2);
    EXPECT_TRUE(is_degenerate(k, {2, at(k, 2, "[0,0,2]")}));
    EXPECT_FALSE(is_degenerate(k, {2, at(k, 2, "[0,1,2]")}));
}

TEST(EilenbergZilber, NonDegenerateHasEmptyString) {
    const auto k = fixtures::simplex(2, 3);
    const Index s = at(k, 2, "[0,1,2]");
    const EZForm f = ez_normal_form(k, {2, s});
    EXPECT_TRUE(f.indices.empty());
    EXPECT_EQ(f.base, (SimplexRef{2, s}));
}

TEST(EilenbergZilber, DoubleDegeneracyOfVertex) {
    EXPECT_EQ(canonical_degeneracy_string({0, 0}), (std::vector<int>{0, 1}));
    const auto p = fixtures::point(3);
    const Index s = p.degeneracy(1, 0, p.degeneracy(0, 0, 0));
    EXPECT_EQ(s, p.degeneracy(1, 1, p.degeneracy(0, 0, 0)));
    const EZForm f = ez_normal_form(p, {2, s});
    EXPECT_EQ(f.indices, (std::vector<int>{0, 1}));
    EXPECT_EQ(f.base, (SimplexRef{0, 0}));
}

TEST(EilenbergZilber, BijectionAndRecombination) {
    for (const auto& f : fixtures::all()) {
        const auto& x = f.set;
        for (int n = 0; n <= x.cutoff(); ++n) {
            std::set<std::pair<std::vector<int>, std::pair<int, Index>>> seen;
            std::vector<std::uint64_t> by_base(static_cast<std::size_t>(n) + 1, 0);
            for (Index k = 0; k < x.size(n); ++k) {
                const EZForm e = ez_normal_form(x, {n, k});
                EXPECT_TRUE(std::is_sorted(e.indices.begin(), e.indices.end()));
                EXPECT_EQ(std::adjacent_find(e.indices.begin(), e.indices.end()), e.indices.end());
                EXPECT_EQ(static_cast<int>(e.indices.size()), n - e.base.degree);
                EXPECT_FALSE(is_degenerate(x, e.base));
                EXPECT_EQ(realize(x, e), (SimplexRef{n, k})) << f.name;
                EXPECT_EQ(is_degenerate(x, {n, k}), !e.indices.empty());
                EXPECT_TRUE(seen.insert({e.indices, {e.base.degree, e.base.index}}).second);
                ++by_base[static_cast<std::size_t>(e.base.degree)];
            }
            for (int m = 0; m <= n; ++m)
                EXPECT_EQ(by_base[m], oracles::binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) *
                                          nondegenerate(x, m).size())
                    << f.name << " n=" << n << " m=" << m;
        }
    }
}

TEST(Skeleton, PointAndTorus) {
    const auto p = skeleton_extend(fixtures::point(1), 4);
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(p.size(n), 1u);
    const auto t = skeleton_extend(fixtures::torus(2), 3);
    EXPECT_EQ(t.size(3), 16u);
    EXPECT_TRUE(validate(t).ok());
    EXPECT_THROW(skeleton_extend(fixtures::torus(2), 2), Error);
}

TEST(Skeleton, TruncateThenExtendMatchesOriginalCounts) {
    for (const auto& f : fixtures::all(4)) {
        // Fixtures with no non-degenerate simplex above degree 2 are their own 2-skeleton.
        bool thin = true;
        for (int n = 3; n <= 4; ++n) thin = thin && nondegenerate(f.set, n).empty();
        const auto e = skeleton_extend(truncate(f.set, 2), 4);
        EXPECT_TRUE(validate(e).ok()) << f.name;
        const auto back = truncate(e, 2);
        for (int n = 0; n <= 2; ++n) EXPECT_EQ(back.labels(n), f.set.labels(n)) << f.name;
        for (int n = 3; n <= 4; ++n) {
            std::uint64_t expected = 0;
            for (int m = 0; m <= 2; ++m)
                expected += oracles::binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) * nondegenerate(f.set, m).size();
            EXPECT_EQ(e.size(n), expected) << f.name;
            EXPECT_TRUE(nondegenerate(e, n).empty());
            if (thin) EXPECT_EQ(e.size(n), f.set.size(n)) << f.name;
        }
    }
}

TEST(Truncate, IdentityAndErrors) {
    const auto x = fixtures::torus(3);
    const auto same = truncate(x, 3);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(same.labels(n), x.labels(n));
    EXPECT_THROW(truncate(x, 4), Error);
    const auto t = truncate(x, 1);
    EXPECT_EQ(t.cutoff(), 1);
    EXPECT_TRUE(validate(t).ok());
}

TEST(Morphism, IdentityAndQuotient) {
    const auto x = fixtures::torus(3);
    EXPECT_TRUE(morphism_validate(identity_morphism(x), x, x).ok());
    const FiniteGroup z4 = FiniteGroup::cyclic(4), z2 = FiniteGroup::cyclic(2);
    const auto a = build_nerve_group(z4, 3), b = build_nerve_group(z2, 3);
    const auto phi = nerve_group_morphism(z4, z2, {0, 1, 0, 1}, a, b);
    EXPECT_TRUE(morphism_validate(phi, a, b).ok());
    EXPECT_THROW(nerve_group_morphism(z4, z2, {0, 1, 1, 0}, a, b), Error);
}

TEST(Morphism, BrokenMapIsReported) {
    const auto x = fixtures::simplex(1, 2);
    const auto y = fixtures::simplex(1, 2);
    auto phi = identity_morphism(x);
    // Send the edge [0,1] to the degenerate edge [0,0] but keep its vertices.
    phi.map[1][at(x, 1, "[0,1]")] = at(y, 1, "[0,0]");
    const auto r = morphism_validate(phi, x, y);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has_relation(r, "morphism-face"));
}

TEST(Morphism, ConstantAndComposite) {
    const auto x = fixtures::torus(3), p = fixtures::point(3);
    const auto c = constant_morphism(x, p, 0);
    EXPECT_TRUE(morphism_validate(c, x, p).ok());
    const auto cc = compose(identity_morphism(x), c);
    EXPECT_EQ(cc.map, c.map);
}
