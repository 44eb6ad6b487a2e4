#include "simphil/tables.hpp"

#include <algorithm>
#include <set>

#include "simphil/error.hpp"

namespace simphil {

void FiniteCategoryTable::check() const {
    const auto nobj = static_cast<Index>(objects.size());
    const auto nmor = static_cast<Index>(morphisms.size());
    if (nobj == 0) fail(ErrorKind::invalid_input, "category has no objects");
    for (const auto& m : morphisms)
        if (m.source >= nobj || m.target >= nobj)
            fail(ErrorKind::invalid_input, "category law violated: morphism '" + m.name + "' has an unknown endpoint");
    if (identity.size() != nobj) fail(ErrorKind::invalid_input, "category law violated: identity map incomplete");
    for (Index x = 0; x < nobj; ++x) {
        const Index id = identity[x];
        if (id >= nmor || morphisms[id].source != x || morphisms[id].target != x)
            fail(ErrorKind::invalid_input, "category law violated: identity of object '" + objects[x] + "'");
    }
    for (Index f = 0; f < nmor; ++f)
        for (Index g = 0; g < nmor; ++g) {
            const bool composable = morphisms[f].target == morphisms[g].source;
            auto it = compose.find({f, g});
            if (composable != (it != compose.end()))
                fail(ErrorKind::invalid_input, "category law violated: composition domain at (" + morphisms[f].name +
                                                   "," + morphisms[g].name + ")");
            if (!composable) continue;
            const Index h = it->second;
            if (h >= nmor || morphisms[h].source != morphisms[f].source || morphisms[h].target != morphisms[g].target)
                fail(ErrorKind::invalid_input, "category law violated: composite typing at (" + morphisms[f].name +
                                                   "," + morphisms[g].name + ")");
        }
    for (Index f = 0; f < nmor; ++f) {
        if (compose.at({identity[morphisms[f].source], f}) != f)
            fail(ErrorKind::invalid_input, "category law violated: left unit at '" + morphisms[f].name + "'");
        if (compose.at({f, identity[morphisms[f].target]}) != f)
            fail(ErrorKind::invalid_input, "category law violated: right unit at '" + morphisms[f].name + "'");
    }
    for (const auto& [fg, h] : compose)
        for (Index k = 0; k < nmor; ++k) {
            if (morphisms[fg.second].target != morphisms[k].source) continue;
            const Index left = compose.at({h, k});
            const Index right = compose.at({fg.first, compose.at({fg.second, k})});
            if (left != right)
                fail(ErrorKind::invalid_input, "category law violated: associativity at (" +
                                                   morphisms[fg.first].name + "," + morphisms[fg.second].name + "," +
                                                   morphisms[k].name + ")");
        }
    std::set<std::string> names;
    for (const auto& m : morphisms) {
        if (m.name.empty() || m.name.find_first_of(",()[]|") != std::string::npos)
            fail(ErrorKind::invalid_input, "morphism name '" + m.name + "' is empty or contains a reserved character");
        if (!names.insert(m.name).second) fail(ErrorKind::invalid_input, "duplicate morphism name '" + m.name + "'");
    }
    std::set<std::string> onames;
    for (const auto& o : objects) {
        if (o.empty() || o.find_first_of(",()[]|") != std::string::npos)
            fail(ErrorKind::invalid_input, "object name '" + o + "' is empty or contains a reserved character");
        if (!onames.insert(o).second) fail(ErrorKind::invalid_input, "duplicate object name '" + o + "'");
    }
}

bool FiniteCategoryTable::is_groupoid() const {
    for (Index f = 0; f < morphisms.size(); ++f) {
        bool invertible = false;
        for (Index g = 0; g < morphisms.size() && !invertible; ++g) {
            auto fg = compose.find({f, g});
            auto gf = compose.find({g, f});
            invertible = fg != compose.end() && gf != compose.end() &&
                         fg->second == identity[morphisms[f].source] && gf->second == identity[morphisms[f].target];
        }
        if (!invertible) return false;
    }
    return true;
}

FiniteCategoryTable FiniteCategoryTable::delooping(const FiniteGroup& group) {
    FiniteCategoryTable c;
    c.objects = {"*"};
    for (Index g = 0; g < group.order(); ++g) c.morphisms.push_back({group.name(g), 0, 0});
    c.identity = {group.identity()};
    for (Index f = 0; f < group.order(); ++f)
        for (Index g = 0; g < group.order(); ++g) c.compose[{f, g}] = group.mul(f, g);
    return c;
}

FiniteCategoryTable FiniteCategoryTable::chain(Index size) {
    FiniteCategoryTable c;
    std::map<std::pair<Index, Index>, Index> arrow;
    for (Index a = 0; a < size; ++a) c.objects.push_back(std::to_string(a));
    for (Index a = 0; a < size; ++a)
        for (Index b = a; b < size; ++b) {
            arrow[{a, b}] = static_cast<Index>(c.morphisms.size());
            c.morphisms.push_back({std::to_string(a) + "<" + std::to_string(b), a, b});
        }
    for (Index a = 0; a < size; ++a) c.identity.push_back(arrow.at({a, a}));
    for (const auto& [ab, f] : arrow)
        for (Index d = ab.second; d < size; ++d) c.compose[{f, arrow.at({ab.second, d})}] = arrow.at({ab.first, d});
    return c;
}

void OrderedComplexTable::check() const {
    if (vertex_count == 0) fail(ErrorKind::invalid_input, "complex has no vertices");
    std::set<std::vector<Index>> family;
    for (const auto& s : simplices) {
        if (s.empty()) fail(ErrorKind::invalid_input, "complex contains the empty simplex");
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] >= vertex_count) fail(ErrorKind::invalid_input, "complex simplex uses an unknown vertex");
            if (k > 0 && s[k - 1] >= s[k])
                fail(ErrorKind::invalid_input, "complex simplex is not a strictly increasing vertex list");
        }
        family.insert(s);
    }
    for (Index v = 0; v < vertex_count; ++v)
        if (!family.count({v})) fail(ErrorKind::invalid_input, "complex is missing the singleton {" + std::to_string(v) + "}");
    for (const auto& s : family) {
        if (s.size() < 2) continue;
        for (std::size_t k = 0; k < s.size(); ++k) {
            auto face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
            if (!family.count(face)) fail(ErrorKind::invalid_input, "complex family is not downward closed");
        }
    }
}

Index OrderedComplexTable::dimension() const {
    std::size_t top = 1;
    for (const auto& s : simplices) top = std::max(top, s.size());
    return static_cast<Index>(top - 1);
}

OrderedComplexTable OrderedComplexTable::from_facets(Index vertex_count, const std::vector<std::vector<Index>>& facets) {
    std::set<std::vector<Index>> family;
    for (Index v = 0; v < vertex_count; ++v) family.insert({v});
    for (auto facet : facets) {
        std::sort(facet.begin(), facet.end());
        facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
        if (facet.empty()) continue;
        if (facet.size() > 24) fail(ErrorKind::invalid_input, "facet too large");
        const std::size_t k = facet.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            std::vector<Index> sub;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b)) sub.push_back(facet[b]);
            family.insert(sub);
        }
    }
    OrderedComplexTable t;
    t.vertex_count = vertex_count;
    t.simplices.assign(family.begin(), family.end());
    return t;
}

OrderedComplexTable OrderedComplexTable::full_simplex(Index d) {
    std::vector<Index> all(d + 1);
    for (Index v = 0; v <= d; ++v) all[v] = v;
    return from_facets(d + 1, {all});
}

OrderedComplexTable OrderedComplexTable::simplex_boundary(Index d) {
    std::vector<std::vector<Index>> facets;
    for (Index skip = 0; skip <= d; ++skip) {
        std::vector<Index> f;
        for (Index v = 0; v <= d; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    return from_facets(d + 1, facets);
}

}  // namespace simphil
