#include "simphil/builders.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "simphil/error.hpp"

namespace simphil {

namespace {

MapTable identity_maps(int cutoff, std::size_t count, bool faces) {
    MapTable maps(static_cast<std::size_t>(cutoff) + 1);
    std::vector<Index> id(count);
    for (std::size_t k = 0; k < count; ++k) id[k] = static_cast<Index>(k);
    for (int n = 0; n <= cutoff; ++n) {
        if (faces && n >= 1) maps[n].assign(static_cast<std::size_t>(n) + 1, id);
        if (!faces && n < cutoff) maps[n].assign(static_cast<std::size_t>(n) + 1, id);
    }
    return maps;
}

void check_cutoff(int cutoff) {
    if (cutoff < 0) fail(ErrorKind::invalid_input, "negative truncation");
}

}  // namespace

SimplicialSet build_discrete(Index set_size, int cutoff) {
    check_cutoff(cutoff);
    if (set_size == 0) fail(ErrorKind::invalid_input, "discrete simplicial set needs a non-empty set");
    std::vector<std::string> names;
    for (Index k = 0; k < set_size; ++k) names.push_back(std::to_string(k));
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(cutoff) + 1, names);
    Provenance prov{"discrete", "set_size=" + std::to_string(set_size), nullptr, nullptr, {}};
    return SimplicialSet::assemble(cutoff, std::move(labels), identity_maps(cutoff, set_size, true),
                                   identity_maps(cutoff, set_size, false), std::move(prov));
}

SimplicialSet build_discrete_group(const FiniteGroup& group, int cutoff) {
    check_cutoff(cutoff);
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(cutoff) + 1, group.names());
    // Labels are sorted by assemble; identity maps stay identities under any
    // common renumbering.
    Provenance prov{"discrete_group", "order=" + std::to_string(group.order()),
                    std::make_shared<FiniteGroup>(group), nullptr, {}};
    return SimplicialSet::assemble(cutoff, std::move(labels), identity_maps(cutoff, group.order(), true),
                                   identity_maps(cutoff, group.order(), false), std::move(prov));
}

SimplicialSet build_nerve(const FiniteCategoryTable& cat, int cutoff) {
    check_cutoff(cutoff);
    cat.check();
    const auto levels = static_cast<std::size_t>(cutoff) + 1;
    // strings[n] holds composable morphism strings for n >= 1.
    std::vector<std::vector<std::vector<Index>>> strings(levels);
    std::vector<std::map<std::vector<Index>, Index>> where(levels);
    if (cutoff >= 1)
        for (Index f = 0; f < cat.morphisms.size(); ++f) strings[1].push_back({f});
    for (std::size_t n = 2; n < levels; ++n)
        for (const auto& s : strings[n - 1])
            for (Index g = 0; g < cat.morphisms.size(); ++g)
                if (cat.morphisms[s.back()].target == cat.morphisms[g].source) {
                    auto t = s;
                    t.push_back(g);
                    strings[n].push_back(std::move(t));
                }
    for (std::size_t n = 1; n < levels; ++n)
        for (Index k = 0; k < strings[n].size(); ++k) where[n][strings[n][k]] = k;

    std::vector<std::vector<std::string>> labels(levels);
    labels[0] = cat.objects;
    for (std::size_t n = 1; n < levels; ++n)
        for (const auto& s : strings[n]) {
            std::string l = "(";
            for (std::size_t a = 0; a < s.size(); ++a) l += (a ? "," : "") + cat.morphisms[s[a]].name;
            labels[n].push_back(l + ")");
        }

    MapTable faces(levels), degens(levels);
    for (std::size_t n = 1; n < levels; ++n) {
        faces[n].resize(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            for (const auto& s : strings[n]) {
                if (n == 1) {
                    const auto& m = cat.morphisms[s[0]];
                    faces[n][i].push_back(i == 0 ? m.target : m.source);
                    continue;
                }
                std::vector<Index> t;
                if (i == 0) {
                    t.assign(s.begin() + 1, s.end());
                } else if (i == n) {
                    t.assign(s.begin(), s.end() - 1);
                } else {
                    t.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i) - 1);
                    t.push_back(cat.compose.at({s[i - 1], s[i]}));
                    t.insert(t.end(), s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end());
                }
                faces[n][i].push_back(where[n - 1].at(t));
            }
    }
    for (std::size_t n = 0; n + 1 < levels; ++n) {
        degens[n].resize(n + 1);
        if (n == 0) {
            for (Index x = 0; x < cat.objects.size(); ++x)
                degens[0][0].push_back(where[1].at({cat.identity[x]}));
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i)
            for (const auto& s : strings[n]) {
                const Index obj = i == 0 ? cat.morphisms[s[0]].source : cat.morphisms[s[i - 1]].target;
                auto t = s;
                t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), cat.identity[obj]);
                degens[n][i].push_back(where[n + 1].at(t));
            }
    }
    Provenance prov{"nerve_category",
                    "objects=" + std::to_string(cat.objects.size()) + ",morphisms=" +
                        std::to_string(cat.morphisms.size()),
                    nullptr, nullptr, {}};
    return SimplicialSet::assemble(cutoff, std::move(labels), std::move(faces), std::move(degens), std::move(prov));
}

SimplicialSet build_nerve_group(const FiniteGroup& group, int cutoff) {
    SimplicialSet x = build_nerve(FiniteCategoryTable::delooping(group), cutoff);
    Provenance prov{"nerve_group", "order=" + std::to_string(group.order()), std::make_shared<FiniteGroup>(group),
                    nullptr, {}};
    return SimplicialSet::assemble(x.cutoff(),
                                   [&] {
                                       std::vector<std::vector<std::string>> l;
                                       for (int n = 0; n <= x.cutoff(); ++n) l.push_back(x.labels(n));
                                       return l;
                                   }(),
                                   x.faces(), x.degeneracies(), std::move(prov));
}

std::string nerve_group_label(const FiniteGroup& group, const std::vector<Index>& elements) {
    if (elements.empty()) return "*";
    std::string l = "(";
    for (std::size_t a = 0; a < elements.size(); ++a) l += (a ? "," : "") + group.name(elements[a]);
    return l + ")";
}

std::string vertex_sequence_label(const std::vector<Index>& vertices) {
    std::string l = "[";
    for (std::size_t a = 0; a < vertices.size(); ++a) l += (a ? "," : "") + std::to_string(vertices[a]);
    return l + "]";
}

SimplicialSet build_from_complex(const OrderedComplexTable& cx, int cutoff) {
    check_cutoff(cutoff);
    cx.check();
    const std::set<std::vector<Index>> family(cx.simplices.begin(), cx.simplices.end());
    const auto levels = static_cast<std::size_t>(cutoff) + 1;
    std::vector<std::vector<std::vector<Index>>> seqs(levels);
    std::vector<std::map<std::vector<Index>, Index>> where(levels);
    for (Index v = 0; v < cx.vertex_count; ++v) seqs[0].push_back({v});
    for (std::size_t n = 1; n < levels; ++n)
        for (const auto& s : seqs[n - 1])
            for (Index v = s.back(); v < cx.vertex_count; ++v) {
                auto t = s;
                t.push_back(v);
                std::vector<Index> support(t);
                support.erase(std::unique(support.begin(), support.end()), support.end());
                if (family.count(support)) seqs[n].push_back(std::move(t));
            }
    std::vector<std::vector<std::string>> labels(levels);
    for (std::size_t n = 0; n < levels; ++n)
        for (Index k = 0; k < seqs[n].size(); ++k) {
            where[n][seqs[n][k]] = k;
            labels[n].push_back(vertex_sequence_label(seqs[n][k]));
        }
    MapTable faces(levels), degens(levels);
    for (std::size_t n = 1; n < levels; ++n) {
        faces[n].resize(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            for (const auto& s : seqs[n]) {
                auto t = s;
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
                faces[n][i].push_back(where[n - 1].at(t));
            }
    }
    for (std::size_t n = 0; n + 1 < levels; ++n) {
        degens[n].resize(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            for (const auto& s : seqs[n]) {
                auto t = s;
                t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), s[i]);
                degens[n][i].push_back(where[n + 1].at(t));
            }
    }
    Provenance prov{"ordered_complex",
                    "vertices=" + std::to_string(cx.vertex_count) + ",simplices=" +
                        std::to_string(cx.simplices.size()),
                    nullptr, std::make_shared<OrderedComplexTable>(cx), {}};
    return SimplicialSet::assemble(cutoff, std::move(labels), std::move(faces), std::move(degens), std::move(prov));
}

std::string product_label(const std::string& a, const std::string& b) { return a + "|" + b; }

SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y) {
    if (x.cutoff() != y.cutoff())
        fail(ErrorKind::invalid_input, "product operands have different truncations (" + std::to_string(x.cutoff()) +
                                           " vs " + std::to_string(y.cutoff()) + ")");
    const int cutoff = x.cutoff();
    const auto levels = static_cast<std::size_t>(cutoff) + 1;
    std::vector<std::vector<std::string>> labels(levels);
    for (int n = 0; n <= cutoff; ++n)
        for (Index a = 0; a < x.size(n); ++a)
            for (Index b = 0; b < y.size(n); ++b) labels[n].push_back(product_label(x.label(n, a), y.label(n, b)));
    auto pair_index = [&](int n, Index a, Index b) { return static_cast<Index>(a * y.size(n) + b); };
    MapTable faces(levels), degens(levels);
    for (int n = 1; n <= cutoff; ++n) {
        faces[n].resize(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            for (Index a = 0; a < x.size(n); ++a)
                for (Index b = 0; b < y.size(n); ++b)
                    faces[n][i].push_back(pair_index(n - 1, x.face(n, i, a), y.face(n, i, b)));
    }
    for (int n = 0; n < cutoff; ++n) {
        degens[n].resize(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            for (Index a = 0; a < x.size(n); ++a)
                for (Index b = 0; b < y.size(n); ++b)
                    degens[n][i].push_back(pair_index(n + 1, x.degeneracy(n, i, a), y.degeneracy(n, i, b)));
    }
    Provenance prov{"product", "", nullptr, nullptr, {x.provenance(), y.provenance()}};
    return SimplicialSet::assemble(cutoff, std::move(labels), std::move(faces), std::move(degens), std::move(prov));
}

SimplicialSet disjoint_union(const SimplicialSet& x, const SimplicialSet& y) {
    if (x.cutoff() != y.cutoff())
        fail(ErrorKind::invalid_input, "disjoint union operands have different truncations (" +
                                           std::to_string(x.cutoff()) + " vs " + std::to_string(y.cutoff()) + ")");
    const int cutoff = x.cutoff();
    const auto levels = static_cast<std::size_t>(cutoff) + 1;
    std::vector<std::vector<std::string>> labels(levels);
    for (int n = 0; n <= cutoff; ++n) {
        for (const auto& l : x.labels(n)) labels[n].push_back("0:" + l);
        for (const auto& l : y.labels(n)) labels[n].push_back("1:" + l);
    }
    auto join = [](const std::vector<Index>& a, const std::vector<Index>& b, std::size_t shift) {
        std::vector<Index> out(a);
        for (Index v : b) out.push_back(static_cast<Index>(v + shift));
        return out;
    };
    MapTable faces(levels), degens(levels);
    for (int n = 1; n <= cutoff; ++n)
        for (int i = 0; i <= n; ++i) faces[n].push_back(join(x.face_map(n, i), y.face_map(n, i), x.size(n - 1)));
    for (int n = 0; n < cutoff; ++n)
        for (int i = 0; i <= n; ++i)
            degens[n].push_back(join(x.degeneracy_map(n, i), y.degeneracy_map(n, i), x.size(n + 1)));
    Provenance prov{"disjoint_union", "", nullptr, nullptr, {x.provenance(), y.provenance()}};
    return SimplicialSet::assemble(cutoff, std::move(labels), std::move(faces), std::move(degens), std::move(prov));
}

SimplicialSet truncate(const SimplicialSet& x, int cutoff) {
    if (cutoff < 0 || cutoff > x.cutoff())
        fail(ErrorKind::invalid_input, "cannot truncate a " + std::to_string(x.cutoff()) + "-truncated set at " +
                                           std::to_string(cutoff));
    const auto levels = static_cast<std::size_t>(cutoff) + 1;
    std::vector<std::vector<std::string>> labels;
    for (int n = 0; n <= cutoff; ++n) labels.push_back(x.labels(n));
    MapTable faces(x.faces().begin(), x.faces().begin() + static_cast<std::ptrdiff_t>(levels));
    MapTable degens(x.degeneracies().begin(), x.degeneracies().begin() + static_cast<std::ptrdiff_t>(levels));
    degens.back().clear();
    Provenance prov = x.provenance();
    prov.detail += (prov.detail.empty() ? "" : ",") + std::string("truncated=") + std::to_string(cutoff);
    return SimplicialSet::assemble(cutoff, std::move(labels), std::move(faces), std::move(degens), std::move(prov));
}

}  // namespace simphil
