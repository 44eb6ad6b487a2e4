#include "spec_parser.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "simphil/builders.hpp"
#include "simphil/error.hpp"
#include "simphil/ez.hpp"
#include "simphil/validate.hpp"

namespace simphil::cli {

using nlohmann::json;

SpecError::SpecError(std::string pointer, const std::string& message)
    : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + message), pointer_(std::move(pointer)) {}

namespace {

std::string escape(const std::string& token) {
    std::string out;
    for (char c : token) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

/// A JSON value together with its pointer.
struct Node {
    const json& value;
    std::string pointer;

    Node at(const std::string& key) const {
        const std::string p = pointer + "/" + escape(key);
        if (!value.is_object()) throw SpecError(pointer, "expected an object");
        auto it = value.find(key);
        if (it == value.end()) throw SpecError(p, "missing required member");
        return {*it, p};
    }
    Node at(std::size_t k) const { return {value.at(k), pointer + "/" + std::to_string(k)}; }
    bool has(const std::string& key) const { return value.is_object() && value.contains(key); }

    [[noreturn]] void error(const std::string& message) const { throw SpecError(pointer, message); }

    const json& object() const {
        if (!value.is_object()) error("expected an object");
        return value;
    }
    std::size_t array_size() const {
        if (!value.is_array()) error("expected an array");
        return value.size();
    }
    long long integer(long long lo, long long hi) const {
        if (!value.is_number_integer()) error("expected an integer");
        const long long v = value.get<long long>();
        if (v < lo || v > hi) error("value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return v;
    }
    std::string string() const {
        if (!value.is_string()) error("expected a string");
        return value.get<std::string>();
    }
    void only(std::initializer_list<const char*> keys) const {
        std::set<std::string> allowed(keys.begin(), keys.end());
        for (auto it = object().begin(); it != value.end(); ++it)
            if (!allowed.count(it.key())) throw SpecError(pointer + "/" + escape(it.key()), "unknown member");
    }
};

constexpr long long max_truncation = 12;
constexpr long long max_order = 64;

template <class F>
auto rethrow_at(const Node& node, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::invalid_input) node.error(e.what());
        throw;
    }
}

FiniteGroup parse_group(const Node& g) {
    g.only({"family", "order", "degree", "table", "names"});
    std::string family = g.has("family") ? g.at("family").string() : (g.has("table") ? "table" : "cyclic");
    if (family == "cyclic") {
        if (g.has("table")) g.at("table").error("a table is not allowed with family cyclic");
        return FiniteGroup::cyclic(static_cast<Index>(g.at("order").integer(1, max_order)));
    }
    if (family == "symmetric") {
        if (g.has("table")) g.at("table").error("a table is not allowed with family symmetric");
        return FiniteGroup::symmetric(static_cast<Index>(g.at("degree").integer(1, 4)));
    }
    if (family != "table") g.at("family").error("unknown group family '" + family + "'");
    const Node t = g.at("table");
    const std::size_t n = t.array_size();
    if (n == 0 || n > static_cast<std::size_t>(max_order)) t.error("group table must have 1 to 64 rows");
    if (g.has("order") && static_cast<std::size_t>(g.at("order").integer(1, max_order)) != n)
        g.at("order").error("order does not match the table");
    std::vector<std::vector<Index>> table(n);
    for (std::size_t a = 0; a < n; ++a) {
        const Node row = t.at(a);
        if (row.array_size() != n) row.error("row length must equal the group order");
        for (std::size_t b = 0; b < n; ++b) table[a].push_back(static_cast<Index>(row.at(b).integer(0, static_cast<long long>(n) - 1)));
    }
    std::vector<std::string> names;
    if (g.has("names")) {
        const Node nm = g.at("names");
        if (nm.array_size() != n) nm.error("one name per element required");
        for (std::size_t a = 0; a < n; ++a) names.push_back(nm.at(a).string());
    }
    return rethrow_at(t, [&] { return FiniteGroup(std::move(table), std::move(names)); });
}

FiniteCategoryTable parse_category(const Node& c) {
    if (c.has("chain")) {
        c.only({"chain"});
        return FiniteCategoryTable::chain(static_cast<Index>(c.at("chain").integer(1, 16)));
    }
    c.only({"objects", "morphisms", "identities", "compose"});
    FiniteCategoryTable cat;
    std::map<std::string, Index> object_index;
    const Node objs = c.at("objects");
    for (std::size_t k = 0; k < objs.array_size(); ++k) {
        std::string name = objs.at(k).string();
        if (!object_index.emplace(name, static_cast<Index>(k)).second) objs.at(k).error("duplicate object '" + name + "'");
        cat.objects.push_back(std::move(name));
    }
    if (cat.objects.empty()) objs.error("a category needs at least one object");
    auto object = [&](const Node& n) {
        auto it = object_index.find(n.string());
        if (it == object_index.end()) n.error("unknown object '" + n.string() + "'");
        return it->second;
    };
    std::map<std::string, Index> morphism_index;
    const Node mors = c.at("morphisms");
    for (std::size_t k = 0; k < mors.array_size(); ++k) {
        const Node m = mors.at(k);
        m.only({"name", "source", "target"});
        std::string name = m.at("name").string();
        if (!morphism_index.emplace(name, static_cast<Index>(k)).second) m.at("name").error("duplicate morphism '" + name + "'");
        cat.morphisms.push_back({std::move(name), object(m.at("source")), object(m.at("target"))});
    }
    auto morphism = [&](const Node& n) {
        auto it = morphism_index.find(n.string());
        if (it == morphism_index.end()) n.error("unknown morphism '" + n.string() + "'");
        return it->second;
    };
    const Node ids = c.at("identities");
    if (ids.array_size() != cat.objects.size()) ids.error("one identity per object required");
    for (std::size_t k = 0; k < cat.objects.size(); ++k) cat.identity.push_back(morphism(ids.at(k)));
    const Node comp = c.at("compose");
    for (std::size_t k = 0; k < comp.array_size(); ++k) {
        const Node e = comp.at(k);
        if (e.array_size() != 3) e.error("compose entries are [f, g, g∘f]");
        const Index f = morphism(e.at(0)), g = morphism(e.at(1)), h = morphism(e.at(2));
        if (!cat.compose.emplace(std::make_pair(f, g), h).second) e.error("pair composed twice");
    }
    rethrow_at(comp, [&] { cat.check(); });
    return cat;
}

OrderedComplexTable parse_complex(const Node& c) {
    if (c.has("full_simplex")) {
        c.only({"full_simplex"});
        return OrderedComplexTable::full_simplex(static_cast<Index>(c.at("full_simplex").integer(0, 8)));
    }
    if (c.has("simplex_boundary")) {
        c.only({"simplex_boundary"});
        return OrderedComplexTable::simplex_boundary(static_cast<Index>(c.at("simplex_boundary").integer(1, 8)));
    }
    c.only({"vertex_count", "facets"});
    const auto v = static_cast<Index>(c.at("vertex_count").integer(1, 32));
    const Node f = c.at("facets");
    std::vector<std::vector<Index>> facets;
    for (std::size_t k = 0; k < f.array_size(); ++k) {
        const Node s = f.at(k);
        std::vector<Index> facet;
        for (std::size_t a = 0; a < s.array_size(); ++a) facet.push_back(static_cast<Index>(s.at(a).integer(0, v - 1)));
        if (facet.empty()) s.error("empty facet");
        facets.push_back(std::move(facet));
    }
    return rethrow_at(f, [&] {
        auto cx = OrderedComplexTable::from_facets(v, facets);
        cx.check();
        return cx;
    });
}

NondegenerateData parse_cells(const Node& c) {
    NondegenerateData data(c.array_size());
    if (data.empty()) c.error("at least the vertex degree is required");
    for (std::size_t n = 0; n < data.size(); ++n) {
        const Node deg = c.at(n);
        for (std::size_t k = 0; k < deg.array_size(); ++k) {
            const Node cell = deg.at(k);
            cell.only({"name", "faces"});
            NondegenerateCell nc{cell.at("name").string(), {}};
            if (n == 0) {
                if (cell.has("faces")) cell.at("faces").error("vertices have no faces");
            } else {
                const Node faces = cell.at("faces");
                if (faces.array_size() != n + 1) faces.error("a degree-" + std::to_string(n) + " cell has " + std::to_string(n + 1) + " faces");
                for (std::size_t i = 0; i <= n; ++i) nc.faces.push_back(faces.at(i).string());
            }
            data[n].push_back(std::move(nc));
        }
    }
    return data;
}

SimplicialSet build(const Node& node, std::optional<int> inherited) {
    node.object();
    const std::string kind = node.at("kind").string();
    int cutoff = 0;
    if (node.has("truncation")) {
        cutoff = static_cast<int>(node.at("truncation").integer(0, max_truncation));
        if (inherited && *inherited != cutoff) node.at("truncation").error("operand truncation must match the enclosing truncation");
    } else if (inherited) {
        cutoff = *inherited;
    } else {
        node.at("truncation");
    }

    SimplicialSet x;
    if (kind == "discrete") {
        node.only({"kind", "truncation", "skeleton_extend", "name", "set_size", "group"});
        if (node.has("group") == node.has("set_size")) node.error("discrete needs exactly one of set_size and group");
        x = node.has("group") ? build_discrete_group(parse_group(node.at("group")), cutoff)
                              : build_discrete(static_cast<Index>(node.at("set_size").integer(1, 4096)), cutoff);
    } else if (kind == "nerve_group") {
        node.only({"kind", "truncation", "skeleton_extend", "name", "group"});
        x = build_nerve_group(parse_group(node.at("group")), cutoff);
    } else if (kind == "nerve_category") {
        node.only({"kind", "truncation", "skeleton_extend", "name", "category"});
        x = build_nerve(parse_category(node.at("category")), cutoff);
    } else if (kind == "ordered_complex") {
        node.only({"kind", "truncation", "skeleton_extend", "name", "complex"});
        x = build_from_complex(parse_complex(node.at("complex")), cutoff);
    } else if (kind == "explicit") {
        node.only({"kind", "truncation", "skeleton_extend", "name", "cells"});
        const Node cells = node.at("cells");
        auto data = parse_cells(cells);
        std::string name = node.has("name") ? node.at("name").string() : "explicit";
        x = rethrow_at(cells, [&] { return build_from_nondegenerate(data, cutoff, Provenance{"explicit", name, {}, {}, {}}); });
    } else if (kind == "product" || kind == "disjoint_union") {
        node.only({"kind", "truncation", "skeleton_extend", "name", "operands"});
        const Node ops = node.at("operands");
        if (ops.array_size() < 2) ops.error("at least two operands required");
        x = build(ops.at(0), cutoff);
        for (std::size_t k = 1; k < ops.value.size(); ++k) {
            SimplicialSet y = build(ops.at(k), cutoff);
            x = kind == "product" ? product(x, y) : disjoint_union(x, y);
        }
    } else {
        node.at("kind").error("unknown kind '" + kind + "'");
    }

    if (node.has("skeleton_extend")) {
        const Node m = node.at("skeleton_extend");
        const int top = static_cast<int>(m.integer(cutoff + 1, max_truncation));
        if (inherited) m.error("skeleton_extend is only allowed on the outermost document");
        x = skeleton_extend(x, top);
    }
    return x;
}

std::string describe(const SimplicialSet& x, const Violation& v) {
    return "relation " + v.relation + " fails at n=" + std::to_string(v.n) + ", i=" + std::to_string(v.i) +
           ", j=" + std::to_string(v.j) + " on simplex '" + x.label(v.n, v.simplex) + "'";
}

}  // namespace

SimplicialSet build_spec(const json& doc) { return build(Node{doc, ""}, std::nullopt); }

SimplicialSet parse_spec(const json& doc) {
    SimplicialSet x = build_spec(doc);
    const ValidationReport rep = validate(x);
    if (!rep.ok()) fail(ErrorKind::invalid_input, "invalid simplicial set: " + describe(x, rep.violations.front()));
    return x;
}

MorphismDocument parse_morphism(const json& doc, const SimplicialSet& source) {
    const Node root{doc, ""};
    root.only({"target", "map"});
    MorphismDocument out;
    const Node target = root.at("target");
    if (target.has("skeleton_extend")) target.at("skeleton_extend").error("not supported for morphism targets");
    out.target = build(target, std::nullopt);
    if (out.target.cutoff() != source.cutoff()) target.error("target truncation must equal the source truncation");
    if (!validate(out.target).ok()) target.error("target is not a valid simplicial set");
    const Node map = root.at("map");
    if (map.value.is_string()) {
        out.map_kind = map.string();
        if (out.map_kind == "identity") {
            for (int n = 0; n <= source.cutoff(); ++n)
                if (source.labels(n) != out.target.labels(n)) map.error("identity needs identical source and target simplices");
            out.phi = identity_morphism(source);
        } else if (out.map_kind == "constant") {
            out.phi = constant_morphism(source, out.target, 0);
        } else {
            map.error("unknown map '" + out.map_kind + "'");
        }
    } else if (map.has("vertex")) {
        map.only({"vertex"});
        const std::string v = map.at("vertex").string();
        auto k = out.target.find(0, v);
        if (!k) map.at("vertex").error("target has no vertex '" + v + "'");
        out.map_kind = "constant";
        out.phi = constant_morphism(source, out.target, *k);
    } else if (map.has("homomorphism")) {
        map.only({"homomorphism"});
        const Node h = map.at("homomorphism");
        const auto& sp = source.provenance();
        const auto& tp = out.target.provenance();
        if (sp.kind != "nerve_group" || tp.kind != "nerve_group") h.error("homomorphisms need nerve_group source and target");
        if (h.array_size() != sp.group->order()) h.error("one image per source element required");
        std::vector<Index> image;
        for (std::size_t a = 0; a < sp.group->order(); ++a)
            image.push_back(static_cast<Index>(h.at(a).integer(0, static_cast<long long>(tp.group->order()) - 1)));
        out.map_kind = "homomorphism";
        out.phi = rethrow_at(h, [&] { return nerve_group_morphism(*sp.group, *tp.group, image, source, out.target); });
    } else if (map.has("labels")) {
        map.only({"labels"});
        const Node l = map.at("labels");
        if (l.array_size() != static_cast<std::size_t>(source.cutoff()) + 1) l.error("one label map per degree required");
        out.map_kind = "labels";
        out.phi.map.resize(l.value.size());
        for (int n = 0; n <= source.cutoff(); ++n) {
            const Node deg = l.at(static_cast<std::size_t>(n));
            deg.object();
            for (Index k = 0; k < source.size(n); ++k) {
                const Node dst = deg.at(source.label(n, k));
                auto t = out.target.find(n, dst.string());
                if (!t) dst.error("target has no degree-" + std::to_string(n) + " simplex '" + dst.string() + "'");
                out.phi.map[static_cast<std::size_t>(n)].push_back(*t);
            }
            if (deg.value.size() != source.size(n)) deg.error("labels that are not source simplices");
        }
    } else {
        map.error("expected \"identity\", \"constant\", {\"vertex\"}, {\"homomorphism\"} or {\"labels\"}");
    }
    const ValidationReport rep = morphism_validate(out.phi, source, out.target);
    if (!rep.ok()) fail(ErrorKind::invalid_input, "map is not a simplicial morphism: " + describe(source, rep.violations.front()));
    return out;
}

}  // namespace simphil::cli
