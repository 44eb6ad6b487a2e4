#include "simphil/morphism.hpp"

#include "simphil/builders.hpp"
#include "simphil/error.hpp"

namespace simphil {

namespace {

/// Element tuple of a nerve simplex label "(a,b,c)" or "*".
std::vector<Index> parse_nerve_label(const FiniteGroup& g, const std::string& label) {
    std::vector<Index> out;
    if (label == "*") return out;
    std::size_t pos = 1;
    while (pos < label.size()) {
        auto end = label.find_first_of(",)", pos);
        const Index e = g.find(label.substr(pos, end - pos));
        if (e == g.order()) fail(ErrorKind::invalid_input, "label '" + label + "' is not a nerve simplex of the group");
        out.push_back(e);
        pos = end + 1;
    }
    return out;
}

}  // namespace

ValidationReport morphism_validate(const SimplicialMorphismTable& phi, const SimplicialSet& x, const SimplicialSet& y) {
    if (x.cutoff() != y.cutoff()) fail(ErrorKind::invalid_input, "morphism between sets of different truncation");
    if (phi.map.size() != static_cast<std::size_t>(x.cutoff()) + 1)
        fail(ErrorKind::invalid_input, "morphism has the wrong number of degrees");
    for (int n = 0; n <= x.cutoff(); ++n) {
        if (phi.map[n].size() != x.size(n)) fail(ErrorKind::invalid_input, "morphism has the wrong domain size");
        for (Index v : phi.map[n])
            if (v >= y.size(n)) fail(ErrorKind::invalid_input, "morphism has an out-of-range image");
    }
    ValidationReport r;
    for (int n = 1; n <= x.cutoff(); ++n)
        for (int i = 0; i <= n; ++i)
            for (Index k = 0; k < x.size(n); ++k) {
                ++r.checks;
                if (phi.map[n - 1][x.face(n, i, k)] != y.face(n, i, phi.map[n][k]))
                    r.violations.push_back({"morphism-face", n, i, 0, k});
            }
    for (int n = 0; n < x.cutoff(); ++n)
        for (int i = 0; i <= n; ++i)
            for (Index k = 0; k < x.size(n); ++k) {
                ++r.checks;
                if (phi.map[n + 1][x.degeneracy(n, i, k)] != y.degeneracy(n, i, phi.map[n][k]))
                    r.violations.push_back({"morphism-degeneracy", n, i, 0, k});
            }
    return r;
}

SimplicialMorphismTable identity_morphism(const SimplicialSet& x) {
    SimplicialMorphismTable phi;
    for (int n = 0; n <= x.cutoff(); ++n) {
        std::vector<Index> m(x.size(n));
        for (Index k = 0; k < m.size(); ++k) m[k] = k;
        phi.map.push_back(std::move(m));
    }
    return phi;
}

SimplicialMorphismTable constant_morphism(const SimplicialSet& x, const SimplicialSet& y, Index vertex) {
    if (x.cutoff() != y.cutoff()) fail(ErrorKind::invalid_input, "morphism between sets of different truncation");
    if (vertex >= y.size(0)) fail(ErrorKind::invalid_input, "constant morphism target is not a vertex");
    SimplicialMorphismTable phi;
    Index v = vertex;
    for (int n = 0; n <= x.cutoff(); ++n) {
        phi.map.emplace_back(x.size(n), v);
        if (n < y.cutoff()) v = y.degeneracy(n, 0, v);
    }
    return phi;
}

SimplicialMorphismTable nerve_group_morphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Index>& hom,
                                             const SimplicialSet& x, const SimplicialSet& y) {
    if (!is_homomorphism(g, h, hom)) fail(ErrorKind::invalid_input, "map is not a group homomorphism");
    if (x.cutoff() != y.cutoff()) fail(ErrorKind::invalid_input, "morphism between sets of different truncation");
    SimplicialMorphismTable phi;
    for (int n = 0; n <= x.cutoff(); ++n) {
        std::vector<Index> m;
        for (Index k = 0; k < x.size(n); ++k) {
            auto elems = parse_nerve_label(g, x.label(n, k));
            for (auto& e : elems) e = hom[e];
            auto target = y.find(n, nerve_group_label(h, elems));
            if (!target) fail(ErrorKind::invalid_input, "image simplex missing from the target nerve");
            m.push_back(*target);
        }
        phi.map.push_back(std::move(m));
    }
    return phi;
}

SimplicialMorphismTable compose(const SimplicialMorphismTable& phi, const SimplicialMorphismTable& psi) {
    if (phi.map.size() != psi.map.size()) fail(ErrorKind::invalid_input, "composing morphisms of different truncation");
    SimplicialMorphismTable out;
    for (std::size_t n = 0; n < phi.map.size(); ++n) {
        std::vector<Index> m;
        for (Index v : phi.map[n]) {
            if (v >= psi.map[n].size()) fail(ErrorKind::invalid_input, "morphisms are not composable");
            m.push_back(psi.map[n][v]);
        }
        out.map.push_back(std::move(m));
    }
    return out;
}

}  // namespace simphil
