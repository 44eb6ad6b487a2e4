#include "simphil/circuits.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "simphil/builders.hpp"
#include "simphil/error.hpp"
#include "simphil/homology.hpp"
#include "spectral.hpp"

namespace simphil {

namespace {

std::vector<Index> parse_nerve_label(const FiniteGroup& g, const std::string& label) {
    std::vector<Index> out;
    if (label == "*") return out;
    if (label.size() < 2 || label.front() != '(' || label.back() != ')')
        fail(ErrorKind::unsupported, "simplex '" + label + "' is not a group nerve simplex");
    std::size_t pos = 1;
    while (pos < label.size()) {
        const auto end = label.find_first_of(",)", pos);
        const Index e = g.find(label.substr(pos, end - pos));
        if (e == g.order()) fail(ErrorKind::unsupported, "simplex '" + label + "' is not a group nerve simplex");
        out.push_back(e);
        pos = end + 1;
    }
    return out;
}

void check_homomorphisms(const SimplicialSet& x, const SimplicialGroupStructure& s) {
    auto check = [&](const char* kind, int n, int i, const std::vector<Index>& map, int target) {
        const std::size_t size = x.size(n);
        for (Index a = 0; a < size; ++a)
            for (Index b = 0; b < size; ++b)
                if (map[s.multiply(n, a, b)] != s.multiply(target, map[a], map[b]))
                    fail(ErrorKind::unsupported, std::string(kind) + "_{" + std::to_string(n) + "," + std::to_string(i) +
                                                     "} is not a homomorphism: " + x.label(n, a) + " * " +
                                                     x.label(n, b) + " = " + x.label(n, s.multiply(n, a, b)));
    };
    for (int n = 1; n <= x.cutoff(); ++n)
        for (int i = 0; i <= n; ++i) check("d", n, i, x.face_map(n, i), n - 1);
    for (int n = 0; n < x.cutoff(); ++n)
        for (int i = 0; i <= n; ++i) check("s", n, i, x.degeneracy_map(n, i), n + 1);
}

IntMatrix block_sum(const std::vector<IntMatrix>& blocks, const std::vector<std::size_t>& row_off,
                    const std::vector<std::size_t>& col_off, std::size_t rows, std::size_t cols) {
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (Eigen::Index k = 0; k < blocks[b].outerSize(); ++k)
            for (IntMatrix::InnerIterator it(blocks[b], k); it; ++it)
                trips.emplace_back(static_cast<Eigen::Index>(row_off[b]) + it.row(),
                                   static_cast<Eigen::Index>(col_off[b]) + it.col(), it.value());
    IntMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

}  // namespace

SimplicialGroupStructure attach_group_structure(const SimplicialSet& x) {
    const Provenance& p = x.provenance();
    if (!p.group || (p.kind != "discrete_group" && p.kind != "nerve_group"))
        fail(ErrorKind::unsupported, "group structures are available for discrete groups and abelian group nerves only");
    const FiniteGroup& g = *p.group;
    SimplicialGroupStructure s;
    for (int n = 0; n <= x.cutoff(); ++n) {
        const std::size_t size = x.size(n);
        std::vector<std::vector<Index>> elems(size);
        std::map<std::vector<Index>, Index> index;
        for (Index k = 0; k < size; ++k) {
            if (p.kind == "discrete_group") {
                const Index e = g.find(x.label(n, k));
                if (e == g.order()) fail(ErrorKind::unsupported, "simplex '" + x.label(n, k) + "' is not a group element");
                elems[k] = {e};
            } else {
                elems[k] = parse_nerve_label(g, x.label(n, k));
            }
            index[elems[k]] = k;
        }
        std::vector<std::vector<Index>> mul(size, std::vector<Index>(size));
        std::vector<Index> inv(size);
        for (Index a = 0; a < size; ++a) {
            std::vector<Index> ia(elems[a].size());
            for (std::size_t c = 0; c < ia.size(); ++c) ia[c] = g.inverse(elems[a][c]);
            inv[a] = index.at(ia);
            for (Index b = 0; b < size; ++b) {
                std::vector<Index> ab(elems[a].size());
                for (std::size_t c = 0; c < ab.size(); ++c) ab[c] = g.mul(elems[a][c], elems[b][c]);
                mul[a][b] = index.at(ab);
            }
        }
        std::vector<Index> unit_elems(p.kind == "discrete_group" ? 1 : static_cast<std::size_t>(n), g.identity());
        s.unit.push_back(index.at(unit_elems));
        s.mul.push_back(std::move(mul));
        s.inverse.push_back(std::move(inv));
    }
    check_homomorphisms(x, s);
    return s;
}

IntMatrix SimpleCircuit::matrix(int n) const {
    const auto& p = perm.at(static_cast<std::size_t>(n));
    IntMatrix m(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(p.size()));
    for (std::size_t k = 0; k < p.size(); ++k) m.insert(p[k], static_cast<Eigen::Index>(k)) = 1;
    m.makeCompressed();
    return m;
}

SimpleCircuit identity_circuit(const SimplicialSet& x) { return {identity_morphism(x).map}; }

SimpleCircuit compose(const SimpleCircuit& a, const SimpleCircuit& b) {
    return {compose(SimplicialMorphismTable{a.perm}, SimplicialMorphismTable{b.perm}).map};
}

SimpleCircuit inverse(const SimpleCircuit& c) {
    SimpleCircuit out{c.perm};
    for (std::size_t n = 0; n < c.perm.size(); ++n)
        for (Index k = 0; k < c.perm[n].size(); ++k) {
            if (c.perm[n][k] >= c.perm[n].size()) fail(ErrorKind::invalid_input, "circuit component is not a permutation");
            out.perm[n][c.perm[n][k]] = k;
        }
    return out;
}

ProductCircuit circuit_from_morphism(const SimplicialMorphismTable& phi, const SimplicialSet& x,
                                     const SimplicialSet& target, const SimplicialGroupStructure& group) {
    if (!morphism_validate(phi, x, target).ok()) fail(ErrorKind::invalid_input, "map is not a simplicial morphism");
    if (group.mul.size() != static_cast<std::size_t>(target.cutoff()) + 1)
        fail(ErrorKind::invalid_input, "group structure does not match the target");
    ProductCircuit out{product(x, target), {}};
    for (int n = 0; n <= x.cutoff(); ++n) {
        std::vector<Index> perm(out.space.size(n));
        for (Index a = 0; a < x.size(n); ++a)
            for (Index b = 0; b < target.size(n); ++b) {
                const Index from = *out.space.find(n, product_label(x.label(n, a), target.label(n, b)));
                const Index image = group.multiply(n, b, phi.map[n][a]);
                perm[from] = *out.space.find(n, product_label(x.label(n, a), target.label(n, image)));
            }
        out.circuit.perm.push_back(std::move(perm));
    }
    return out;
}

ValidationReport validate_circuit(const SimplicialSet& x, const SimpleCircuit& c, std::size_t max_arity) {
    const int cutoff = x.cutoff();
    if (c.perm.size() != static_cast<std::size_t>(cutoff) + 1)
        fail(ErrorKind::invalid_input, "circuit has the wrong number of degrees");
    ValidationReport r;
    bool permutations = true;
    for (int n = 0; n <= cutoff; ++n) {
        if (c.perm[n].size() != x.size(n)) fail(ErrorKind::invalid_input, "circuit component has the wrong size");
        std::vector<bool> hit(x.size(n), false);
        ++r.checks;
        for (Index k = 0; k < x.size(n); ++k) {
            const Index v = c.perm[n][k];
            if (v >= x.size(n) || hit[v]) {
                r.violations.push_back({"circuit-unitary", n, 0, 0, k});
                permutations = false;
                break;
            }
            hit[v] = true;
        }
    }
    if (!permutations) return r;
    for (int n = 1; n <= cutoff; ++n)
        for (int i = 0; i <= n; ++i) {
            ++r.checks;
            for (Index k = 0; k < x.size(n); ++k)
                if (c.perm[n - 1][x.face(n, i, k)] != x.face(n, i, c.perm[n][k])) {
                    r.violations.push_back({"circuit-face", n, i, 0, k});
                    break;
                }
        }
    for (int n = 0; n < cutoff; ++n)
        for (int i = 0; i <= n; ++i) {
            ++r.checks;
            for (Index k = 0; k < x.size(n); ++k)
                if (c.perm[n + 1][x.degeneracy(n, i, k)] != x.degeneracy(n, i, c.perm[n][k])) {
                    r.violations.push_back({"circuit-degeneracy", n, i, 0, k});
                    break;
                }
        }

    // Block circuits on A-subregisters.
    std::vector<IntMatrix> u;
    for (int n = 0; n <= cutoff; ++n) u.push_back(c.matrix(n));
    auto op = [&](int n, int sign, int i) {
        return simplicial_operator(x, sign < 0 ? OperatorKind::face : OperatorKind::degeneracy, n, i).matrix;
    };
    Index instance = 0;
    const int degrees = cutoff + 1;
    for (unsigned mask = 1; mask < (1u << degrees); ++mask) {
        std::vector<int> a;
        for (int n = 0; n < degrees; ++n)
            if (mask & (1u << n)) a.push_back(n);
        if (a.size() > max_arity) continue;
        const std::size_t p = a.size();
        for (unsigned signs = 0; signs < (1u << p); ++signs) {
            std::vector<int> alpha(p);
            bool ok = true;
            for (std::size_t k = 0; k < p; ++k) {
                alpha[k] = (signs & (1u << k)) ? 1 : -1;
                if (a[k] == 0 && alpha[k] < 0) ok = false;
                if (a[k] + alpha[k] > cutoff) ok = false;
            }
            if (!ok) continue;
            std::vector<int> t;
            for (std::size_t k = 0; k < p; ++k) t.push_back(a[k] + alpha[k]);
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
            std::map<int, std::size_t> src_off, dst_off;
            std::size_t src_dim = 0, dst_dim = 0;
            for (int n : a) src_off[n] = std::exchange(src_dim, src_dim + x.size(n));
            for (int n : t) dst_off[n] = std::exchange(dst_dim, dst_dim + x.size(n));
            std::vector<IntMatrix> ua, ut;
            std::vector<std::size_t> a_off, t_off;
            for (int n : a) {
                ua.push_back(u[n]);
                a_off.push_back(src_off[n]);
            }
            for (int n : t) {
                ut.push_back(u[n]);
                t_off.push_back(dst_off[n]);
            }
            const IntMatrix u_a = block_sum(ua, a_off, a_off, src_dim, src_dim);
            const IntMatrix u_t = block_sum(ut, t_off, t_off, dst_dim, dst_dim);
            // Enumerate i in Π_{n∈A} {0..n}.
            std::vector<int> idx(p, 0);
            while (true) {
                std::vector<IntMatrix> blocks;
                std::vector<std::size_t> rows, cols;
                for (std::size_t k = 0; k < p; ++k) {
                    blocks.push_back(op(a[k], alpha[k], idx[k]));
                    rows.push_back(dst_off[a[k] + alpha[k]]);
                    cols.push_back(src_off[a[k]]);
                }
                const IntMatrix xa = block_sum(blocks, rows, cols, dst_dim, src_dim);
                ++r.checks;
                if (!equal(xa * u_a, u_t * xa))
                    r.violations.push_back({"circuit-p-ary", static_cast<int>(p), idx[0], alpha[0], instance});
                ++instance;
                std::size_t k = 0;
                while (k < p && ++idx[k] > a[k]) idx[k++] = 0;
                if (k == p) break;
            }
        }
    }
    return r;
}

HomologyAction homology_action(const SimplicialSet& x, const SimpleCircuit& c, int n) {
    const int cutoff = x.cutoff();
    if (n < 0 || n > cutoff - 1) fail(ErrorKind::degree_out_of_range, "homology action needs 0 <= n <= N-1");
    const IntMatrix un = c.matrix(n);
    auto commutes = [&](int m) {
        return equal(c.matrix(m - 1) * boundary_operator(x, BoundaryKind::QD, m).matrix,
                     boundary_operator(x, BoundaryKind::QD, m).matrix * c.matrix(m));
    };
    if ((n >= 1 && !commutes(n)) || !commutes(n + 1))
        fail(ErrorKind::invariant_violation, "circuit does not commute with the face boundary operator");
    const IntMatrix h = hodge_laplacian(x, LaplacianKind::DD, n).matrix;
    if (!equal(h * un, un * h)) fail(ErrorKind::invariant_violation, "circuit does not commute with H_DD");
    const IntMatrix pi = auxiliary_operator(x, AuxKind::Pi, n).matrix;
    if (!equal(pi * un, un * pi)) fail(ErrorKind::invariant_violation, "circuit does not commute with Π_n");

    HomologyAction out;
    const Eigen::MatrixXd k = harmonic_basis(x, n);
    out.full = k.transpose() * detail::to_dense(un) * k;

    const auto nd = nondegenerate(x, n);
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(x.size(n)), static_cast<Eigen::Index>(nd.size()));
    for (std::size_t col = 0; col < nd.size(); ++col) e(nd[col], static_cast<Eigen::Index>(col)) = 1.0;
    const Eigen::MatrixXd cu = e.transpose() * detail::to_dense(un) * e;
    const auto spec = detail::symmetric_spectrum(detail::to_dense(normalized_laplacian(x, n).matrix), "normalized H_DD");
    const Eigen::MatrixXd kc = spec.kernel();
    out.normalized = kc.transpose() * cu * kc;

    auto unitarity = [](const Eigen::MatrixXd& m) {
        if (m.size() == 0) return 0.0;
        return detail::max_abs(m.transpose() * m - Eigen::MatrixXd::Identity(m.cols(), m.cols()));
    };
    out.unitarity_residual = std::max(unitarity(out.full), unitarity(out.normalized));
    return out;
}

}  // namespace simphil
