#include "simphil/hilbert_ops.hpp"

#include <string>

#include "simphil/error.hpp"

namespace simphil {

namespace {

IntMatrix map_matrix(const std::vector<Index>& map, std::size_t rows) {
    IntMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(map.size()));
    m.reserve(Eigen::VectorXi::Constant(static_cast<Eigen::Index>(map.size()), 1));
    for (std::size_t c = 0; c < map.size(); ++c)
        m.insert(static_cast<Eigen::Index>(map[c]), static_cast<Eigen::Index>(c)) = 1;
    m.makeCompressed();
    return m;
}

std::string where(int n, int i) { return "(n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")"; }

IntMatrix D(const SimplicialSet& x, int n, int i) {
    return simplicial_operator(x, OperatorKind::face, n, i).matrix;
}
IntMatrix S(const SimplicialSet& x, int n, int i) {
    return simplicial_operator(x, OperatorKind::degeneracy, n, i).matrix;
}

}  // namespace

LinearOperator simplicial_operator(const SimplicialSet& x, OperatorKind kind, int n, int i) {
    const int cutoff = x.cutoff();
    if (kind == OperatorKind::face) {
        if (n < 1 || n > cutoff || i < 0 || i > n)
            fail(ErrorKind::invalid_input, "face operator out of range " + where(n, i));
        return {n, n - 1, map_matrix(x.face_map(n, i), x.size(n - 1))};
    }
    if (n < 0 || n >= cutoff || i < 0 || i > n)
        fail(ErrorKind::invalid_input, "degeneracy operator out of range " + where(n, i));
    return {n, n + 1, map_matrix(x.degeneracy_map(n, i), x.size(n + 1))};
}

LinearOperator adjoint(const LinearOperator& a) { return {a.target_degree, a.source_degree, transpose(a.matrix)}; }

std::vector<Index> preimage_set(const SimplicialSet& x, OperatorKind kind, int n, int i, Index target) {
    const auto& map = kind == OperatorKind::face ? x.face_map(n, i) : x.degeneracy_map(n, i);
    std::vector<Index> out;
    for (Index k = 0; k < map.size(); ++k)
        if (map[k] == target) out.push_back(k);
    return out;
}

ValidationReport hilbert_identities(const SimplicialSet& x) {
    ValidationReport r;
    const int cutoff = x.cutoff();
    auto check = [&](const char* rel, int n, int i, int j, const IntMatrix& a, const IntMatrix& b) {
        ++r.checks;
        if (!equal(a, b)) r.violations.push_back({rel, n, i, j, 0});
    };
    for (int n = 2; n <= cutoff; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                check("face-face", n, i, j, D(x, n - 1, i) * D(x, n, j), D(x, n - 1, j - 1) * D(x, n, i));
    for (int n = 0; n + 1 <= cutoff; ++n)
        for (int j = 0; j <= n; ++j) {
            const IntMatrix s = S(x, n, j);
            check("isometry", n, j, j, transpose(s) * s, identity_matrix(x.size(n)));
            for (int i = 0; i <= n + 1; ++i) {
                const IntMatrix lhs = D(x, n + 1, i) * s;
                if (i < j)
                    check("face-degeneracy-low", n, i, j, lhs, S(x, n - 1, j - 1) * D(x, n, i));
                else if (i == j || i == j + 1)
                    check("face-degeneracy-id", n, i, j, lhs, identity_matrix(x.size(n)));
                else
                    check("face-degeneracy-high", n, i, j, lhs, S(x, n - 1, j) * D(x, n, i - 1));
            }
        }
    for (int n = 0; n + 2 <= cutoff; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                check("degeneracy-degeneracy", n, i, j, S(x, n + 1, i) * S(x, n, j), S(x, n + 1, j + 1) * S(x, n, i));
    return r;
}

LinearOperator auxiliary_operator(const SimplicialSet& x, AuxKind kind, int n, int i) {
    const int cutoff = x.cutoff();
    auto bad = [&] { fail(ErrorKind::invalid_input, "auxiliary operator out of range " + where(n, i)); };
    if (n < 0 || n > cutoff) bad();
    switch (kind) {
        case AuxKind::Omega:
            if (n + 1 > cutoff || i < 0 || i > n + 1) bad();
            return {n, n, pruned(D(x, n + 1, i) * transpose(D(x, n + 1, i)))};
        case AuxKind::Theta:
            if (i < 0 || i > n) bad();
            if (n == 0) return {0, 0, zero_matrix(x.size(0), x.size(0))};
            return {n, n, pruned(transpose(D(x, n, i)) * D(x, n, i))};
        case AuxKind::Gamma:
            if (n + 1 > cutoff || i < 0 || i > n) bad();
            return {n, n, pruned(D(x, n + 1, i + 1) * transpose(D(x, n + 1, i)))};
        case AuxKind::PiI:
            if (i < 0 || i > n - 1) bad();
            return {n, n, pruned(S(x, n - 1, i) * transpose(S(x, n - 1, i)))};
        case AuxKind::Pi: {
            const IntMatrix one = identity_matrix(x.size(n));
            IntMatrix prod = one;
            for (int k = 0; k < n; ++k) {
                const IntMatrix pik = S(x, n - 1, k) * transpose(S(x, n - 1, k));
                prod = pruned(prod * (one - pik));
            }
            IntMatrix pi = pruned(one - prod);
            for (Index k = 0; k < x.size(n); ++k) {
                const bool deg = is_degenerate(x, {n, k});
                if ((pi.coeff(k, k) == 1) != deg)
                    fail(ErrorKind::invariant_violation,
                         "degeneracy projector disagrees with the degeneracy predicate at " + x.label(n, k));
            }
            return {n, n, pi};
        }
    }
    bad();
    return {};
}

LinearOperator morphism_operator(const SimplicialMorphismTable& phi, const SimplicialSet& x, const SimplicialSet& y,
                                 int n) {
    if (n < 0 || n > x.cutoff() || static_cast<std::size_t>(n) >= phi.map.size() || phi.map[n].size() != x.size(n))
        fail(ErrorKind::invalid_input, "morphism operator out of range");
    for (Index v : phi.map[n])
        if (v >= y.size(n)) fail(ErrorKind::invalid_input, "morphism image out of range");
    return {n, n, map_matrix(phi.map[n], y.size(n))};
}

IntMatrix identity_matrix(std::size_t size) {
    IntMatrix m(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
    m.setIdentity();
    return m;
}

IntMatrix zero_matrix(std::size_t rows, std::size_t cols) {
    return IntMatrix(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
}

IntMatrix transpose(const IntMatrix& a) { return IntMatrix(a.transpose()); }

IntMatrix pruned(IntMatrix a) {
    a.prune([](Eigen::Index, Eigen::Index, const std::int64_t& v) { return v != 0; });
    return a;
}

bool is_zero(const IntMatrix& a) {
    for (Eigen::Index k = 0; k < a.outerSize(); ++k)
        for (IntMatrix::InnerIterator it(a, k); it; ++it)
            if (it.value() != 0) return false;
    return true;
}

bool equal(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return is_zero(a - b);
}

std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> coordinates(const IntMatrix& a) {
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> out;
    for (Eigen::Index k = 0; k < a.outerSize(); ++k)
        for (IntMatrix::InnerIterator it(a, k); it; ++it)
            if (it.value() != 0)
                out.emplace_back(static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col()), it.value());
    return out;
}

}  // namespace simphil
