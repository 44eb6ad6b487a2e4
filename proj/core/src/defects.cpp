#include <optional>
#include <string>

#include "simphil/error.hpp"
#include "simphil/hilbert_ops.hpp"

namespace simphil {

namespace {

using Fibers = std::vector<std::vector<Index>>;

Fibers fibers(const std::vector<Index>& map, std::size_t target_size) {
    Fibers f(target_size);
    for (Index k = 0; k < map.size(); ++k) f[map[k]].push_back(k);
    return f;
}

IntMatrix D(const SimplicialSet& x, int n, int i) { return simplicial_operator(x, OperatorKind::face, n, i).matrix; }
IntMatrix S(const SimplicialSet& x, int n, int i) {
    return simplicial_operator(x, OperatorKind::degeneracy, n, i).matrix;
}

bool degrees_in_range(const SimplicialSet& x, DefectKind kind, int n) {
    const int cutoff = x.cutoff();
    switch (kind) {
        case DefectKind::DD: return n >= 1 && n + 1 <= cutoff;
        case DefectKind::DS: return n >= 0 && n + 2 <= cutoff;
        case DefectKind::SD: return n >= 2 && n <= cutoff;
        case DefectKind::SS: return n >= 1 && n + 1 <= cutoff;
    }
    return false;
}

bool indices_admissible(DefectKind kind, int n, int i, int j) {
    if (i < 0 || j > n) return false;
    switch (kind) {
        case DefectKind::DD:
        case DefectKind::DS: return i <= j;
        case DefectKind::SD: return i + 1 < j;
        case DefectKind::SS: return i < j;
    }
    return false;
}

/// Exchange-identity left side.
IntMatrix exchange_side(const SimplicialSet& x, DefectKind kind, int n, int i, int j) {
    switch (kind) {
        case DefectKind::DD:
            return transpose(D(x, n, i)) * D(x, n, j) - D(x, n + 1, j + 1) * transpose(D(x, n + 1, i));
        case DefectKind::DS:
            return transpose(D(x, n + 2, i)) * S(x, n, j) - S(x, n + 1, j + 1) * transpose(D(x, n + 1, i));
        case DefectKind::SD:
            return transpose(S(x, n - 2, i)) * D(x, n, j) - D(x, n - 1, j - 1) * transpose(S(x, n - 1, i));
        case DefectKind::SS:
            return transpose(S(x, n, i)) * S(x, n, j) - S(x, n - 1, j - 1) * transpose(S(x, n - 1, i));
    }
    return {};
}

/// Counting formula: for ω in the fiber F(σ), entry 1 - |{τ in A(σ) : b(τ) = ω}|.
IntMatrix counting_side(const SimplicialSet& x, DefectKind kind, int n, int i, int j) {
    std::size_t rows = 0;
    std::vector<Eigen::Triplet<std::int64_t>> trips;
    const std::size_t cols = x.size(n);
    auto emit = [&](const std::vector<Index>& omegas, const std::vector<Index>& taus, const std::vector<Index>& b,
                    Index sigma) {
        for (Index w : omegas) {
            std::int64_t count = 0;
            for (Index t : taus)
                if (b[t] == w) ++count;
            if (count != 1) trips.emplace_back(w, sigma, 1 - count);
        }
    };
    switch (kind) {
        case DefectKind::DD: {
            rows = x.size(n);
            const Fibers fi = fibers(x.face_map(n, i), x.size(n - 1));
            const Fibers up = fibers(x.face_map(n + 1, i), x.size(n));
            const auto& dj = x.face_map(n, j);
            const auto& b = x.face_map(n + 1, j + 1);
            for (Index s = 0; s < cols; ++s) emit(fi[dj[s]], up[s], b, s);
            break;
        }
        case DefectKind::DS: {
            rows = x.size(n + 2);
            const Fibers fi = fibers(x.face_map(n + 2, i), x.size(n + 1));
            const Fibers up = fibers(x.face_map(n + 1, i), x.size(n));
            const auto& sj = x.degeneracy_map(n, j);
            const auto& b = x.degeneracy_map(n + 1, j + 1);
            for (Index s = 0; s < cols; ++s) emit(fi[sj[s]], up[s], b, s);
            break;
        }
        case DefectKind::SD: {
            rows = x.size(n - 2);
            const Fibers fi = fibers(x.degeneracy_map(n - 2, i), x.size(n - 1));
            const Fibers up = fibers(x.degeneracy_map(n - 1, i), x.size(n));
            const auto& dj = x.face_map(n, j);
            const auto& b = x.face_map(n - 1, j - 1);
            for (Index s = 0; s < cols; ++s) emit(fi[dj[s]], up[s], b, s);
            break;
        }
        case DefectKind::SS: {
            rows = x.size(n);
            const Fibers fi = fibers(x.degeneracy_map(n, i), x.size(n + 1));
            const Fibers up = fibers(x.degeneracy_map(n - 1, i), x.size(n));
            const auto& sj = x.degeneracy_map(n, j);
            const auto& b = x.degeneracy_map(n - 1, j - 1);
            for (Index s = 0; s < cols; ++s) emit(fi[sj[s]], up[s], b, s);
            break;
        }
    }
    IntMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

}  // namespace

std::string to_string(DefectKind kind) {
    switch (kind) {
        case DefectKind::DD: return "DD";
        case DefectKind::DS: return "DS";
        case DefectKind::SD: return "SD";
        case DefectKind::SS: return "SS";
    }
    return "?";
}

std::string to_string(Perfectness p) {
    switch (p) {
        case Perfectness::perfect: return "perfect";
        case Perfectness::quasi_perfect: return "quasi_perfect";
        case Perfectness::semi_perfect: return "semi_perfect";
        case Perfectness::none: return "none";
    }
    return "?";
}

bool defect_in_range(const SimplicialSet& x, DefectKind kind, int n, int i, int j) {
    return degrees_in_range(x, kind, n) && indices_admissible(kind, n, i, j);
}

DefectReport defect(const SimplicialSet& x, DefectKind kind, int n, int i, int j) {
    const std::string tag = to_string(kind) + " defect (n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                            ", j=" + std::to_string(j) + ")";
    if (!degrees_in_range(x, kind, n)) fail(ErrorKind::degree_out_of_range, tag + " needs operators beyond the truncation");
    if (!indices_admissible(kind, n, i, j)) fail(ErrorKind::invalid_input, tag + " has inadmissible indices");
    IntMatrix lhs = pruned(exchange_side(x, kind, n, i, j));
    IntMatrix formula = counting_side(x, kind, n, i, j);
    if (!equal(lhs, formula))
        fail(ErrorKind::invariant_violation, tag + ": exchange identity and counting formula disagree");
    DefectReport r{kind, n, i, j, std::move(lhs), true};
    r.is_zero = is_zero(r.matrix);
    return r;
}

PerfectnessReport perfectness_class(const SimplicialSet& x, int scan_depth) {
    if (scan_depth < 0 || scan_depth > x.cutoff() - 2)
        fail(ErrorKind::degree_out_of_range, "perfectness scan depth must lie in [0, N-2]");
    const int top = scan_depth + 2;
    PerfectnessReport rep;
    rep.scan_depth = scan_depth;
    // Slots: DD diagonal, DD off-diagonal, DS, SD, SS.
    std::vector<std::optional<DefectReport>> first(5);
    auto scan = [&](DefectKind kind, int n_lo, int n_hi) {
        for (int n = n_lo; n <= n_hi; ++n)
            for (int i = 0; i <= n; ++i)
                for (int j = i; j <= n; ++j) {
                    if (!indices_admissible(kind, n, i, j)) continue;
                    DefectReport d = defect(x, kind, n, i, j);
                    ++rep.scanned;
                    if (d.is_zero) continue;
                    std::size_t slot = 0;
                    switch (kind) {
                        case DefectKind::DD: slot = i == j ? 0 : 1; break;
                        case DefectKind::DS: slot = 2; break;
                        case DefectKind::SD: slot = 3; break;
                        case DefectKind::SS: slot = 4; break;
                    }
                    if (!first[slot]) first[slot] = std::move(d);
                }
    };
    scan(DefectKind::DD, 1, top - 1);
    scan(DefectKind::DS, 0, top - 2);
    scan(DefectKind::SD, 2, top);
    scan(DefectKind::SS, 1, top - 1);
    for (auto& w : first)
        if (w) rep.witnesses.push_back(*w);
    if (first[2] || first[3])
        rep.cls = Perfectness::none;
    else if (first[1])
        rep.cls = Perfectness::semi_perfect;
    else if (first[0])
        rep.cls = Perfectness::quasi_perfect;
    else
        rep.cls = Perfectness::perfect;
    return rep;
}

}  // namespace simphil
