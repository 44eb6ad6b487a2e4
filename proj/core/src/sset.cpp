#include "simphil/sset.hpp"

#include <algorithm>
#include <numeric>

#include "simphil/error.hpp"

namespace simphil {

namespace {

void check_map(const std::vector<Index>& map, std::size_t domain, std::size_t codomain, const std::string& what) {
    if (map.size() != domain) fail(ErrorKind::invalid_input, what + " has the wrong length");
    for (Index v : map)
        if (v >= codomain) fail(ErrorKind::invalid_input, what + " has an out-of-range entry");
}

}  // namespace

TruncatedSimplicialSet TruncatedSimplicialSet::assemble(int cutoff, std::vector<std::vector<std::string>> labels,
                                                        MapTable faces, MapTable degeneracies, Provenance provenance) {
    if (cutoff < 0) fail(ErrorKind::invalid_input, "negative truncation");
    const auto levels = static_cast<std::size_t>(cutoff) + 1;
    if (labels.size() != levels) fail(ErrorKind::invalid_input, "simplex lists do not match the truncation");
    faces.resize(levels);
    degeneracies.resize(levels);
    for (std::size_t n = 0; n < levels; ++n)
        if (labels[n].empty()) fail(ErrorKind::invalid_input, "degree " + std::to_string(n) + " has no simplices");

    // Shape checks before renumbering.
    for (std::size_t n = 1; n < levels; ++n) {
        if (faces[n].size() != n + 1) fail(ErrorKind::invalid_input, "face maps missing in degree " + std::to_string(n));
        for (std::size_t i = 0; i <= n; ++i)
            check_map(faces[n][i], labels[n].size(), labels[n - 1].size(),
                      "face map d(" + std::to_string(n) + "," + std::to_string(i) + ")");
    }
    if (!faces[0].empty()) fail(ErrorKind::invalid_input, "degree 0 carries face maps");
    for (std::size_t n = 0; n + 1 < levels; ++n) {
        if (degeneracies[n].size() != n + 1)
            fail(ErrorKind::invalid_input, "degeneracy maps missing in degree " + std::to_string(n));
        for (std::size_t i = 0; i <= n; ++i)
            check_map(degeneracies[n][i], labels[n].size(), labels[n + 1].size(),
                      "degeneracy map s(" + std::to_string(n) + "," + std::to_string(i) + ")");
    }
    if (!degeneracies[levels - 1].empty()) fail(ErrorKind::invalid_input, "top degree carries degeneracy maps");

    // Sort each degree and renumber: perm[n][old] = new.
    std::vector<std::vector<Index>> perm(levels);
    TruncatedSimplicialSet x;
    x.cutoff_ = cutoff;
    x.labels_.resize(levels);
    x.lookup_.resize(levels);
    for (std::size_t n = 0; n < levels; ++n) {
        std::vector<Index> order(labels[n].size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](Index a, Index b) { return labels[n][a] < labels[n][b]; });
        perm[n].resize(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            perm[n][order[k]] = static_cast<Index>(k);
            x.labels_[n].push_back(std::move(labels[n][order[k]]));
        }
        for (std::size_t k = 0; k < x.labels_[n].size(); ++k) {
            if (!x.lookup_[n].emplace(x.labels_[n][k], static_cast<Index>(k)).second)
                fail(ErrorKind::invalid_input, "duplicate simplex label '" + x.labels_[n][k] + "' in degree " +
                                                   std::to_string(n));
        }
    }
    auto renumber = [&](const std::vector<Index>& map, std::size_t from, std::size_t to) {
        std::vector<Index> out(map.size());
        for (std::size_t old = 0; old < map.size(); ++old) out[perm[from][old]] = perm[to][map[old]];
        return out;
    };
    x.faces_.resize(levels);
    x.degeneracies_.resize(levels);
    for (std::size_t n = 1; n < levels; ++n)
        for (std::size_t i = 0; i <= n; ++i) x.faces_[n].push_back(renumber(faces[n][i], n, n - 1));
    for (std::size_t n = 0; n + 1 < levels; ++n)
        for (std::size_t i = 0; i <= n; ++i) x.degeneracies_[n].push_back(renumber(degeneracies[n][i], n, n + 1));
    x.provenance_ = std::move(provenance);
    return x;
}

std::size_t TruncatedSimplicialSet::total_size() const {
    std::size_t t = 0;
    for (const auto& l : labels_) t += l.size();
    return t;
}

std::optional<Index> TruncatedSimplicialSet::find(int n, std::string_view label) const {
    if (n < 0 || n > cutoff_) return std::nullopt;
    const auto& m = lookup_[static_cast<std::size_t>(n)];
    auto it = m.find(std::string(label));
    if (it == m.end()) return std::nullopt;
    return it->second;
}

const std::vector<Index>& TruncatedSimplicialSet::face_map(int n, int i) const {
    if (n < 1 || n > cutoff_ || i < 0 || i > n)
        fail(ErrorKind::degree_out_of_range, "face map d(" + std::to_string(n) + "," + std::to_string(i) + ")");
    return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

const std::vector<Index>& TruncatedSimplicialSet::degeneracy_map(int n, int i) const {
    if (n < 0 || n >= cutoff_ || i < 0 || i > n)
        fail(ErrorKind::degree_out_of_range, "degeneracy map s(" + std::to_string(n) + "," + std::to_string(i) + ")");
    return degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

bool is_degenerate(const SimplicialSet& x, SimplexRef sigma) {
    const int n = sigma.degree;
    if (n < 0 || n > x.cutoff() || sigma.index >= x.size(n))
        fail(ErrorKind::invalid_input, "simplex reference out of range");
    for (int i = 0; i < n; ++i)
        if (x.degeneracy(n - 1, i, x.face(n, i, sigma.index)) == sigma.index) return true;
    return false;
}

std::vector<Index> nondegenerate(const SimplicialSet& x, int n) {
    std::vector<Index> out;
    for (Index k = 0; k < x.size(n); ++k)
        if (!is_degenerate(x, {n, k})) out.push_back(k);
    return out;
}

}  // namespace simphil
