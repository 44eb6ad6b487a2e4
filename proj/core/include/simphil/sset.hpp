#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "simphil/group.hpp"
#include "simphil/tables.hpp"

namespace simphil {

/// Construction recipe recorded on every simplicial set.
struct Provenance {
    std::string kind;
    std::string detail;
    std::shared_ptr<const FiniteGroup> group;
    std::shared_ptr<const OrderedComplexTable> complex;
    std::vector<Provenance> operands;
};

struct SimplexRef {
    int degree = 0;
    Index index = 0;

    friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

/// Face and degeneracy maps stored as index tables, `maps[n][i][k]`.
using MapTable = std::vector<std::vector<std::vector<Index>>>;

/// N-truncated simplicial set: simplex labels in degrees 0..N with total
/// face maps d_{n,i} (1 <= n <= N) and degeneracy maps s_{n,i} (n <= N-1).
///
/// Immutable after construction.  Labels are unique per degree and list
/// order is lexicographic in the labels.
class TruncatedSimplicialSet {
public:
    TruncatedSimplicialSet() = default;

    /// Takes labels and maps in arbitrary per-degree order, sorts every degree
    /// lexicographically and renumbers the maps.  Throws invalid-input on
    /// shape errors, out-of-range entries or duplicate labels.
    static TruncatedSimplicialSet assemble(int cutoff, std::vector<std::vector<std::string>> labels, MapTable faces,
                                           MapTable degeneracies, Provenance provenance);

    int cutoff() const noexcept { return cutoff_; }
    std::size_t size(int n) const { return labels_.at(static_cast<std::size_t>(n)).size(); }
    std::size_t total_size() const;
    const std::string& label(int n, Index k) const { return labels_[static_cast<std::size_t>(n)][k]; }
    const std::vector<std::string>& labels(int n) const { return labels_.at(static_cast<std::size_t>(n)); }
    std::optional<Index> find(int n, std::string_view label) const;

    /// d_{n,i}, 1 <= n <= N, 0 <= i <= n.
    Index face(int n, int i, Index k) const { return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][k]; }
    /// s_{n,i}, 0 <= n <= N-1, 0 <= i <= n.
    Index degeneracy(int n, int i, Index k) const {
        return degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][k];
    }
    const std::vector<Index>& face_map(int n, int i) const;
    const std::vector<Index>& degeneracy_map(int n, int i) const;
    const MapTable& faces() const noexcept { return faces_; }
    const MapTable& degeneracies() const noexcept { return degeneracies_; }

    const Provenance& provenance() const noexcept { return provenance_; }

private:
    int cutoff_ = -1;
    std::vector<std::vector<std::string>> labels_;
    MapTable faces_;
    MapTable degeneracies_;
    std::vector<std::unordered_map<std::string, Index>> lookup_;
    Provenance provenance_;
};

using SimplicialSet = TruncatedSimplicialSet;

/// True iff s_{n-1,i} d_{n,i} σ = σ for some i < n.  Vertices are never degenerate.
bool is_degenerate(const SimplicialSet& x, SimplexRef sigma);
/// Indices of the non-degenerate simplices of degree n, in list order.
std::vector<Index> nondegenerate(const SimplicialSet& x, int n);

}  // namespace simphil
