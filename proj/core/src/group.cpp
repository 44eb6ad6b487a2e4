#include "simphil/group.hpp"

#include <algorithm>
#include <numeric>

#include "simphil/error.hpp"

namespace simphil {

FiniteGroup::FiniteGroup(std::vector<std::vector<Index>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
    const std::size_t n = table_.size();
    if (n == 0) fail(ErrorKind::invalid_input, "group table is empty");
    for (const auto& row : table_) {
        if (row.size() != n) fail(ErrorKind::invalid_input, "group table is not square");
        for (Index v : row)
            if (v >= n) fail(ErrorKind::invalid_input, "group law violated: closure");
    }
    if (names_.empty()) {
        for (std::size_t k = 0; k < n; ++k) names_.push_back(std::to_string(k));
    }
    if (names_.size() != n) fail(ErrorKind::invalid_input, "group element name count does not match order");
    for (const auto& s : names_) {
        if (s.empty() || s.find_first_of(",()[]|") != std::string::npos)
            fail(ErrorKind::invalid_input, "group element name '" + s + "' is empty or contains a reserved character");
    }
    {
        auto sorted = names_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ErrorKind::invalid_input, "group element names are not unique");
    }
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    fail(ErrorKind::invalid_input, "group law violated: associativity at (" + names_[a] + "," +
                                                       names_[b] + "," + names_[c] + ")");
    bool found = false;
    for (Index e = 0; e < n && !found; ++e) {
        bool unit = true;
        for (Index a = 0; a < n && unit; ++a) unit = table_[e][a] == a && table_[a][e] == a;
        if (unit) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) fail(ErrorKind::invalid_input, "group law violated: unit");
    inverse_.assign(n, static_cast<Index>(n));
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
        if (inverse_[a] == n) fail(ErrorKind::invalid_input, "group law violated: inverse of " + names_[a]);
    }
}

FiniteGroup FiniteGroup::cyclic(Index order) {
    if (order == 0) fail(ErrorKind::invalid_input, "cyclic group of order 0");
    std::vector<std::vector<Index>> t(order, std::vector<Index>(order));
    for (Index a = 0; a < order; ++a)
        for (Index b = 0; b < order; ++b) t[a][b] = (a + b) % order;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(Index degree) {
    if (degree == 0) fail(ErrorKind::invalid_input, "symmetric group on 0 letters");
    std::vector<std::vector<Index>> perms;
    std::vector<Index> p(degree);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const auto n = static_cast<Index>(perms.size());
    auto index_of = [&](const std::vector<Index>& q) {
        return static_cast<Index>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    // (a*b)(x) = a(b(x)).
    std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
    std::vector<Index> q(degree);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            for (Index x = 0; x < degree; ++x) q[x] = perms[a][perms[b][x]];
            t[a][b] = index_of(q);
        }
    std::vector<std::string> names;
    for (const auto& perm : perms) {
        std::string s = "p";
        for (Index x : perm) s += std::to_string(x);
        names.push_back(s);
    }
    return FiniteGroup(std::move(t), std::move(names));
}

bool FiniteGroup::is_abelian() const noexcept {
    for (Index a = 0; a < order(); ++a)
        for (Index b = a + 1; b < order(); ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

Index FiniteGroup::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return static_cast<Index>(it - names_.begin());
}

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<Index>& image) {
    if (image.size() != from.order()) return false;
    for (Index v : image)
        if (v >= to.order()) return false;
    for (Index a = 0; a < from.order(); ++a)
        for (Index b = 0; b < from.order(); ++b)
            if (image[from.mul(a, b)] != to.mul(image[a], image[b])) return false;
    return true;
}

}  // namespace simphil
