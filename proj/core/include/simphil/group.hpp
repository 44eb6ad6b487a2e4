#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace simphil {

using Index = std::uint32_t;

/// Finite group given by its multiplication table.
///
/// Element k is named `names()[k]`; the table entry `table[a][b]` is the
/// product a*b.  Construction checks closure, associativity, the unit and
/// inverses, and throws invalid-input naming the first violated law.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<Index>> table, std::vector<std::string> names = {});

    static FiniteGroup cyclic(Index order);
    /// Symmetric group on `degree` letters, elements in lexicographic order
    /// of their one-line notation (so the identity is element 0).
    static FiniteGroup symmetric(Index degree);

    Index order() const noexcept { return static_cast<Index>(table_.size()); }
    Index mul(Index a, Index b) const { return table_[a][b]; }
    Index identity() const noexcept { return identity_; }
    Index inverse(Index a) const { return inverse_[a]; }
    bool is_abelian() const noexcept;
    const std::string& name(Index a) const { return names_[a]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::vector<Index>>& table() const noexcept { return table_; }
    /// Element index for a name, or order() when absent.
    Index find(const std::string& name) const;

private:
    std::vector<std::vector<Index>> table_;
    std::vector<std::string> names_;
    std::vector<Index> inverse_;
    Index identity_ = 0;
};

/// Checks that `image` (indexed by elements of `from`) is a homomorphism.
bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const std::vector<Index>& image);

}  // namespace simphil
