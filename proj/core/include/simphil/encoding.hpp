#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "simphil/sset.hpp"
#include "simphil/validate.hpp"

namespace simphil {

struct CensusReport {
    std::vector<std::uint64_t> total;          // |X_n|
    std::vector<std::uint64_t> nondegenerate;  // |ᶜX_n|
    std::vector<std::optional<double>> ratio;  // ρ_n = |X_n| / |ᶜX_n|, empty when ᶜX_n is empty
    std::uint64_t truncation_total = 0;        // |X^(N)|
    unsigned register_width = 0;               // κ = min{l : |X^(N)| <= 2^l}
};

/// Counts by enumeration, cross-checked against Σ_m C(n,m)|ᶜX_m|; a mismatch
/// throws invariant-violation.
CensusReport census(const SimplicialSet& x);

/// κ for a given simplex total.
unsigned minimal_register_width(std::uint64_t total);

/// Digital encoding χ of a truncated simplicial set into width-bit strings
/// (stored big-endian in the low `width` bits of a 64-bit word).
struct EncodingTable {
    std::string scheme;
    unsigned width = 0;
    std::vector<std::vector<std::uint64_t>> code;  // code[n][k] = χ(σ)
    std::unordered_map<std::uint64_t, SimplexRef> decode;
    /// d_χ and s_χ acting on bit strings.
    std::function<std::uint64_t(int n, int i, std::uint64_t)> face;
    std::function<std::uint64_t(int n, int i, std::uint64_t)> degeneracy;

    std::string bits(std::uint64_t word) const;
};

/// Simplices numbered in list order, degree by degree, on κ bits; d_χ and s_χ by lookup.
EncodingTable enumerative_encoding(const SimplicialSet& x);

/// Register (x_1,...,x_N; y) with q-bit slots and an r-bit degree field, x_1 most
/// significant.  x must come from build_nerve_group.  The group encoding sends
/// the identity to 0 and the other elements to 1, 2, ... in element order.
/// q = 0 or r = 0 selects the minimal width (at least 1).
EncodingTable nerve_register_encoding(const SimplicialSet& x, unsigned q = 0, unsigned r = 0);

/// Register (x_0,...,x_d) of vertex multiplicities with r-bit slots, x_0 most
/// significant.  x must come from build_from_complex.  r = 0 selects the minimal width.
EncodingTable complex_register_encoding(const SimplicialSet& x, unsigned r = 0);

/// Relabels the range by a seeded random permutation π: χ' = π χ, maps conjugated by π.
EncodingTable permuted_encoding(const EncodingTable& table, std::uint64_t seed);

/// Exhaustive check: width and bijectivity ("bijective"), partition by degree
/// ("partition"), conjugation d_χ χ = χ d and s_χ χ = χ s ("conjugation-face",
/// "conjugation-degeneracy"), and the five simplicial relations replayed on bit
/// strings ("encoded-<relation>").
ValidationReport verify_encoding(const SimplicialSet& x, const EncodingTable& table);

}  // namespace simphil
