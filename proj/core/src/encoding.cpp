#include "simphil/encoding.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <string>

#include "simphil/error.hpp"

namespace simphil {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

unsigned bits_for(std::uint64_t values) {
    unsigned b = 0;
    while (b < 64 && (std::uint64_t{1} << b) < values) ++b;
    return b;
}

void index_codes(EncodingTable& t) {
    for (std::size_t n = 0; n < t.code.size(); ++n)
        for (Index k = 0; k < t.code[n].size(); ++k) t.decode.emplace(t.code[n][k], SimplexRef{static_cast<int>(n), k});
}

/// Split a bracketed, comma-separated label into its entries.
std::vector<std::string> entries(const std::string& label, char open, char close) {
    std::vector<std::string> out;
    if (label.size() < 2 || label.front() != open || label.back() != close) return out;
    std::size_t pos = 1;
    while (pos < label.size()) {
        const auto end = label.find_first_of(std::string(",") + close, pos);
        out.push_back(label.substr(pos, end - pos));
        pos = end + 1;
    }
    return out;
}

}  // namespace

unsigned minimal_register_width(std::uint64_t total) { return bits_for(total); }

CensusReport census(const SimplicialSet& x) {
    CensusReport c;
    for (int n = 0; n <= x.cutoff(); ++n) {
        c.total.push_back(x.size(n));
        c.nondegenerate.push_back(nondegenerate(x, n).size());
    }
    for (int n = 0; n <= x.cutoff(); ++n) {
        std::uint64_t formula = 0;
        for (int m = 0; m <= n; ++m) formula += binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)) * c.nondegenerate[m];
        if (formula != c.total[n])
            fail(ErrorKind::invariant_violation, "simplex count at n=" + std::to_string(n) + " is " +
                                                     std::to_string(c.total[n]) + " but the recombination gives " +
                                                     std::to_string(formula));
        c.ratio.push_back(c.nondegenerate[n] == 0 ? std::nullopt
                                                  : std::optional<double>(static_cast<double>(c.total[n]) /
                                                                          static_cast<double>(c.nondegenerate[n])));
        c.truncation_total += c.total[n];
    }
    c.register_width = minimal_register_width(c.truncation_total);
    return c;
}

std::string EncodingTable::bits(std::uint64_t word) const {
    std::string s(width, '0');
    for (unsigned b = 0; b < width; ++b)
        if (word >> (width - 1 - b) & 1u) s[b] = '1';
    return s;
}

EncodingTable enumerative_encoding(const SimplicialSet& x) {
    EncodingTable t;
    t.scheme = "enumerative";
    std::uint64_t next = 0;
    for (int n = 0; n <= x.cutoff(); ++n) {
        std::vector<std::uint64_t> codes(x.size(n));
        std::iota(codes.begin(), codes.end(), next);
        next += codes.size();
        t.code.push_back(std::move(codes));
    }
    t.width = minimal_register_width(next);
    index_codes(t);
    // Lookup through the inverse code, the stored map, and the code.
    auto faces = std::make_shared<MapTable>(x.faces());
    auto degens = std::make_shared<MapTable>(x.degeneracies());
    auto codes = std::make_shared<std::vector<std::vector<std::uint64_t>>>(t.code);
    auto decode = std::make_shared<std::unordered_map<std::uint64_t, SimplexRef>>(t.decode);
    t.face = [faces, codes, decode](int n, int i, std::uint64_t w) {
        const SimplexRef s = decode->at(w);
        if (s.degree != n) fail(ErrorKind::invalid_input, "bit string has the wrong degree");
        return (*codes)[n - 1][(*faces)[n][i][s.index]];
    };
    t.degeneracy = [degens, codes, decode](int n, int i, std::uint64_t w) {
        const SimplexRef s = decode->at(w);
        if (s.degree != n) fail(ErrorKind::invalid_input, "bit string has the wrong degree");
        return (*codes)[n + 1][(*degens)[n][i][s.index]];
    };
    return t;
}

EncodingTable nerve_register_encoding(const SimplicialSet& x, unsigned q, unsigned r) {
    const Provenance& p = x.provenance();
    if (p.kind != "nerve_group" || !p.group) fail(ErrorKind::invalid_input, "nerve register encoding needs a group nerve");
    const FiniteGroup g = *p.group;
    const int cutoff = x.cutoff();
    const unsigned q_min = std::max(1u, bits_for(g.order()));
    const unsigned r_min = std::max(1u, bits_for(static_cast<std::uint64_t>(cutoff) + 1));
    if (q == 0) q = q_min;
    if (r == 0) r = r_min;
    if (q < bits_for(g.order())) fail(ErrorKind::invalid_input, "slot width q too small for the group");
    if (r < bits_for(static_cast<std::uint64_t>(cutoff) + 1)) fail(ErrorKind::invalid_input, "degree field r too small");
    const unsigned width = static_cast<unsigned>(cutoff) * q + r;
    if (width > 64) fail(ErrorKind::invalid_input, "register wider than 64 bits");

    // Group encoding: identity -> 0, others -> 1, 2, ... in element order.
    std::vector<std::uint64_t> phi(g.order());
    std::vector<Index> phi_inv(std::size_t{1} << std::min(q, 20u), g.order());
    std::uint64_t next = 1;
    for (Index e = 0; e < g.order(); ++e) phi[e] = e == g.identity() ? 0 : next++;
    for (Index e = 0; e < g.order(); ++e) phi_inv[phi[e]] = e;

    EncodingTable t;
    t.scheme = "nerve";
    t.width = width;
    const std::uint64_t slot_mask = (std::uint64_t{1} << q) - 1;
    auto slot_shift = [=](int a) { return static_cast<unsigned>(cutoff - a) * q + r; };  // a = 1..N
    for (int n = 0; n <= cutoff; ++n) {
        std::vector<std::uint64_t> codes;
        for (Index k = 0; k < x.size(n); ++k) {
            std::uint64_t w = static_cast<std::uint64_t>(n);
            if (n > 0) {
                const auto names = entries(x.label(n, k), '(', ')');
                if (names.size() != static_cast<std::size_t>(n))
                    fail(ErrorKind::invalid_input, "unexpected nerve label " + x.label(n, k));
                for (int a = 1; a <= n; ++a) {
                    const Index e = g.find(names[a - 1]);
                    if (e == g.order()) fail(ErrorKind::invalid_input, "unexpected nerve label " + x.label(n, k));
                    w |= phi[e] << slot_shift(a);
                }
            }
            codes.push_back(w);
        }
        t.code.push_back(std::move(codes));
    }
    index_codes(t);

    auto unpack = [=](std::uint64_t w) {
        std::vector<std::uint64_t> slots(static_cast<std::size_t>(cutoff));
        for (int a = 1; a <= cutoff; ++a) slots[a - 1] = (w >> slot_shift(a)) & slot_mask;
        return slots;
    };
    auto pack = [=](const std::vector<std::uint64_t>& slots, std::uint64_t y) {
        std::uint64_t w = y;
        for (std::size_t a = 0; a < slots.size(); ++a) w |= slots[a] << slot_shift(static_cast<int>(a) + 1);
        return w;
    };
    t.face = [=](int n, int i, std::uint64_t w) {
        auto xs = unpack(w);
        xs.resize(static_cast<std::size_t>(n));
        std::vector<std::uint64_t> out;
        if (i == 0) {
            out.assign(xs.begin() + 1, xs.end());
        } else if (i == n) {
            out.assign(xs.begin(), xs.end() - 1);
        } else {
            for (int a = 1; a < i; ++a) out.push_back(xs[a - 1]);
            out.push_back(phi[g.mul(phi_inv.at(xs[i - 1]), phi_inv.at(xs[i]))]);
            for (int a = i + 2; a <= n; ++a) out.push_back(xs[a - 1]);
        }
        return pack(out, static_cast<std::uint64_t>(n - 1));
    };
    t.degeneracy = [=](int n, int i, std::uint64_t w) {
        auto xs = unpack(w);
        xs.resize(static_cast<std::size_t>(n));
        xs.insert(xs.begin() + i, 0);
        return pack(xs, static_cast<std::uint64_t>(n + 1));
    };
    return t;
}

EncodingTable complex_register_encoding(const SimplicialSet& x, unsigned r) {
    const Provenance& p = x.provenance();
    if (p.kind != "ordered_complex" || !p.complex)
        fail(ErrorKind::invalid_input, "complex register encoding needs an ordered complex");
    const int cutoff = x.cutoff();
    const std::size_t slots = p.complex->vertex_count;
    const unsigned r_min = std::max(1u, bits_for(static_cast<std::uint64_t>(cutoff) + 2));
    if (r == 0) r = r_min;
    if (r < bits_for(static_cast<std::uint64_t>(cutoff) + 2)) fail(ErrorKind::invalid_input, "slot width r too small");
    if (slots * r > 64) fail(ErrorKind::invalid_input, "register wider than 64 bits");
    const std::uint64_t mask = (std::uint64_t{1} << r) - 1;
    auto shift = [=](std::size_t a) { return static_cast<unsigned>(slots - 1 - a) * r; };

    EncodingTable t;
    t.scheme = "complex";
    t.width = static_cast<unsigned>(slots) * r;
    for (int n = 0; n <= cutoff; ++n) {
        std::vector<std::uint64_t> codes;
        for (Index k = 0; k < x.size(n); ++k) {
            std::vector<std::uint64_t> mult(slots, 0);
            for (const auto& v : entries(x.label(n, k), '[', ']')) ++mult.at(std::stoul(v));
            std::uint64_t w = 0;
            for (std::size_t a = 0; a < slots; ++a) w |= mult[a] << shift(a);
            codes.push_back(w);
        }
        t.code.push_back(std::move(codes));
    }
    index_codes(t);

    // θ_{a,i}(x) = 1 iff Σ_{b<a} x_b <= i < Σ_{b<=a} x_b.
    auto apply = [=](std::uint64_t w, int i, int sign) {
        std::uint64_t below = 0, out = 0;
        for (std::size_t a = 0; a < slots; ++a) {
            const std::uint64_t xa = (w >> shift(a)) & mask;
            const bool theta = below <= static_cast<std::uint64_t>(i) && static_cast<std::uint64_t>(i) < below + xa;
            below += xa;
            out |= (theta ? (sign > 0 ? xa + 1 : xa - 1) : xa) << shift(a);
        }
        return out;
    };
    t.face = [=](int, int i, std::uint64_t w) { return apply(w, i, -1); };
    t.degeneracy = [=](int, int i, std::uint64_t w) { return apply(w, i, +1); };
    return t;
}

EncodingTable permuted_encoding(const EncodingTable& table, std::uint64_t seed) {
    std::vector<std::uint64_t> range;
    for (const auto& codes : table.code) range.insert(range.end(), codes.begin(), codes.end());
    std::vector<std::uint64_t> image = range;
    std::mt19937_64 rng(seed);
    std::shuffle(image.begin(), image.end(), rng);
    auto pi = std::make_shared<std::unordered_map<std::uint64_t, std::uint64_t>>();
    auto pi_inv = std::make_shared<std::unordered_map<std::uint64_t, std::uint64_t>>();
    for (std::size_t k = 0; k < range.size(); ++k) {
        (*pi)[range[k]] = image[k];
        (*pi_inv)[image[k]] = range[k];
    }
    EncodingTable t;
    t.scheme = table.scheme + "+permuted";
    t.width = table.width;
    for (const auto& codes : table.code) {
        std::vector<std::uint64_t> c;
        for (auto w : codes) c.push_back(pi->at(w));
        t.code.push_back(std::move(c));
    }
    index_codes(t);
    auto face = table.face;
    auto degen = table.degeneracy;
    t.face = [=](int n, int i, std::uint64_t w) { return pi->at(face(n, i, pi_inv->at(w))); };
    t.degeneracy = [=](int n, int i, std::uint64_t w) { return pi->at(degen(n, i, pi_inv->at(w))); };
    return t;
}

ValidationReport verify_encoding(const SimplicialSet& x, const EncodingTable& t) {
    ValidationReport r;
    const int cutoff = x.cutoff();
    if (t.code.size() != static_cast<std::size_t>(cutoff) + 1)
        fail(ErrorKind::invalid_input, "encoding has the wrong number of degrees");
    const std::uint64_t limit = t.width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t.width) - 1;
    std::unordered_map<std::uint64_t, SimplexRef> seen;
    for (int n = 0; n <= cutoff; ++n) {
        if (t.code[n].size() != x.size(n)) fail(ErrorKind::invalid_input, "encoding has the wrong degree sizes");
        for (Index k = 0; k < x.size(n); ++k) {
            const std::uint64_t w = t.code[n][k];
            ++r.checks;
            if (w > limit || !seen.emplace(w, SimplexRef{n, k}).second) r.violations.push_back({"bijective", n, 0, 0, k});
            ++r.checks;
            auto d = t.decode.find(w);
            if (d == t.decode.end() || d->second.degree != n || d->second.index != k)
                r.violations.push_back({"partition", n, 0, 0, k});
        }
    }
    if (!r.ok()) return r;
    const auto& c = t.code;
    for (int n = 1; n <= cutoff; ++n)
        for (int i = 0; i <= n; ++i)
            for (Index k = 0; k < x.size(n); ++k) {
                ++r.checks;
                if (t.face(n, i, c[n][k]) != c[n - 1][x.face(n, i, k)])
                    r.violations.push_back({"conjugation-face", n, i, 0, k});
            }
    for (int n = 0; n < cutoff; ++n)
        for (int i = 0; i <= n; ++i)
            for (Index k = 0; k < x.size(n); ++k) {
                ++r.checks;
                if (t.degeneracy(n, i, c[n][k]) != c[n + 1][x.degeneracy(n, i, k)])
                    r.violations.push_back({"conjugation-degeneracy", n, i, 0, k});
            }
    // Simplicial relations replayed on bit strings only.
    auto d = [&](int n, int i, std::uint64_t w) { return t.face(n, i, w); };
    auto s = [&](int n, int i, std::uint64_t w) { return t.degeneracy(n, i, w); };
    auto check = [&](const char* rel, int n, int i, int j, Index k, bool holds) {
        ++r.checks;
        if (!holds) r.violations.push_back({std::string("encoded-") + rel, n, i, j, k});
    };
    for (int n = 2; n <= cutoff; ++n)
        for (Index k = 0; k < x.size(n); ++k)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    const auto w = c[n][k];
                    check("face-face", n, i, j, k, d(n - 1, i, d(n, j, w)) == d(n - 1, j - 1, d(n, i, w)));
                }
    for (int n = 0; n < cutoff; ++n)
        for (Index k = 0; k < x.size(n); ++k)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    const auto w = c[n][k];
                    const auto lhs = d(n + 1, i, s(n, j, w));
                    if (i < j)
                        check("face-degeneracy-low", n, i, j, k, lhs == s(n - 1, j - 1, d(n, i, w)));
                    else if (i == j || i == j + 1)
                        check("face-degeneracy-id", n, i, j, k, lhs == w);
                    else
                        check("face-degeneracy-high", n, i, j, k, lhs == s(n - 1, j, d(n, i - 1, w)));
                }
    for (int n = 0; n + 2 <= cutoff; ++n)
        for (Index k = 0; k < x.size(n); ++k)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i) {
                    const auto w = c[n][k];
                    check("degeneracy-degeneracy", n, i, j, k, s(n + 1, i, s(n, j, w)) == s(n + 1, j + 1, s(n, i, w)));
                }
    return r;
}

}  // namespace simphil
