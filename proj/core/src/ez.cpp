#include "simphil/ez.hpp"

#include <algorithm>
#include <unordered_map>

#include "simphil/error.hpp"

namespace simphil {

namespace {

/// Degenerate simplex held symbolically; `base` indexes the generator list
/// of degree `base_degree`.
struct Symbolic {
    std::vector<int> word;
    int base_degree = 0;
    Index base = 0;

    int degree() const { return base_degree + static_cast<int>(word.size()); }
};

/// Face and degeneracy calculus on symbolic simplices, driven by the faces
/// of the generators.
class Calculus {
public:
    // generator_faces[p][b][i] is d_i of generator b of degree p.
    std::vector<std::vector<std::vector<Symbolic>>> generator_faces;

    Symbolic face(const Symbolic& x, int i) const {
        std::vector<int> outer;
        int cur = i;
        for (int r = static_cast<int>(x.word.size()) - 1; r >= 0; --r) {
            const int j = x.word[static_cast<std::size_t>(r)];
            if (cur < j) {
                outer.push_back(j - 1);
            } else if (cur == j || cur == j + 1) {
                std::vector<int> w(x.word.begin(), x.word.begin() + r);
                w.insert(w.end(), outer.rbegin(), outer.rend());
                return {canonical_degeneracy_string(std::move(w)), x.base_degree, x.base};
            } else {
                outer.push_back(j);
                --cur;
            }
        }
        const Symbolic& f = generator_faces[static_cast<std::size_t>(x.base_degree)][x.base][static_cast<std::size_t>(cur)];
        std::vector<int> w = f.word;
        w.insert(w.end(), outer.rbegin(), outer.rend());
        return {canonical_degeneracy_string(std::move(w)), f.base_degree, f.base};
    }

    static Symbolic degeneracy(const Symbolic& x, int i) {
        std::vector<int> w = x.word;
        w.push_back(i);
        return {canonical_degeneracy_string(std::move(w)), x.base_degree, x.base};
    }
};

void subsets(int m, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v < m; ++v) {
        cur.push_back(v);
        subsets(m, k, v + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> increasing_strings(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets(m, k, 0, cur, out);
    return out;
}

}  // namespace

std::vector<int> canonical_degeneracy_string(std::vector<int> word) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t + 1 < word.size(); ++t) {
            const int inner = word[t];
            const int outer = word[t + 1];
            if (outer <= inner) {
                word[t] = outer;
                word[t + 1] = inner + 1;
                changed = true;
            }
        }
    }
    return word;
}

EZForm ez_normal_form(const SimplicialSet& x, SimplexRef sigma) {
    if (sigma.degree < 0 || sigma.degree > x.cutoff() || sigma.index >= x.size(sigma.degree))
        fail(ErrorKind::invalid_input, "simplex reference out of range");
    std::vector<int> stripped;
    SimplexRef cur = sigma;
    bool found = true;
    while (found && cur.degree > 0) {
        found = false;
        for (int i = 0; i < cur.degree; ++i) {
            const Index f = x.face(cur.degree, i, cur.index);
            if (x.degeneracy(cur.degree - 1, i, f) == cur.index) {
                stripped.push_back(i);
                cur = {cur.degree - 1, f};
                found = true;
                break;
            }
        }
    }
    std::reverse(stripped.begin(), stripped.end());
    return {canonical_degeneracy_string(std::move(stripped)), cur};
}

SimplexRef realize(const SimplicialSet& x, const EZForm& form) {
    SimplexRef cur = form.base;
    for (int j : form.indices) {
        if (cur.degree >= x.cutoff() || j < 0 || j > cur.degree)
            fail(ErrorKind::degree_out_of_range, "degeneracy string leaves the truncation");
        cur = {cur.degree + 1, x.degeneracy(cur.degree, j, cur.index)};
    }
    return cur;
}

std::string ez_label(const std::vector<int>& indices, const std::string& base_label) {
    std::string s = "s[";
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(indices[k]);
    }
    return s + "](" + base_label + ")";
}

SimplicialSet skeleton_extend(const SimplicialSet& x, int m) {
    const int n_cut = x.cutoff();
    if (m <= n_cut)
        fail(ErrorKind::invalid_input, "skeleton extension target " + std::to_string(m) + " must exceed the truncation " +
                                           std::to_string(n_cut));
    // Generators are the non-degenerate simplices of degree <= N.
    std::vector<std::vector<Index>> gens(static_cast<std::size_t>(n_cut) + 1);
    std::vector<std::unordered_map<Index, Index>> gen_pos(static_cast<std::size_t>(n_cut) + 1);
    for (int p = 0; p <= n_cut; ++p) {
        gens[p] = nondegenerate(x, p);
        for (Index b = 0; b < gens[p].size(); ++b) gen_pos[p][gens[p][b]] = b;
    }
    auto to_symbolic = [&](SimplexRef s) {
        EZForm f = ez_normal_form(x, s);
        return Symbolic{f.indices, f.base.degree, gen_pos[f.base.degree].at(f.base.index)};
    };
    Calculus calc;
    calc.generator_faces.resize(static_cast<std::size_t>(n_cut) + 1);
    for (int p = 1; p <= n_cut; ++p)
        for (Index g : gens[p]) {
            std::vector<Symbolic> fs;
            for (int i = 0; i <= p; ++i) fs.push_back(to_symbolic({p - 1, x.face(p, i, g)}));
            calc.generator_faces[p].push_back(std::move(fs));
        }

    const auto levels = static_cast<std::size_t>(m) + 1;
    std::vector<std::vector<std::string>> labels(levels);
    std::vector<std::vector<Symbolic>> upper(levels);
    std::vector<std::unordered_map<std::string, Index>> lookup(levels);
    auto label_of = [&](const Symbolic& s) {
        const std::string& base = x.label(s.base_degree, gens[s.base_degree][s.base]);
        return s.word.empty() ? base : ez_label(s.word, base);
    };
    for (int d = 0; d <= n_cut; ++d) labels[d] = x.labels(d);
    for (int d = n_cut + 1; d <= m; ++d) {
        for (int p = 0; p <= n_cut; ++p)
            for (const auto& w : increasing_strings(d, d - p))
                for (Index b = 0; b < gens[p].size(); ++b) upper[d].push_back({w, p, b});
        for (const auto& s : upper[d]) {
            lookup[d].emplace(label_of(s), static_cast<Index>(labels[d].size()));
            labels[d].push_back(label_of(s));
        }
    }
    auto index_of = [&](const Symbolic& s) -> Index {
        const int d = s.degree();
        if (d <= n_cut) return realize(x, {s.word, {s.base_degree, gens[s.base_degree][s.base]}}).index;
        return lookup[d].at(label_of(s));
    };

    MapTable faces(levels), degens(levels);
    for (int d = 1; d <= n_cut; ++d) faces[d] = x.faces()[d];
    for (int d = 0; d < n_cut; ++d) degens[d] = x.degeneracies()[d];
    for (int d = n_cut + 1; d <= m; ++d) {
        faces[d].resize(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i)
            for (const auto& s : upper[d]) faces[d][i].push_back(index_of(calc.face(s, i)));
    }
    degens[n_cut].resize(static_cast<std::size_t>(n_cut) + 1);
    for (int i = 0; i <= n_cut; ++i)
        for (Index k = 0; k < x.size(n_cut); ++k)
            degens[n_cut][i].push_back(index_of(Calculus::degeneracy(to_symbolic({n_cut, k}), i)));
    for (int d = n_cut + 1; d < m; ++d) {
        degens[d].resize(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i)
            for (const auto& s : upper[d]) degens[d][i].push_back(index_of(Calculus::degeneracy(s, i)));
    }
    Provenance prov;
    prov.kind = "skeleton_extend";
    prov.detail = "M=" + std::to_string(m);
    prov.group = x.provenance().group;
    prov.complex = x.provenance().complex;
    prov.operands.push_back(x.provenance());
    return SimplicialSet::assemble(m, std::move(labels), std::move(faces), std::move(degens), std::move(prov));
}

namespace {

Symbolic parse_face_reference(const std::string& ref, int degree,
                              const std::vector<std::unordered_map<std::string, Index>>& names) {
    std::vector<int> word;
    std::string base = ref;
    if (ref.rfind("s[", 0) == 0) {
        const auto close = ref.find("](");
        if (close == std::string::npos || ref.back() != ')')
            fail(ErrorKind::invalid_input, "malformed degenerate face reference '" + ref + "'");
        std::string list = ref.substr(2, close - 2);
        base = ref.substr(close + 2, ref.size() - close - 3);
        std::size_t pos = 0;
        while (pos < list.size()) {
            auto comma = list.find(',', pos);
            if (comma == std::string::npos) comma = list.size();
            try {
                word.push_back(std::stoi(list.substr(pos, comma - pos)));
            } catch (const std::exception&) {
                fail(ErrorKind::invalid_input, "malformed degenerate face reference '" + ref + "'");
            }
            pos = comma + 1;
        }
        for (std::size_t t = 0; t < word.size(); ++t)
            if (word[t] < 0 || (t > 0 && word[t] <= word[t - 1]))
                fail(ErrorKind::invalid_input, "degeneracy string in '" + ref + "' is not strictly increasing");
    }
    const int base_degree = degree - static_cast<int>(word.size());
    if (base_degree < 0 || static_cast<std::size_t>(base_degree) >= names.size())
        fail(ErrorKind::invalid_input, "face reference '" + ref + "' has the wrong degree");
    auto it = names[base_degree].find(base);
    if (it == names[base_degree].end())
        fail(ErrorKind::invalid_input, "face reference '" + ref + "' names no generator of degree " +
                                           std::to_string(base_degree));
    for (std::size_t t = 0; t < word.size(); ++t)
        if (word[t] > base_degree + static_cast<int>(t))
            fail(ErrorKind::invalid_input, "degeneracy index out of range in '" + ref + "'");
    return {word, base_degree, it->second};
}

}  // namespace

SimplicialSet build_from_nondegenerate(const NondegenerateData& data, int cutoff, Provenance provenance) {
    if (cutoff < 0) fail(ErrorKind::invalid_input, "negative truncation");
    if (data.empty() || data[0].empty()) fail(ErrorKind::invalid_input, "no vertices given");
    const int top = std::min<int>(cutoff, static_cast<int>(data.size()) - 1);
    std::vector<std::unordered_map<std::string, Index>> names(static_cast<std::size_t>(top) + 1);
    for (int p = 0; p <= top; ++p)
        for (Index b = 0; b < data[p].size(); ++b) {
            const std::string& nm = data[p][b].name;
            if (nm.empty() || nm.rfind("s[", 0) == 0 || nm.find('|') != std::string::npos)
                fail(ErrorKind::invalid_input, "generator name '" + nm + "' is empty or reserved");
            if (!names[p].emplace(nm, b).second)
                fail(ErrorKind::invalid_input, "duplicate generator name '" + nm + "' in degree " + std::to_string(p));
        }
    Calculus calc;
    calc.generator_faces.resize(static_cast<std::size_t>(top) + 1);
    for (int p = 1; p <= top; ++p)
        for (const auto& cell : data[p]) {
            if (cell.faces.size() != static_cast<std::size_t>(p) + 1)
                fail(ErrorKind::invalid_input, "generator '" + cell.name + "' needs " + std::to_string(p + 1) + " faces");
            std::vector<Symbolic> fs;
            for (const auto& ref : cell.faces) fs.push_back(parse_face_reference(ref, p - 1, names));
            calc.generator_faces[p].push_back(std::move(fs));
        }

    const auto levels = static_cast<std::size_t>(cutoff) + 1;
    std::vector<std::vector<std::string>> labels(levels);
    std::vector<std::vector<Symbolic>> all(levels);
    std::vector<std::unordered_map<std::string, Index>> lookup(levels);
    auto label_of = [&](const Symbolic& s) {
        const std::string& base = data[s.base_degree][s.base].name;
        return s.word.empty() ? base : ez_label(s.word, base);
    };
    for (int d = 0; d <= cutoff; ++d) {
        for (int p = 0; p <= std::min(d, top); ++p)
            for (const auto& w : increasing_strings(d, d - p))
                for (Index b = 0; b < data[p].size(); ++b) all[d].push_back({w, p, b});
        for (const auto& s : all[d]) {
            lookup[d].emplace(label_of(s), static_cast<Index>(labels[d].size()));
            labels[d].push_back(label_of(s));
        }
    }
    MapTable faces(levels), degens(levels);
    for (int d = 1; d <= cutoff; ++d) {
        faces[d].resize(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i)
            for (const auto& s : all[d]) faces[d][i].push_back(lookup[d - 1].at(label_of(calc.face(s, i))));
    }
    for (int d = 0; d < cutoff; ++d) {
        degens[d].resize(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i)
            for (const auto& s : all[d]) degens[d][i].push_back(lookup[d + 1].at(label_of(Calculus::degeneracy(s, i))));
    }
    return SimplicialSet::assemble(cutoff, std::move(labels), std::move(faces), std::move(degens),
                                   std::move(provenance));
}

}  // namespace simphil
