#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "simphil/circuits.hpp"
#include "simphil/encoding.hpp"
#include "simphil/error.hpp"
#include "simphil/hilbert_ops.hpp"
#include "simphil/homology.hpp"
#include "simphil/qsim.hpp"
#include "simphil/validate.hpp"
#include "spec_parser.hpp"

#ifndef SIMPHIL_VERSION_STRING
#define SIMPHIL_VERSION_STRING "0.0.0"
#endif

namespace simphil::cli {

using ojson = nlohmann::ordered_json;

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        fail(ErrorKind::invariant_violation, "SHA-256 digest failed");
    std::ostringstream out;
    for (unsigned int k = 0; k < len; ++k) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[k]);
    return out.str();
}

namespace {

constexpr std::size_t max_listed_violations = 100;

ojson violations_json(const SimplicialSet& x, const ValidationReport& rep) {
    ojson list = ojson::array();
    for (std::size_t k = 0; k < rep.violations.size() && k < max_listed_violations; ++k) {
        const auto& v = rep.violations[k];
        ojson e{{"relation", v.relation}, {"n", v.n}, {"i", v.i}, {"j", v.j}};
        if (v.n >= 0 && v.n <= x.cutoff() && v.simplex < x.size(v.n))
            e["simplex"] = x.label(v.n, v.simplex);
        else
            e["simplex"] = v.simplex;
        list.push_back(std::move(e));
    }
    return list;
}

ojson check_json(const SimplicialSet& x, const ValidationReport& rep) {
    return ojson{{"ok", rep.ok()},
                 {"checks", rep.checks},
                 {"violation_count", rep.violations.size()},
                 {"violations", violations_json(x, rep)}};
}

ojson matrix_entries(const IntMatrix& m) {
    ojson list = ojson::array();
    for (const auto& [r, c, v] : coordinates(m)) list.push_back(ojson::array({r, c, v}));
    return list;
}

std::vector<int> degrees_for(const SimplicialSet& x, const std::optional<int>& degree) {
    if (degree) {
        if (*degree < 0 || *degree > x.cutoff())
            fail(ErrorKind::degree_out_of_range, "degree " + std::to_string(*degree) + " outside 0.." + std::to_string(x.cutoff()));
        return {*degree};
    }
    std::vector<int> all;
    for (int n = 0; n <= x.cutoff(); ++n) all.push_back(n);
    return all;
}

int scan_depth_for(const SimplicialSet& x, const std::optional<int>& depth) {
    if (depth) return *depth;
    if (x.cutoff() < 2) fail(ErrorKind::degree_out_of_range, "defect scans need truncation N >= 2");
    return x.cutoff() - 2;
}

// --- commands -------------------------------------------------------------

int cmd_validate(const SimplicialSet& x, ojson& results) {
    const ValidationReport rep = validate(x);
    results["method"] = "exhaustive";
    results["valid"] = rep.ok();
    results["simplicial_identities"] = check_json(x, rep);
    if (!rep.ok()) return exit_input;
    const ValidationReport hil = hilbert_identities(x);
    results["hilbert_identities"] = check_json(x, hil);
    return hil.ok() ? exit_ok : exit_invariant;
}

int cmd_census(const SimplicialSet& x, ojson& results) {
    const CensusReport c = census(x);
    results["method"] = "enumeration";
    ojson degrees = ojson::array();
    for (int n = 0; n <= x.cutoff(); ++n) {
        const auto k = static_cast<std::size_t>(n);
        ojson d{{"degree", n}, {"total", c.total[k]}, {"nondegenerate", c.nondegenerate[k]}};
        d["ratio"] = c.ratio[k] ? ojson(*c.ratio[k]) : ojson(nullptr);
        degrees.push_back(std::move(d));
    }
    results["degrees"] = std::move(degrees);
    results["truncation_total"] = c.truncation_total;
    results["register_width"] = c.register_width;
    return exit_ok;
}

QPEConfig qpe_config(const Options& opt, int default_bits) {
    QPEConfig cfg;
    cfg.clock_bits = opt.clock_bits.value_or(default_bits);
    cfg.shots = opt.shots;
    cfg.seed = opt.seed;
    return cfg;
}

int cmd_betti(const SimplicialSet& x, const Options& opt, ojson& results) {
    std::vector<std::string> methods = opt.methods.empty() ? std::vector<std::string>{"exact"} : opt.methods;
    const int top = opt.max_degree.value_or(x.cutoff());
    if (top < 0 || top > x.cutoff())
        fail(ErrorKind::degree_out_of_range, "max degree " + std::to_string(top) + " outside 0.." + std::to_string(x.cutoff()));
    ojson degrees = ojson::array();
    bool all_agree = true;
    for (int n = 0; n <= top; ++n) {
        ojson values = ojson::array();
        std::vector<std::size_t> seen;
        for (const auto& m : methods) {
            ojson v{{"method", m}};
            std::size_t value = 0;
            if (m == "qsim") {
                if (nondegenerate(x, n).empty()) {
                    v["note"] = "no non-degenerate simplices";
                } else {
                    const QPEResult q = qpe_betti(x, n, qpe_config(opt, 8));
                    value = q.betti_estimate;
                    v["p_zero"] = q.p_zero;
                    v["p_zero_sampled"] = q.p_zero_sampled;
                    v["leakage_bound"] = q.leakage_bound;
                }
            } else {
                const BettiMethod bm = m == "exact" ? BettiMethod::exact_rank
                                       : m == "hodge" ? BettiMethod::hodge
                                                      : BettiMethod::normalized_hodge;
                value = betti(x, n, bm).value;
            }
            v["value"] = value;
            seen.push_back(value);
            values.push_back(std::move(v));
        }
        const bool agree = std::adjacent_find(seen.begin(), seen.end(), std::not_equal_to<>()) == seen.end();
        const bool sensitive = n == x.cutoff();
        if (!sensitive && !agree) all_agree = false;
        degrees.push_back(ojson{{"degree", n}, {"truncation_sensitive", sensitive}, {"agree", agree}, {"values", std::move(values)}});
    }
    results["degrees"] = std::move(degrees);
    results["methods_agree"] = all_agree;
    return all_agree ? exit_ok : exit_invariant;
}

template <class F>
void for_each_scanned_defect(const SimplicialSet& x, int depth, F&& f) {
    const int top = depth + 2;
    auto scan = [&](DefectKind kind, int lo, int hi) {
        for (int n = lo; n <= hi; ++n)
            for (int i = 0; i <= n + 2; ++i)
                for (int j = i; j <= n + 2; ++j)
                    if (defect_in_range(x, kind, n, i, j)) f(defect(x, kind, n, i, j));
    };
    scan(DefectKind::DD, 1, top - 1);
    scan(DefectKind::DS, 0, top - 2);
    scan(DefectKind::SD, 2, top);
    scan(DefectKind::SS, 1, top - 1);
}

int cmd_defects(const SimplicialSet& x, const Options& opt, ojson& results) {
    const int depth = scan_depth_for(x, opt.scan_depth);
    if (depth < 0 || depth > x.cutoff() - 2) fail(ErrorKind::degree_out_of_range, "scan depth must lie in [0, N-2]");
    results["method"] = "exchange-identity";
    results["scan_depth"] = depth;
    ojson list = ojson::array();
    ojson summary = ojson::object();
    for (const char* k : {"DD", "DS", "SD", "SS"}) summary[k] = ojson{{"scanned", 0}, {"nonzero", 0}};
    for_each_scanned_defect(x, depth, [&](const DefectReport& d) {
        const std::string kind = to_string(d.kind);
        summary[kind]["scanned"] = summary[kind]["scanned"].get<std::size_t>() + 1;
        ojson e{{"kind", kind}, {"n", d.n}, {"i", d.i}, {"j", d.j}, {"zero", d.is_zero}};
        if (!d.is_zero) {
            summary[kind]["nonzero"] = summary[kind]["nonzero"].get<std::size_t>() + 1;
            e["entries"] = matrix_entries(d.matrix);
        }
        list.push_back(std::move(e));
    });
    results["summary"] = std::move(summary);
    results["defects"] = std::move(list);
    return exit_ok;
}

int cmd_perfectness(const SimplicialSet& x, const Options& opt, ojson& results) {
    const PerfectnessReport rep = perfectness_class(x, scan_depth_for(x, opt.scan_depth));
    results["method"] = "exchange-identity";
    results["class"] = to_string(rep.cls);
    results["scan_depth"] = rep.scan_depth;
    results["scanned"] = rep.scanned;
    ojson w = ojson::array();
    for (const auto& d : rep.witnesses)
        w.push_back(ojson{{"kind", to_string(d.kind)}, {"n", d.n}, {"i", d.i}, {"j", d.j}, {"entries", matrix_entries(d.matrix)}});
    results["witnesses"] = std::move(w);
    return exit_ok;
}

int cmd_encode(const SimplicialSet& x, const Options& opt, ojson& results) {
    EncodingTable table;
    if (opt.scheme == "enumerative")
        table = enumerative_encoding(x);
    else if (opt.scheme == "nerve")
        table = nerve_register_encoding(x);
    else if (opt.scheme == "complex")
        table = complex_register_encoding(x);
    else
        fail(ErrorKind::invalid_input, "unknown encoding scheme '" + opt.scheme + "'");
    if (opt.permute_seed) table = permuted_encoding(table, *opt.permute_seed);
    const ValidationReport rep = verify_encoding(x, table);
    results["scheme"] = table.scheme;
    results["width"] = table.width;
    results["minimal_width"] = minimal_register_width(census(x).truncation_total);
    if (opt.permute_seed) results["permute_seed"] = *opt.permute_seed;
    ojson entries = ojson::array();
    for (int n = 0; n <= x.cutoff(); ++n)
        for (Index k = 0; k < x.size(n); ++k)
            entries.push_back(ojson{{"degree", n}, {"label", x.label(n, k)}, {"bits", table.bits(table.code[static_cast<std::size_t>(n)][k])}});
    results["entries"] = std::move(entries);
    results["verification"] = check_json(x, rep);
    return rep.ok() ? exit_ok : exit_invariant;
}

int cmd_circuit(const SimplicialSet& x, const std::string* morphism_bytes, ojson& results) {
    if (!morphism_bytes) fail(ErrorKind::invalid_input, "circuit needs --from-morphism");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(*morphism_bytes);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::invalid_input, std::string("morphism document is not JSON: ") + e.what());
    }
    const MorphismDocument m = parse_morphism(doc, x);
    const SimplicialGroupStructure grp = attach_group_structure(m.target);
    const ProductCircuit pc = circuit_from_morphism(m.phi, x, m.target, grp);
    const ValidationReport rep = validate_circuit(pc.space, pc.circuit);
    results["method"] = "permutation";
    results["map"] = m.map_kind;
    results["target_kind"] = m.target.provenance().kind;
    ojson sizes = ojson::array();
    for (int n = 0; n <= pc.space.cutoff(); ++n) sizes.push_back(pc.space.size(n));
    results["space_sizes"] = std::move(sizes);
    results["permutations"] = pc.circuit.perm;
    results["validation"] = check_json(pc.space, rep);
    if (!rep.ok()) return exit_invariant;
    ojson homology = ojson::array();
    for (int n = 0; n + 1 <= pc.space.cutoff(); ++n) {
        const HomologyAction a = homology_action(pc.space, pc.circuit, n);
        homology.push_back(ojson{{"degree", n},
                                 {"kernel_dim", a.full.rows()},
                                 {"normalized_kernel_dim", a.normalized.rows()},
                                 {"trace", a.full.trace()},
                                 {"normalized_trace", a.normalized.trace()},
                                 {"unitarity_residual", a.unitarity_residual}});
        if (!(a.unitarity_residual <= 1e-10))
            fail(ErrorKind::invariant_violation, "homology action at degree " + std::to_string(n) + " is not unitary");
    }
    results["homology_action"] = std::move(homology);
    return exit_ok;
}

ojson distribution_json(const std::vector<double>& d) { return ojson(d); }

int cmd_qsim(const SimplicialSet& x, const Options& opt, ojson& results) {
    const std::vector<int> degrees = degrees_for(x, opt.degree);
    ojson list = ojson::array();
    int code = exit_ok;
    for (int n : degrees) {
        if (nondegenerate(x, n).empty()) {
            list.push_back(ojson{{"degree", n}, {"skipped", "no non-degenerate simplices"}});
            continue;
        }
        if (opt.qsim_mode == "grover") {
            const GroverResult g = grover_project(x, n, opt.max_iterations);
            list.push_back(ojson{{"degree", n},
                                 {"method", "statevector"},
                                 {"ratio", g.ratio},
                                 {"theta", g.theta},
                                 {"iterations", g.iterations},
                                 {"success_probability", g.success_probability},
                                 {"analytic_probability", g.analytic_probability},
                                 {"target_fidelity", g.target_fidelity}});
        } else if (opt.qsim_mode == "count") {
            const CountingResult c = quantum_count(x, n, opt.clock_bits.value_or(6));
            ojson e{{"degree", n},          {"method", "statevector-qpe"}, {"clock_bits", c.bits},
                    {"outcome", c.outcome}, {"theta", c.theta},            {"theta_estimate", c.theta_estimate},
                    {"ratio", c.ratio}};
            e["ratio_estimate"] = std::isfinite(c.ratio_estimate) ? ojson(c.ratio_estimate) : ojson(nullptr);
            e["bin_width"] = c.bin_width;
            e["distribution"] = distribution_json(c.distribution);
            list.push_back(std::move(e));
        } else {
            DensityPath path = DensityPath::automatic;
            if (opt.density_path == "pure") path = DensityPath::pure_average;
            else if (opt.density_path == "direct") path = DensityPath::direct;
            else if (opt.density_path != "automatic") fail(ErrorKind::invalid_input, "unknown density path '" + opt.density_path + "'");
            const QPEResult q = qpe_betti(x, n, qpe_config(opt, 8), path);
            ojson hist = ojson::array();
            for (const auto& [outcome, count] : q.histogram) hist.push_back(ojson::array({outcome, count}));
            list.push_back(ojson{{"degree", n},
                                 {"method", std::string("density-qpe:") + to_string(q.path)},
                                 {"clock_bits", q.clock_bits},
                                 {"tau", q.tau},
                                 {"nondegenerate", q.nondegenerate},
                                 {"kernel_dim", q.kernel_dim},
                                 {"kernel_fraction", q.kernel_fraction},
                                 {"p_zero", q.p_zero},
                                 {"min_phase_distance", q.min_phase_distance},
                                 {"leakage_bound", q.leakage_bound},
                                 {"shots", opt.shots},
                                 {"seed", opt.seed},
                                 {"histogram", std::move(hist)},
                                 {"p_zero_sampled", q.p_zero_sampled},
                                 {"betti_estimate", q.betti_estimate},
                                 {"support_error", q.support_error},
                                 {"support_ok", q.support_ok},
                                 {"truncation_sensitive", q.truncation_sensitive},
                                 {"distribution", distribution_json(q.distribution)}});
            if (!q.support_ok) code = exit_invariant;
        }
    }
    results["mode"] = opt.qsim_mode;
    results["degrees"] = std::move(list);
    return code;
}

ojson options_json(const Options& opt) {
    ojson o = ojson::object();
    const std::string& c = opt.command;
    if (c == "betti") {
        o["methods"] = opt.methods.empty() ? std::vector<std::string>{"exact"} : opt.methods;
        if (opt.max_degree) o["max_degree"] = *opt.max_degree;
        if (std::find(opt.methods.begin(), opt.methods.end(), "qsim") != opt.methods.end()) {
            o["clock_bits"] = opt.clock_bits.value_or(8);
            o["shots"] = opt.shots;
            o["seed"] = opt.seed;
        }
    } else if (c == "defects" || c == "perfectness") {
        if (opt.scan_depth) o["scan_depth"] = *opt.scan_depth;
    } else if (c == "encode") {
        o["scheme"] = opt.scheme;
        if (opt.permute_seed) o["permute_seed"] = *opt.permute_seed;
    } else if (c == "qsim") {
        o["mode"] = opt.qsim_mode;
        if (opt.degree) o["degree"] = *opt.degree;
        if (opt.qsim_mode == "grover") {
            if (opt.max_iterations) o["max_iterations"] = *opt.max_iterations;
        } else {
            o["clock_bits"] = opt.clock_bits.value_or(opt.qsim_mode == "count" ? 6 : 8);
        }
        if (opt.qsim_mode == "qpe") {
            o["shots"] = opt.shots;
            o["seed"] = opt.seed;
            o["density_path"] = opt.density_path;
        }
    }
    return o;
}

}  // namespace

Outcome run(const Options& opt, const std::string& spec_bytes, const std::string* morphism_bytes) {
    const auto start = std::chrono::steady_clock::now();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(spec_bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError("", std::string("not a JSON document: ") + e.what());
    }
    Outcome out;
    ojson& r = out.report;
    r["tool"] = ojson{{"name", "simphil"}, {"version", SIMPHIL_VERSION_STRING}};
    r["command"] = opt.command == "qsim" ? "qsim " + opt.qsim_mode : opt.command;
    const SimplicialSet x = opt.command == "validate" ? build_spec(doc) : parse_spec(doc);
    ojson sizes = ojson::array();
    for (int n = 0; n <= x.cutoff(); ++n) sizes.push_back(x.size(n));
    r["input"] = ojson{{"sha256", sha256_hex(spec_bytes)},
                       {"kind", doc.at("kind")},
                       {"truncation", x.cutoff()},
                       {"sizes", std::move(sizes)}};
    r["options"] = options_json(opt);
    ojson results = ojson::object();
    const std::string& c = opt.command;
    if (c == "validate") out.exit_code = cmd_validate(x, results);
    else if (c == "census") out.exit_code = cmd_census(x, results);
    else if (c == "betti") out.exit_code = cmd_betti(x, opt, results);
    else if (c == "defects") out.exit_code = cmd_defects(x, opt, results);
    else if (c == "perfectness") out.exit_code = cmd_perfectness(x, opt, results);
    else if (c == "encode") out.exit_code = cmd_encode(x, opt, results);
    else if (c == "circuit") out.exit_code = cmd_circuit(x, morphism_bytes, results);
    else if (c == "qsim") out.exit_code = cmd_qsim(x, opt, results);
    else fail(ErrorKind::invalid_input, "unknown command '" + c + "'");
    r["results"] = std::move(results);
    r["status"] = out.exit_code == exit_ok ? "ok" : out.exit_code == exit_input ? "input_error" : "invariant_violation";
    if (opt.timing) {
        const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
        r["timing"] = ojson{{"wall_ms", elapsed.count()}};
    }
    return out;
}

}  // namespace simphil::cli
