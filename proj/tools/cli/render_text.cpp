#include <sstream>
#include <string>

#include "commands.hpp"

namespace simphil::cli {

using ojson = nlohmann::ordered_json;

namespace {

std::string scalar(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

void render_checks(std::ostringstream& out, const std::string& title, const ojson& c) {
    out << title << ": " << (c["ok"].get<bool>() ? "ok" : "FAILED") << " (" << c["checks"].get<std::size_t>() << " checks)\n";
    for (const auto& v : c["violations"])
        out << "  " << scalar(v["relation"]) << " n=" << v["n"] << " i=" << v["i"] << " j=" << v["j"] << " at "
            << scalar(v["simplex"]) << "\n";
}

void render_degree_rows(std::ostringstream& out, const ojson& rows, std::initializer_list<const char*> columns) {
    for (const char* c : columns) out << c << "\t";
    out << "\n";
    for (const auto& row : rows) {
        for (const char* c : columns) out << (row.contains(c) ? scalar(row[c]) : "") << "\t";
        if (row.contains("skipped")) out << scalar(row["skipped"]);
        out << "\n";
    }
}

}  // namespace

std::string render_text(const ojson& report) {
    std::ostringstream out;
    const std::string cmd = report["command"].get<std::string>();
    const ojson& in = report["input"];
    out << "simphil " << scalar(report["tool"]["version"]) << "  " << cmd << "\n";
    out << "input " << scalar(in["kind"]) << "  N=" << in["truncation"] << "  sizes " << in["sizes"].dump()
        << "  sha256 " << scalar(in["sha256"]) << "\n";
    const ojson& r = report["results"];
    if (cmd == "validate") {
        render_checks(out, "simplicial identities", r["simplicial_identities"]);
        if (r.contains("hilbert_identities")) render_checks(out, "hilbert identities", r["hilbert_identities"]);
    } else if (cmd == "census") {
        render_degree_rows(out, r["degrees"], {"degree", "total", "nondegenerate", "ratio"});
        out << "|X^(N)| = " << r["truncation_total"] << ", register width " << r["register_width"] << "\n";
    } else if (cmd == "betti") {
        out << "degree";
        for (const auto& v : r["degrees"][0]["values"]) out << "\t" << scalar(v["method"]);
        out << "\n";
        for (const auto& d : r["degrees"]) {
            out << d["degree"];
            for (const auto& v : d["values"]) out << "\t" << v["value"];
            if (d["truncation_sensitive"].get<bool>()) out << "\t(truncation sensitive)";
            else if (!d["agree"].get<bool>()) out << "\tDISAGREE";
            out << "\n";
        }
    } else if (cmd == "defects") {
        out << "scan depth " << r["scan_depth"] << "\n";
        for (const auto& [kind, s] : r["summary"].items())
            out << kind << ": " << s["nonzero"] << " nonzero of " << s["scanned"] << "\n";
        for (const auto& d : r["defects"])
            if (!d["zero"].get<bool>())
                out << "  " << scalar(d["kind"]) << "(n=" << d["n"] << ", i=" << d["i"] << ", j=" << d["j"] << ") "
                    << d["entries"].size() << " entries\n";
    } else if (cmd == "perfectness") {
        out << "class " << scalar(r["class"]) << " (scan depth " << r["scan_depth"] << ", " << r["scanned"] << " defects)\n";
        for (const auto& w : r["witnesses"])
            out << "  witness " << scalar(w["kind"]) << "(n=" << w["n"] << ", i=" << w["i"] << ", j=" << w["j"] << ")\n";
    } else if (cmd == "encode") {
        out << "scheme " << scalar(r["scheme"]) << ", width " << r["width"] << " (minimal " << r["minimal_width"] << ")\n";
        for (const auto& e : r["entries"]) out << scalar(e["bits"]) << "\t" << e["degree"] << "\t" << scalar(e["label"]) << "\n";
        render_checks(out, "verification", r["verification"]);
    } else if (cmd == "circuit") {
        out << "map " << scalar(r["map"]) << " into " << scalar(r["target_kind"]) << "\n";
        render_checks(out, "intertwining", r["validation"]);
        if (r.contains("homology_action"))
            render_degree_rows(out, r["homology_action"], {"degree", "kernel_dim", "trace", "unitarity_residual"});
    } else if (cmd == "qsim grover") {
        render_degree_rows(out, r["degrees"], {"degree", "ratio", "iterations", "success_probability", "analytic_probability"});
    } else if (cmd == "qsim count") {
        render_degree_rows(out, r["degrees"], {"degree", "ratio", "ratio_estimate", "outcome", "bin_width"});
    } else if (cmd == "qsim qpe") {
        render_degree_rows(out, r["degrees"],
                           {"degree", "tau", "p_zero", "leakage_bound", "p_zero_sampled", "betti_estimate", "support_ok"});
    }
    out << "status " << scalar(report["status"]) << "\n";
    if (report.contains("timing")) out << "wall time " << report["timing"]["wall_ms"] << " ms\n";
    return out.str();
}

}  // namespace simphil::cli
