#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "simphil/error.hpp"
#include "spec_parser.hpp"

namespace {

using namespace simphil::cli;

std::string slurp(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecError("", "cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::uint64_t default_seed() {
    const char* env = std::getenv("SIMPHIL_SEED");
    if (!env || !*env) return 0;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used, 10);
        if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw SpecError("", std::string("SIMPHIL_SEED is not an unsigned integer: '") + env + "'");
}

int exit_code_for(simphil::ErrorKind kind) {
    return kind == simphil::ErrorKind::invariant_violation ? exit_invariant : exit_input;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simplicial sets, their Hilbert-space operators, homology and quantum simulation"};
    app.set_version_flag("--version", SIMPHIL_VERSION_STRING);
    app.require_subcommand(1);

    Options opt;
    std::string spec_path;
    std::string format = "json";
    std::string morphism_path;

    auto common = [&](CLI::App* sub) {
        sub->add_option("spec", spec_path, "Spec document (JSON file, '-' for stdin)")->required();
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--timing", opt.timing, "Include wall-clock timing in the report");
    };

    auto* validate = app.add_subcommand("validate", "Check the simplicial and Hilbert-space identities");
    common(validate);
    auto* census = app.add_subcommand("census", "Count simplices per degree");
    common(census);

    auto* betti = app.add_subcommand("betti", "Betti numbers by one or more methods");
    common(betti);
    betti->add_option("--method", opt.methods, "exact|hodge|normalized|qsim (repeatable)")
        ->check(CLI::IsMember({"exact", "hodge", "normalized", "qsim"}));
    betti->add_option("--max-degree", opt.max_degree, "Highest degree");
    betti->add_option("--clock-bits", opt.clock_bits, "Clock bits for --method qsim");
    betti->add_option("--shots", opt.shots, "Shots for --method qsim");
    auto* betti_seed = betti->add_option("--seed", opt.seed, "RNG seed for --method qsim");

    auto* defects = app.add_subcommand("defects", "List the defect matrices");
    common(defects);
    defects->add_option("--scan-depth", opt.scan_depth, "Scan depth (default N-2)");
    auto* perf = app.add_subcommand("perfectness", "Classify by vanishing defects");
    common(perf);
    perf->add_option("--scan-depth", opt.scan_depth, "Scan depth (default N-2)");

    auto* encode = app.add_subcommand("encode", "Bit-string encoding with verified face and degeneracy maps");
    common(encode);
    encode->add_option("--scheme", opt.scheme, "Encoding scheme")->check(CLI::IsMember({"enumerative", "nerve", "complex"}));
    encode->add_option("--permute-seed", opt.permute_seed, "Relabel codes by a seeded permutation");

    auto* circuit = app.add_subcommand("circuit", "Simplicial quantum circuit of a morphism into a simplicial group");
    common(circuit);
    circuit->add_option("--from-morphism", morphism_path, "Morphism document")->required();

    auto* qsim = app.add_subcommand("qsim", "Quantum algorithm simulation");
    qsim->require_subcommand(1);
    CLI::Option* qsim_seeds[3] = {};
    int slot = 0;
    for (const char* mode : {"grover", "count", "qpe"}) {
        auto* sub = qsim->add_subcommand(mode, std::string("Simulate ") + mode);
        common(sub);
        sub->add_option("--degree", opt.degree, "Single degree (default: all)");
        if (std::string(mode) == "grover") {
            sub->add_option("--max-iterations", opt.max_iterations, "Cap on Grover iterations");
        } else {
            sub->add_option("--clock-bits", opt.clock_bits, "Clock register bits");
        }
        if (std::string(mode) == "qpe") {
            sub->add_option("--shots", opt.shots, "Measurement shots");
            sub->add_option("--density-path", opt.density_path, "Density simulation path")
                ->check(CLI::IsMember({"automatic", "pure", "direct"}));
        }
        qsim_seeds[slot++] = sub->add_option("--seed", opt.seed, "RNG seed (default SIMPHIL_SEED or 0)");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* chosen = app.get_subcommands().front();
        opt.command = chosen->get_name();
        bool seed_given = betti_seed->count() > 0;
        if (opt.command == "qsim") {
            opt.qsim_mode = chosen->get_subcommands().front()->get_name();
            for (auto* s : qsim_seeds) seed_given = seed_given || s->count() > 0;
        }
        if (!seed_given) opt.seed = default_seed();

        const std::string spec = slurp(spec_path);
        std::string morphism;
        if (!morphism_path.empty()) morphism = slurp(morphism_path);
        const Outcome out = run(opt, spec, morphism_path.empty() ? nullptr : &morphism);
        if (format == "json")
            std::cout << out.report.dump(2) << "\n";
        else
            std::cout << render_text(out.report);
        return out.exit_code;
    } catch (const SpecError& e) {
        std::cerr << "simphil: spec error at " << e.what() << "\n";
        return exit_input;
    } catch (const simphil::Error& e) {
        std::cerr << "simphil: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "simphil: " << e.what() << "\n";
        return 1;
    }
}
