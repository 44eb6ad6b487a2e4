#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace simphil::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 2;
inline constexpr int exit_invariant = 3;

struct Options {
    std::string command;  // validate, census, betti, defects, perfectness, encode, circuit, qsim
    std::string qsim_mode;                  // grover, count, qpe
    std::vector<std::string> methods;       // betti
    std::optional<int> max_degree;          // betti
    std::optional<int> scan_depth;          // defects, perfectness
    std::string scheme = "enumerative";     // encode
    std::optional<std::uint64_t> permute_seed;  // encode
    std::optional<int> degree;              // qsim
    std::optional<int> clock_bits;          // betti (qsim), qsim count/qpe
    std::size_t shots = 10000;
    std::uint64_t seed = 0;
    std::optional<int> max_iterations;      // qsim grover
    std::string density_path = "automatic"; // qsim qpe
    bool timing = false;
};

struct Outcome {
    nlohmann::ordered_json report;
    int exit_code = exit_ok;
};

std::string sha256_hex(const std::string& bytes);

/// Runs one command.  Library errors propagate as exceptions; a report is
/// returned when the command completes, with a nonzero exit code when the
/// result itself signals a failed check.
Outcome run(const Options& opt, const std::string& spec_bytes, const std::string* morphism_bytes);

/// Human-readable rendering of a report.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace simphil::cli
