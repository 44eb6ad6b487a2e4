#pragma once

#include <stdexcept>
#include <string>

namespace simphil {

enum class ErrorKind {
    invalid_input,
    degree_out_of_range,
    no_target,
    unsupported,
    config,
    ambiguous_spectrum,
    invariant_violation,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace simphil
