#include "simphil/error.hpp"

namespace simphil {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_input: return "invalid-input";
        case ErrorKind::degree_out_of_range: return "degree-out-of-range";
        case ErrorKind::no_target: return "no-target";
        case ErrorKind::unsupported: return "unsupported";
        case ErrorKind::config: return "config";
        case ErrorKind::ambiguous_spectrum: return "ambiguous-spectrum";
        case ErrorKind::invariant_violation: return "invariant-violation";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace simphil
