#pragma once

// Error codes and the exception type used across the library.
//
// Every failure that can reach a caller carries one of the codes below so the
// C API can translate exceptions into stable integer statuses.

#include <stdexcept>
#include <string>

namespace polyweb {

enum class Errc {
    ok = 0,
    internal,
    invalid_argument,
    context_mismatch,
    division_by_zero,
    trig_pole,
    not_real,
    not_in_subfield,
    singular_point,
    point_inside_polygon,
    precision_exhausted,
    parse_error,
    io_error,
    resource_limit,
    verification_failure,
    unsupported,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace polyweb
