#pragma once

#include <stdexcept>
#include <string>

namespace expsum {

enum class errc {
    not_prime,
    too_small,
    too_large,
    order_does_not_divide,
    power_out_of_range,
    principal_character,
    gcd_violation,
    domain_error,
    io_error,
    config_error,
};

const char* errc_name(errc c) noexcept;

// Single exception type carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace expsum
