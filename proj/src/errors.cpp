#include "expsum/errors.hpp"

namespace expsum {

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::too_small: return "TooSmall";
        case errc::too_large: return "TooLarge";
        case errc::order_does_not_divide: return "OrderDoesNotDivide";
        case errc::power_out_of_range: return "PowerOutOfRange";
        case errc::principal_character: return "PrincipalCharacter";
        case errc::gcd_violation: return "GcdViolation";
        case errc::domain_error: return "DomainError";
        case errc::io_error: return "IoError";
        case errc::config_error: return "ConfigError";
    }
    return "UnknownError";
}

} // namespace expsum
