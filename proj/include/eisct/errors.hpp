#pragma once

#include <stdexcept>
#include <string>

namespace eisct {

struct UnsupportedType : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ImaginaryRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IncompatibleExponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleAtQ0 : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Zeta evaluated at an argument where the denominator vanishes identically.
// `argument` is the integer s; `where` names the root/operation that hit it.
struct ZetaPole : std::runtime_error {
    long long argument;
    std::string where;
    ZetaPole(long long arg, const std::string& at)
        : std::runtime_error("zeta pole at s=" + std::to_string(arg) +
                             (at.empty() ? "" : " (" + at + ")")),
          argument(arg), where(at) {}
};

struct NonIntegralExponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RegionViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InductionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eisct
