#pragma once

#include <stdexcept>
#include <string>

namespace balldep {

/// Invalid argument to a public operation (out-of-range site, width below 3, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation requested in a boundary mode that does not define it.
class ModeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input lies outside the mathematical domain (pole proximity, z = 1, sd = 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A polynomial handed to a PGF routine is not a probability generating function.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A hard size guard was hit (enumeration cap, table memory budget).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent ensemble or CLI configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace balldep
