#pragma once

#include <stdexcept>
#include <string>

namespace rumorcluster {

/// Bad configuration: malformed config document, unknown keys, invalid
/// hyperparameters. CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unreadable or malformed input data (files, directory trees, JSON).
/// CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure: solver non-convergence, residual bound violated.
/// CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rumorcluster
