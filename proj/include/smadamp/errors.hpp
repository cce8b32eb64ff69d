#pragma once

#include <stdexcept>
#include <string>

namespace smadamp {

/// Invalid configuration value or unparsable configuration input.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (size mismatch, out-of-range query).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Physical quantity outside its domain (e.g. non-positive temperature).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Residual or state contains NaN/Inf.
class NonFiniteState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, int iterations, double residual_norm)
        : std::runtime_error(what), iterations_(iterations), residual_norm_(residual_norm) {}

    int iterations() const noexcept { return iterations_; }
    double residual_norm() const noexcept { return residual_norm_; }

private:
    int iterations_;
    double residual_norm_;
};

class SingularJacobian : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace smadamp
