#pragma once

#include <stdexcept>
#include <string>

namespace oscloc {

/// Coarse error classes. Each maps onto a process exit code in the CLI.
enum class ErrorCategory { config, numerical, statistical };

const char* to_string(ErrorCategory category) noexcept;

/// 2 for config, 3 for numerical, 4 for statistical-validity failures.
int exit_code(ErrorCategory category) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(ErrorCategory::config, what) {}
};

/// Requested lattice exceeds the configured maximum matrix dimension.
class SizeError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(ErrorCategory::numerical, what) {}
};

/// h is not positive definite to working precision.
class PositivityError : public NumericalError {
public:
    PositivityError(const std::string& what, double eigenvalue)
        : NumericalError(what), eigenvalue_(eigenvalue) {}

    double eigenvalue() const noexcept { return eigenvalue_; }

private:
    double eigenvalue_;
};

/// A spectral function evaluated to a non-finite value.
class EvaluationError : public NumericalError {
public:
    EvaluationError(const std::string& what, double eigenvalue)
        : NumericalError(what), eigenvalue_(eigenvalue) {}

    double eigenvalue() const noexcept { return eigenvalue_; }

private:
    double eigenvalue_;
};

/// Resolvent requested too close to the spectrum.
class ConditioningError : public NumericalError {
public:
    ConditioningError(const std::string& what, double distance)
        : NumericalError(what), distance_(distance) {}

    double distance_to_spectrum() const noexcept { return distance_; }

private:
    double distance_;
};

/// Exponential fit requested on data it cannot be applied to.
class FitDomainError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class StatisticalValidityError : public Error {
public:
    explicit StatisticalValidityError(const std::string& what)
        : Error(ErrorCategory::statistical, what) {}
};

}  // namespace oscloc
