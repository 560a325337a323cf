#pragma once

#include <stdexcept>
#include <string>

namespace fpd {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A numerical procedure failed to reach its target (non-convergence,
/// tolerance not met).  Carries the best available estimate so callers
/// can decide whether to proceed with degraded accuracy.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best(best_estimate), error(error_estimate) {}
    double best;
    double error;
};

/// A parameter combination at which a representation formula degenerates
/// (removable singularity of the formula, not of the function).
class DegenerateParameterError : public std::domain_error {
public:
    explicit DegenerateParameterError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace fpd
