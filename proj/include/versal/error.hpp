#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace versal {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class InvalidStructure : public Error {
public:
    using Error::Error;
};

/// Weyr characteristic from rank counts is not a partition of the cluster
/// multiplicity; the tolerances do not fit the input.
class InconsistentRanks : public Error {
public:
    using Error::Error;
};

class MissingParameter : public Error {
public:
    MissingParameter(const std::string& what, std::size_t param)
        : Error(what), param_(param) {}
    std::size_t param() const noexcept { return param_; }

private:
    std::size_t param_;
};

class PivotBreakdown : public Error {
public:
    PivotBreakdown(const std::string& what, std::size_t step, double pivot)
        : Error(what), step_(step), pivot_(pivot) {}
    /// Zero-based elimination step whose superdiagonal pivot was too small.
    std::size_t step() const noexcept { return step_; }
    double pivot() const noexcept { return pivot_; }

private:
    std::size_t step_;
    double pivot_;
};

class SizeMismatch : public Error {
public:
    using Error::Error;
};

class EigenvalueCollision : public Error {
public:
    using Error::Error;
};

/// Failure of the structured-perturbation recovery loop. Carries the
/// unstructured-norm trace accumulated before the failure.
class RecoveryError : public Error {
public:
    RecoveryError(const std::string& what, std::vector<double> trace)
        : Error(what), trace_(std::move(trace)) {}
    const std::vector<double>& trace() const noexcept { return trace_; }

private:
    std::vector<double> trace_;
};

class MaxIterationsExceeded : public RecoveryError {
public:
    using RecoveryError::RecoveryError;
};

class SingularTransform : public RecoveryError {
public:
    using RecoveryError::RecoveryError;
};

class StagnationDetected : public RecoveryError {
public:
    using RecoveryError::RecoveryError;
};

class SimilarityCheckFailed : public RecoveryError {
public:
    using RecoveryError::RecoveryError;
};

}  // namespace versal
