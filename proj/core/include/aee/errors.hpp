#pragma once

#include <stdexcept>
#include <string>

namespace aee {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wrong number of coefficients for the requested degree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Request beyond what a built table or series supports.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A Gamma-function pole was hit while evaluating the d_n formula.
class FormulaDegeneracyError : public Error {
public:
    FormulaDegeneracyError(int n, int j, int N)
        : Error("Gamma pole in d_n formula at n=" + std::to_string(n) + ", j=" + std::to_string(j) +
                ", N=" + std::to_string(N)),
          n_(n), j_(j), N_(N) {}

    int n() const noexcept { return n_; }
    int j() const noexcept { return j_; }
    int degree_parameter() const noexcept { return N_; }

private:
    int n_;
    int j_;
    int N_;
};

/// Newton iterate left the principal sheet of E^alpha (asymptotic series invalid there).
class BranchEscapeError : public Error {
public:
    using Error::Error;
};

/// Truncated power series too short for the requested recurrence order.
class InsufficientDepthError : public Error {
public:
    using Error::Error;
};

/// Evaluation point coincides with a turning point of sqrt(1 - y^(2N+1)).
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Integration loop passes too close to a branch point or encloses the wrong ones.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Configuration rejected before any computation started.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace aee
