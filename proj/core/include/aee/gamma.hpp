#pragma once

namespace aee {

/// Real Gamma function (Lanczos approximation, reflection for x < 1/2).
/// Throws DomainError at the poles x = 0, -1, -2, ...
double gamma(double x);

/// 1/Gamma(x); exactly zero at the poles.
double reciprocal_gamma(double x);

/// True when x is a non-positive integer (to 1e-12 absolute).
bool is_gamma_pole(double x);

}  // namespace aee
