#pragma once

#include <vector>

#include "aee/coefficient_table.hpp"
#include "aee/potential.hpp"

namespace aee {

/// One term d_n E^(exponent_num/exponent_den); exponent_num = 2N+3-2n, exponent_den = 4N+2.
struct SeriesTerm {
    int n = 0;
    cplx d{};
    int exponent_num = 0;
    int exponent_den = 1;

    double exponent() const noexcept {
        return static_cast<double>(exponent_num) / static_cast<double>(exponent_den);
    }
};

/// J(E) = constant + sum_n d_n E^(exponent(n)).
///
/// terms[n] holds index n for every 0 <= n <= n_max, including exact zeros.
struct EnergySeries {
    int N = 1;
    double hbar = 1.0;
    cplx constant{};
    std::vector<SeriesTerm> terms;
    int n_max = 0;

    /// Number of terms with d_n != 0 (d_0 included, the constant excluded).
    int nonzero_count() const noexcept;
};

SeriesTerm make_term(int N, int n, cplx d);

/// Leading coefficient d_0, independent of the betas and hbar.
double leading_coefficient(int N);

/// True when the loop integral behind d_n vanishes identically: (2N+1) | (n-1).
bool selection_rule_vanishes(int N, int n) noexcept;

/// d_0..d_{n_max}. Throws FormulaDegeneracyError on an unresolved Gamma pole.
EnergySeries d_coefficients(const Potential& p, int n_max);
EnergySeries d_coefficients(const TablePair& tables, int n_max);

/// Smallest series holding `n_terms` nonzero coefficients (d_0 counted).
/// Throws RangeError if they do not appear within a generous index bound.
EnergySeries d_coefficients_nonzero(const Potential& p, int n_terms);

/// Closed-form four-term series for (ix)^(2N+1) + b x: slots 0, 2N, 2N+3.
EnergySeries two_term_series(int N, cplx b, double hbar = 1.0);

/// Closed-form b_{4N} without the (-1)^N factor; differs from the slot used in
/// two_term_series for odd N.
cplx two_term_b4n_as_printed(int N, cplx b);

/// constant + sum_{n <= k_trunc} d_n E^exponent, principal branch, ascending
/// order with compensated summation. Throws DomainError for E = 0 and
/// RangeError for k_trunc outside [0, n_max].
cplx eval_J(const EnergySeries& s, cplx E, int k_trunc);
cplx eval_J(const EnergySeries& s, cplx E);

/// Exact term-wise derivative of eval_J.
cplx eval_J_derivative(const EnergySeries& s, cplx E, int k_trunc);

/// argmin over nonzero k >= 1 of |d_k E^exponent(k)|; 0 when no such term exists.
int optimal_truncation(const EnergySeries& s, cplx E);

/// |d_k E^exponent| of the first nonzero term after k_trunc, 0 if none.
double first_omitted_magnitude(const EnergySeries& s, cplx E, int k_trunc);

}  // namespace aee
