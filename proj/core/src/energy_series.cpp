#include "aee/energy_series.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "aee/errors.hpp"
#include "aee/gamma.hpp"

namespace aee {

namespace {

constexpr double kPi = std::numbers::pi;

// Neumaier summation on each component.
struct CompensatedSum {
    double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;

    static void add(double& sum, double& comp, double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    void operator+=(cplx v) {
        add(re, cre, v.real());
        add(im, cim, v.imag());
    }
    cplx value() const { return {re + cre, im + cim}; }
};

cplx term_value(const SeriesTerm& t, cplx logE) { return t.d * std::exp(t.exponent() * logE); }

void check_args(const EnergySeries& s, cplx E, int k_trunc) {
    if (E == cplx{}) {
        throw DomainError("eval_J: E = 0 is outside the series domain");
    }
    if (k_trunc < 0 || k_trunc > s.n_max) {
        throw RangeError("eval_J: truncation " + std::to_string(k_trunc) + " outside [0, " +
                         std::to_string(s.n_max) + "]");
    }
}

}  // namespace

int EnergySeries::nonzero_count() const noexcept {
    int count = 0;
    for (const auto& t : terms) {
        if (t.d != cplx{}) ++count;
    }
    return count;
}

SeriesTerm make_term(int N, int n, cplx d) { return {n, d, 2 * N + 3 - 2 * n, 4 * N + 2}; }

double leading_coefficient(int N) {
    const double M = 2.0 * N + 1.0;
    return 2.0 * std::cos(kPi / (2.0 * M)) * gamma(1.0 / M) /
           (std::sqrt(kPi) * (2.0 * N + 3.0) * gamma(0.5 + 1.0 / M));
}

bool selection_rule_vanishes(int N, int n) noexcept {
    const int M = 2 * N + 1;
    return ((n - 1) % M + M) % M == 0;
}

EnergySeries d_coefficients(const TablePair& tables, int n_max) {
    if (n_max < 0) {
        throw DomainError("d_coefficients: n_max must be >= 0");
    }
    const Potential& p = tables.even.potential;
    if (n_max > tables.even.max_order) {
        throw RangeError("d_coefficients: table order " + std::to_string(tables.even.max_order) +
                         " < n_max " + std::to_string(n_max));
    }
    const int N = p.N();
    const int M = 2 * N + 1;
    const double theta = branch_points(N).angle();

    EnergySeries s;
    s.N = N;
    s.hbar = p.hbar();
    s.constant = -0.5 * p.hbar();
    s.n_max = n_max;
    s.terms.push_back(make_term(N, 0, leading_coefficient(N)));
    for (int n = 1; n <= n_max; ++n) {
        if (selection_rule_vanishes(N, n)) {
            s.terms.push_back(make_term(N, n, {}));
            continue;
        }
        const double x = static_cast<double>(n - 1) / M;
        const double prefactor = 2.0 * std::sin((n - 1) * theta) * reciprocal_gamma(1.5 - x) / kPi;
        cplx acc{};
        for (int j = 0; j <= n - 1; ++j) {
            const int power_plus_one = 1 + M * (j + 1) - n;
            if (power_plus_one <= 0) {
                continue;  // entries below the diagonal are structurally zero
            }
            const cplx A = tables.even.at(2 * (n - j - 1), 2 * j + 1);
            if (A == cplx{}) continue;
            const double g_arg = 2.0 + j - x;
            if (is_gamma_pole(g_arg)) {
                throw FormulaDegeneracyError(n, j, N);
            }
            acc += A * gamma(0.5 - j) * gamma(g_arg) / static_cast<double>(power_plus_one);
        }
        s.terms.push_back(make_term(N, n, prefactor * acc));
    }
    return s;
}

EnergySeries d_coefficients(const Potential& p, int n_max) {
    if (n_max < 0) {
        throw DomainError("d_coefficients: n_max must be >= 0");
    }
    return d_coefficients(build_tables(p, std::max(1, n_max)), n_max);
}

EnergySeries d_coefficients_nonzero(const Potential& p, int n_terms) {
    if (n_terms < 1) {
        throw DomainError("d_coefficients_nonzero: n_terms must be >= 1");
    }
    const int bound = 4 * n_terms + 4 * (2 * p.N() + 3);
    const EnergySeries full = d_coefficients(p, bound);
    int count = 0;
    for (const auto& t : full.terms) {
        if (t.d != cplx{} && ++count == n_terms) {
            EnergySeries s = full;
            s.n_max = t.n;
            s.terms.resize(static_cast<std::size_t>(t.n + 1));
            return s;
        }
    }
    throw RangeError("d_coefficients_nonzero: only " + std::to_string(count) +
                     " nonzero terms up to index " + std::to_string(bound));
}

EnergySeries two_term_series(int N, cplx b, double hbar) {
    if (N < 1) {
        throw DomainError("two_term_series: N must be >= 1");
    }
    const double M = 2.0 * N + 1.0;
    const double root_pi = std::sqrt(kPi);
    const double parity = (N % 2 == 0) ? 1.0 : -1.0;
    const cplx b4n = parity * two_term_b4n_as_printed(N, b);
    const double b4n6 = 2.0 * N * hbar * hbar * std::cos((4.0 * N + 1.0) / (4.0 * N + 2.0) * kPi) *
                        gamma(1.0 - 1.0 / M) / (12.0 * root_pi * gamma(0.5 - 1.0 / M));

    EnergySeries s;
    s.N = N;
    s.hbar = hbar;
    s.constant = -0.5 * hbar;
    s.n_max = 2 * N + 3;
    for (int n = 0; n <= s.n_max; ++n) {
        cplx d{};
        if (n == 0) d = leading_coefficient(N);
        if (n == 2 * N) d = b4n;
        if (n == 2 * N + 3) d = b4n6;
        s.terms.push_back(make_term(N, n, d));
    }
    return s;
}

cplx two_term_b4n_as_printed(int N, cplx b) {
    const double M = 2.0 * N + 1.0;
    return 2.0 * b * cplx{0.0, 1.0} * std::sin(kPi / M) * gamma(2.0 / M) /
           (std::sqrt(kPi) * (4.0 * N + 2.0) * gamma(0.5 + 2.0 / M));
}

cplx eval_J(const EnergySeries& s, cplx E, int k_trunc) {
    check_args(s, E, k_trunc);
    const cplx logE = std::log(E);
    CompensatedSum sum;
    sum += s.constant;
    for (int n = 0; n <= k_trunc; ++n) {
        const SeriesTerm& t = s.terms[static_cast<std::size_t>(n)];
        if (t.d == cplx{}) continue;
        sum += term_value(t, logE);
    }
    return sum.value();
}

cplx eval_J(const EnergySeries& s, cplx E) { return eval_J(s, E, s.n_max); }

cplx eval_J_derivative(const EnergySeries& s, cplx E, int k_trunc) {
    check_args(s, E, k_trunc);
    const cplx logE = std::log(E);
    CompensatedSum sum;
    for (int n = 0; n <= k_trunc; ++n) {
        const SeriesTerm& t = s.terms[static_cast<std::size_t>(n)];
        if (t.d == cplx{}) continue;
        sum += t.d * t.exponent() * std::exp((t.exponent() - 1.0) * logE);
    }
    return sum.value();
}

int optimal_truncation(const EnergySeries& s, cplx E) {
    if (E == cplx{}) {
        throw DomainError("optimal_truncation: E = 0");
    }
    const cplx logE = std::log(E);
    int best = 0;
    double best_mag = 0.0;
    for (int k = 1; k <= s.n_max; ++k) {
        const SeriesTerm& t = s.terms[static_cast<std::size_t>(k)];
        if (t.d == cplx{}) continue;
        const double mag = std::abs(term_value(t, logE));
        if (best == 0 || mag < best_mag) {
            best = k;
            best_mag = mag;
        }
    }
    return best;
}

double first_omitted_magnitude(const EnergySeries& s, cplx E, int k_trunc) {
    const cplx logE = std::log(E);
    for (int k = k_trunc + 1; k <= s.n_max; ++k) {
        const SeriesTerm& t = s.terms[static_cast<std::size_t>(k)];
        if (t.d != cplx{}) return std::abs(term_value(t, logE));
    }
    return 0.0;
}

}  // namespace aee
