#include "aee/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "aee/errors.hpp"

namespace aee {
namespace {

// Godfrey's coefficients for g = 607/128, n = 15.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

// Gamma(z + 1) for z >= -1/2.
double lanczos_gamma_shifted(double z) {
    double sum = kLanczosCoeffs[0];
    for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
        sum += kLanczosCoeffs[k] / (z + static_cast<double>(k));
    }
    const double t = z + kLanczosG + 0.5;
    // Split the power to keep t^(z+1/2) finite up to z ~ 170.
    const double half_pow = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half_pow * (half_pow * std::exp(-t)) * sum;
}

}  // namespace

bool is_gamma_pole(double x) {
    return x <= 0.0 && std::abs(x - std::round(x)) < 1e-12;
}

double gamma(double x) {
    if (is_gamma_pole(x)) {
        throw DomainError("gamma: pole at x = " + std::to_string(x));
    }
    if (x < 0.5) {
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
    }
    return lanczos_gamma_shifted(x - 1.0);
}

double reciprocal_gamma(double x) {
    if (is_gamma_pole(x)) {
        return 0.0;
    }
    return 1.0 / gamma(x);
}

}  // namespace aee
