#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "aee/potential.hpp"

namespace aee {

enum class OracleKind { diagonalization, shooting, contour };

std::string to_string(OracleKind kind);

struct OracleResult {
    OracleKind kind = OracleKind::diagonalization;
    /// Diagonalisation values are sorted by real part.
    std::vector<cplx> values;
    /// Per-value error estimate from the refinement step (basis doubling or step halving).
    std::vector<double> errors;
    /// Per-value convergence flag.
    std::vector<bool> converged;
    /// Scalar diagnostics: basis size, steps, scale, etc.
    std::map<std::string, double> meta;
};

/// H = p^2 + V(x) in the oscillator basis with x = (a + a^+)/sqrt(2 omega),
/// p = i sqrt(omega/2) (a^+ - a). Powers of x come from the (basis_size + degree + 2)
/// truncation, cropped afterwards. hbar = 1 units: p^2 carries hbar^2.
Eigen::MatrixXcd ho_hamiltonian_matrix(const Potential& p, int basis_size, double omega);

/// Eigenvalues of the matrix, sorted by real part then imaginary part.
std::vector<cplx> matrix_eigenvalues(const Eigen::MatrixXcd& m);

struct DiagOptions {
    /// Basis size B; 0 selects max(16 * count, 192). Doubling check uses 2B.
    int basis_size = 0;
    /// Oscillator frequency; unset runs the stability scan over omega_grid.
    std::optional<double> omega;
    std::vector<double> omega_grid{2.0, 4.0, 7.0, 11.0, 16.0, 25.0, 40.0};
    /// Relative change under doubling accepted as converged.
    double accept_tol = 1e-6;
    /// Relative change beyond which an eigenvalue is treated as a truncation artefact.
    double spurious_tol = 1e-2;
};

/// The `count` lowest-by-real-part eigenvalues that are stable under basis doubling.
OracleResult diag_spectrum(const Potential& p, int count, const DiagOptions& opts = {});

/// Integration-ray angles (theta_left, theta_right) of the two Stokes wedges
/// holding the positive and negative real axis; theta_left + theta_right = -pi.
std::pair<double, double> wedge_rays(const Potential& p);

/// Default ray length: |V| reaches 1e3 |E| along the ray.
double default_ray_length(const Potential& p, cplx E);

/// Default step count: keeps h * sqrt|V(r_max)| <= 0.02, never below 1e4.
int default_steps(const Potential& p, cplx E, double r_max);

/// Normalised Wronskian at x = 0 of the solutions decaying along each ray.
/// r_max <= 0 or steps <= 0 select the defaults.
cplx shoot_mismatch(const Potential& p, cplx E, std::pair<double, double> rays, double r_max = 0.0,
                    int steps = 0);

/// (u_L u_R' - u_L' u_R) / (u_L u_R' + u_L' u_R) at x = 0: same zeros as
/// shoot_mismatch, holomorphic in E away from its poles (the modulus
/// normalisation of shoot_mismatch is not).
cplx shoot_wronskian_ratio(const Potential& p, cplx E, std::pair<double, double> rays, double r_max = 0.0,
                           int steps = 0);

struct ShootingOptions {
    std::optional<std::pair<double, double>> rays;
    double r_max = 0.0;
    int steps = 0;
    int max_iter = 60;
    /// Repeat the solve at half the step and extrapolate.
    bool richardson = true;
};

struct ShootingRefinement {
    cplx energy{};
    /// |E(h/2) - E(h)|; bounds the error of both the h/2 and the extrapolated value.
    double error_estimate = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Complex secant on shoot_mismatch until |dE| < tol (60 iterations).
ShootingRefinement refine_energy_shooting(const Potential& p, cplx E_guess, double tol = 1e-10,
                                          const ShootingOptions& opts = {});

/// Refines every guess independently.
OracleResult shooting_spectrum(const Potential& p, const std::vector<cplx>& guesses, double tol = 1e-10,
                               const ShootingOptions& opts = {});

/// Closed loop of contour_integral_numeric: ellipse around the enclosed
/// branch points; margin widens the vertical semi-axis beyond the points.
struct ContourLoop {
    cplx center;
    double semi_real;
    double semi_imag;

    cplx point(double t) const;
    cplx tangent(double t) const;
};

/// Throws GeometryError when the loop comes within 1e-3 of a root of unity or
/// encloses anything other than the two designated branch points.
ContourLoop default_loop(int N, double radius_margin = 0.25);
void check_loop(int N, const ContourLoop& loop);

/// Trapezoid loop integral of f(y, a0) dy, a0 = sqrt(1 - y^(2N+1)) continued
/// along the loop from +sqrt at its start. Nodes double until successive
/// results agree to rel_tol (relative to the integrand scale).
cplx loop_integral(int N, const ContourLoop& loop, const std::function<cplx(cplx, cplx)>& f,
                   double rel_tol = 1e-12);

/// Loop integral of y^P (1 - y^(2N+1))^(-j/2), P = (2N+1)(j+1)/2 - n, with
/// phases tracked continuously from the loop point nearest the origin. The
/// side facing the origin runs from the lower to the upper branch point.
cplx contour_integral_numeric(int N, int n, int j, double radius_margin = 0.25);
cplx contour_integral_numeric(int N, int n, int j, const ContourLoop& loop);

/// Whether the Gamma closed form covers (N, n, j): odd j with (2N+1) not
/// dividing n-1, or the trivially vanishing cases (j = 0; odd j with
/// (2N+1) | (n-1) and P >= 0).
bool contour_closed_form_defined(int N, int n, int j);
bool contour_selection_rule_passes(int N, int n, int j);

/// 4i sin((P+1) theta) Gamma(1-j/2) Gamma(3/2-(n-1)/M+j/2) / ((P+1) Gamma(3/2-(n-1)/M)),
/// theta = arg of the upper branch point. Throws DomainError outside the covered set.
cplx contour_integral_closed_form(int N, int n, int j);

/// Text of the resolved phase convention, reported by validation.
std::string phase_convention();

}  // namespace aee
