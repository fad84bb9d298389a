#include "aee/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "aee/errors.hpp"
#include "aee/gamma.hpp"

namespace aee {

namespace {

constexpr double kPi = std::numbers::pi;

bool by_real_then_imag(cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

double rel_change(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Selects the `count` lowest eigenvalues of `fine` that reappear in `coarse`.
struct StableSelection {
    std::vector<cplx> values;
    std::vector<double> changes;
};

StableSelection select_stable(const std::vector<cplx>& coarse, const std::vector<cplx>& fine, int count,
                              double spurious_tol) {
    StableSelection sel;
    for (const cplx& ev : fine) {
        double best = std::numeric_limits<double>::infinity();
        for (const cplx& c : coarse) best = std::min(best, rel_change(c, ev));
        if (best < spurious_tol) {
            sel.values.push_back(ev);
            sel.changes.push_back(best);
            if (static_cast<int>(sel.values.size()) == count) break;
        }
    }
    return sel;
}

// m <- m * x for the symmetric tridiagonal x with off-diagonal `off`.
Eigen::MatrixXcd times_tridiagonal(const Eigen::MatrixXcd& m, const std::vector<double>& off) {
    const Eigen::Index n = m.cols();
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(m.rows(), n);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (j > 0) r.col(j) += m.col(j - 1) * off[static_cast<std::size_t>(j - 1)];
        if (j + 1 < n) r.col(j) += m.col(j + 1) * off[static_cast<std::size_t>(j)];
    }
    return r;
}

using wide = std::complex<long double>;

struct RayEnd {
    wide u;
    wide du_dx;
};

// The ray is integrated in extended precision; the normalised mismatch of a
// real-spectrum level is small, so double rounding sets its noise floor.
RayEnd integrate_ray(const Potential& p, cplx E, double theta, double r_max, int steps) {
    using real = long double;
    const int M = p.degree();
    std::vector<wide> coeffs;
    coeffs.reserve(static_cast<std::size_t>(M) + 2);
    coeffs.emplace_back(ipow(cplx{0.0, 1.0}, M));
    for (const cplx& b : p.betas()) coeffs.emplace_back(b);
    coeffs.emplace_back(0.0L);
    const wide dir = std::polar<real>(1.0L, static_cast<real>(theta));
    const wide dir2 = dir * dir;
    const real hb = static_cast<real>(p.hbar());
    const wide scale = dir2 / (hb * hb);
    const wide energy{E};
    auto g = [&](real r) {
        const wide x = r * dir;
        wide v = coeffs[0];
        for (std::size_t k = 1; k < coeffs.size(); ++k) v = v * x + coeffs[k];
        return scale * (v - energy);
    };

    const real rm = static_cast<real>(r_max);
    wide kappa = std::sqrt(g(rm));
    if (kappa.real() < 0.0L) kappa = -kappa;
    wide u{1.0L, 0.0L};
    wide v = -kappa;
    const real h = -rm / steps;
    const real half = 0.5L * h;
    const real sixth = h / 6.0L;
    real r = rm;
    wide g0 = g(r);
    for (int i = 0; i < steps; ++i) {
        const real r1 = rm + static_cast<real>(i + 1) * h;
        const wide gm = g(r + half);
        const wide g1 = g(r1);
        const wide k1u = v, k1v = g0 * u;
        const wide k2u = v + half * k1v, k2v = gm * (u + half * k1u);
        const wide k3u = v + half * k2v, k3v = gm * (u + half * k2u);
        const wide k4u = v + h * k3v, k4v = g1 * (u + h * k3u);
        u += sixth * (k1u + 2.0L * k2u + 2.0L * k3u + k4u);
        v += sixth * (k1v + 2.0L * k2v + 2.0L * k3v + k4v);
        r = r1;
        g0 = g1;
        const real mag = std::abs(u.real()) + std::abs(u.imag()) + std::abs(v.real()) + std::abs(v.imag());
        if (mag > 1e100L || (mag < 1e-100L && mag > 0.0L)) {
            u /= mag;
            v /= mag;
        }
    }
    return {u, v / dir};
}

// Secant with a capped step and backtracking on |f|; the normalised mismatch
// saturates away from roots, so unguarded steps can land in another basin.
ShootingRefinement secant(const Potential& p, cplx E_guess, double tol, std::pair<double, double> rays,
                          double r_max, int steps, int max_iter) {
    auto f = [&](cplx E) { return shoot_mismatch(p, E, rays, r_max, steps); };
    ShootingRefinement out;
    const double max_step = 0.2 * std::max(1.0, std::abs(E_guess));
    cplx e0 = E_guess;
    cplx e1 = E_guess + 1e-4 * std::max(1.0, std::abs(E_guess));
    cplx f0 = f(e0);
    cplx f1 = f(e1);
    if (std::abs(f0) < std::abs(f1)) {
        std::swap(e0, e1);
        std::swap(f0, f1);
    }
    for (int it = 0; it < max_iter; ++it) {
        out.iterations = it + 1;
        if (f1 == f0) break;
        cplx step = -f1 * (e1 - e0) / (f1 - f0);
        if (std::abs(step) > max_step) step *= max_step / std::abs(step);
        cplx e2 = e1 + step;
        cplx f2 = f(e2);
        for (int h = 0; h < 8 && std::abs(f2) > std::abs(f1) && std::abs(step) > tol; ++h) {
            step *= 0.5;
            e2 = e1 + step;
            f2 = f(e2);
        }
        e0 = e1;
        f0 = f1;
        e1 = e2;
        f1 = f2;
        if (std::abs(e1 - e0) < tol) {
            out.converged = true;
            break;
        }
    }
    out.energy = e1;
    return out;
}

}  // namespace

std::string to_string(OracleKind kind) {
    switch (kind) {
        case OracleKind::diagonalization: return "diagonalization";
        case OracleKind::shooting: return "shooting";
        case OracleKind::contour: return "contour";
    }
    return "unknown";
}

Eigen::MatrixXcd ho_hamiltonian_matrix(const Potential& p, int basis_size, double omega) {
    if (basis_size < 4) {
        throw DomainError("ho_hamiltonian_matrix: basis_size must be >= 4");
    }
    if (!(omega > 0.0)) {
        throw DomainError("ho_hamiltonian_matrix: omega must be > 0");
    }
    const int M = p.degree();
    const int P = basis_size + M + 2;
    std::vector<double> off(static_cast<std::size_t>(P - 1));
    for (int k = 0; k + 1 < P; ++k) {
        off[static_cast<std::size_t>(k)] = std::sqrt((k + 1) / (2.0 * omega));
    }
    // Horner in matrix form: ((lead X + b1) X + b2) X ... X.
    const cplx lead = (p.N() % 2 == 0) ? cplx{0.0, 1.0} : cplx{0.0, -1.0};
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(P, P) * lead;
    for (int k = 1; k <= M - 1; ++k) {
        acc = times_tridiagonal(acc, off);
        acc.diagonal().array() += p.beta(k);
    }
    acc = times_tridiagonal(acc, off);

    Eigen::MatrixXcd H = acc.topLeftCorner(basis_size, basis_size);
    const double kin = p.hbar() * p.hbar() * 0.5 * omega;
    for (int k = 0; k < basis_size; ++k) {
        H(k, k) += kin * (2.0 * k + 1.0);
        if (k + 2 < basis_size) {
            const double v = -kin * std::sqrt((k + 1.0) * (k + 2.0));
            H(k, k + 2) += v;
            H(k + 2, k) += v;
        }
    }
    return H;
}

std::vector<cplx> matrix_eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    if (solver.info() != Eigen::Success) {
        throw Error("matrix_eigenvalues: eigensolver failed");
    }
    const Eigen::VectorXcd ev = solver.eigenvalues();
    std::vector<cplx> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), by_real_then_imag);
    return out;
}

OracleResult diag_spectrum(const Potential& p, int count, const DiagOptions& opts) {
    if (count < 1) {
        throw DomainError("diag_spectrum: count must be >= 1");
    }
    const int B = opts.basis_size > 0 ? opts.basis_size : std::max(16 * count, 192);
    double omega = opts.omega.value_or(0.0);
    if (!opts.omega) {
        double best_score = std::numeric_limits<double>::infinity();
        for (double w : opts.omega_grid) {
            const auto coarse = matrix_eigenvalues(ho_hamiltonian_matrix(p, B / 2, w));
            const auto fine = matrix_eigenvalues(ho_hamiltonian_matrix(p, B, w));
            const StableSelection sel = select_stable(coarse, fine, count, opts.spurious_tol);
            double score = std::numeric_limits<double>::infinity();
            if (static_cast<int>(sel.values.size()) == count) {
                score = *std::max_element(sel.changes.begin(), sel.changes.end());
            }
            if (score < best_score) {
                best_score = score;
                omega = w;
            }
        }
        if (omega == 0.0) omega = opts.omega_grid.empty() ? 1.0 : opts.omega_grid.front();
    }
    const auto coarse = matrix_eigenvalues(ho_hamiltonian_matrix(p, B, omega));
    const auto fine = matrix_eigenvalues(ho_hamiltonian_matrix(p, 2 * B, omega));
    const StableSelection sel = select_stable(coarse, fine, count, opts.spurious_tol);

    OracleResult res;
    res.kind = OracleKind::diagonalization;
    res.values = sel.values;
    res.errors = sel.changes;
    for (std::size_t i = 0; i < sel.values.size(); ++i) {
        res.errors[i] = sel.changes[i] * std::max(1.0, std::abs(sel.values[i]));
        res.converged.push_back(sel.changes[i] < opts.accept_tol);
    }
    res.meta["basis_size"] = B;
    res.meta["refined_basis_size"] = 2 * B;
    res.meta["omega"] = omega;
    res.meta["requested"] = count;
    res.meta["found"] = static_cast<double>(sel.values.size());
    res.meta["max_error"] = res.errors.empty() ? 0.0 : *std::max_element(res.errors.begin(), res.errors.end());
    return res;
}

std::pair<double, double> wedge_rays(const Potential& p) {
    const int N = p.N();
    const double right = ((N % 2 == 0) ? -1.0 : 1.0) * kPi / (2.0 * (2.0 * N + 3.0));
    return {-kPi - right, right};
}

double default_ray_length(const Potential& p, cplx E) {
    return std::pow(1e3 * std::max(1.0, std::abs(E)), 1.0 / p.degree());
}

int default_steps(const Potential& p, cplx E, double r_max) {
    const auto [left, right] = wedge_rays(p);
    const double v = std::max(std::abs(p(std::polar(r_max, left))), std::abs(p(std::polar(r_max, right))));
    const double kappa = std::sqrt(v + std::abs(E)) / p.hbar();
    const double steps = std::ceil(r_max * kappa / 0.02);
    return static_cast<int>(std::clamp(steps, 1e4, 5e6));
}

cplx shoot_mismatch(const Potential& p, cplx E, std::pair<double, double> rays, double r_max, int steps) {
    if (r_max <= 0.0) r_max = default_ray_length(p, E);
    if (steps <= 0) steps = default_steps(p, E, r_max);
    const RayEnd L = integrate_ray(p, E, rays.first, r_max, steps);
    const RayEnd R = integrate_ray(p, E, rays.second, r_max, steps);
    const wide a = L.u * R.du_dx;
    const wide b = L.du_dx * R.u;
    const long double norm = std::abs(a) + std::abs(b);
    return norm == 0.0L ? cplx{} : cplx((a - b) / norm);
}

cplx shoot_wronskian_ratio(const Potential& p, cplx E, std::pair<double, double> rays, double r_max, int steps) {
    if (r_max <= 0.0) r_max = default_ray_length(p, E);
    if (steps <= 0) steps = default_steps(p, E, r_max);
    const RayEnd L = integrate_ray(p, E, rays.first, r_max, steps);
    const RayEnd R = integrate_ray(p, E, rays.second, r_max, steps);
    const wide a = L.u * R.du_dx;
    const wide b = L.du_dx * R.u;
    return cplx((a - b) / (a + b));
}

ShootingRefinement refine_energy_shooting(const Potential& p, cplx E_guess, double tol,
                                          const ShootingOptions& opts) {
    if (!(tol > 0.0)) {
        throw DomainError("refine_energy_shooting: tol must be > 0");
    }
    const auto rays = opts.rays.value_or(wedge_rays(p));
    const double r_max = opts.r_max > 0.0 ? opts.r_max : default_ray_length(p, E_guess);
    const int steps = opts.steps > 0 ? opts.steps : default_steps(p, E_guess, r_max);
    ShootingRefinement coarse = secant(p, E_guess, tol, rays, r_max, steps, opts.max_iter);
    if (!opts.richardson) {
        const ShootingRefinement fine = secant(p, coarse.energy, tol, rays, r_max, 2 * steps, opts.max_iter);
        ShootingRefinement out = fine;
        out.error_estimate = std::abs(fine.energy - coarse.energy);
        out.iterations += coarse.iterations;
        out.converged = coarse.converged && fine.converged;
        return out;
    }
    const ShootingRefinement fine = secant(p, coarse.energy, tol, rays, r_max, 2 * steps, opts.max_iter);
    ShootingRefinement out;
    out.energy = fine.energy + (fine.energy - coarse.energy) / 15.0;
    out.error_estimate = std::abs(fine.energy - coarse.energy);
    out.iterations = coarse.iterations + fine.iterations;
    out.converged = coarse.converged && fine.converged;
    return out;
}

OracleResult shooting_spectrum(const Potential& p, const std::vector<cplx>& guesses, double tol,
                               const ShootingOptions& opts) {
    OracleResult res;
    res.kind = OracleKind::shooting;
    double max_err = 0.0;
    for (const cplx& g : guesses) {
        const ShootingRefinement r = refine_energy_shooting(p, g, tol, opts);
        res.values.push_back(r.energy);
        res.errors.push_back(r.error_estimate);
        res.converged.push_back(r.converged);
        max_err = std::max(max_err, r.error_estimate);
    }
    const auto rays = opts.rays.value_or(wedge_rays(p));
    res.meta["theta_left"] = rays.first;
    res.meta["theta_right"] = rays.second;
    res.meta["steps"] = opts.steps;
    res.meta["r_max"] = opts.r_max;
    res.meta["richardson"] = opts.richardson ? 1.0 : 0.0;
    res.meta["max_error"] = max_err;
    return res;
}

cplx ContourLoop::point(double t) const {
    const double side = center.real() > 0.0 ? 1.0 : -1.0;
    return center + cplx{-side * semi_real * std::cos(t), semi_imag * std::sin(t)};
}

cplx ContourLoop::tangent(double t) const {
    const double side = center.real() > 0.0 ? 1.0 : -1.0;
    return {side * semi_real * std::sin(t), semi_imag * std::cos(t)};
}

ContourLoop default_loop(int N, double radius_margin) {
    if (!(radius_margin > 0.0)) {
        throw GeometryError("default_loop: radius_margin must be > 0");
    }
    const double theta = branch_points(N).angle();
    const double c = std::cos(theta);
    ContourLoop loop{cplx{c, 0.0}, 0.5 * std::abs(c), (1.0 + radius_margin) * std::sin(theta)};
    check_loop(N, loop);
    return loop;
}

void check_loop(int N, const ContourLoop& loop) {
    const int M = 2 * N + 1;
    const BranchPointPair bp = branch_points(N);
    auto inside = [&](cplx z) {
        const cplx d = z - loop.center;
        const double u = d.real() / loop.semi_real;
        const double v = d.imag() / loop.semi_imag;
        return u * u + v * v < 1.0;
    };
    if (!(loop.semi_real > 0.0) || !(loop.semi_imag > 0.0)) {
        throw GeometryError("contour loop has a non-positive semi-axis");
    }
    if (inside(cplx{})) {
        throw GeometryError("contour loop encloses the origin");
    }
    constexpr int kSamples = 4096;
    for (int k = 0; k < M; ++k) {
        const cplx root = std::polar(1.0, 2.0 * kPi * k / M);
        const bool designated = std::abs(root - bp.left) < 1e-12 || std::abs(root - bp.right) < 1e-12;
        if (inside(root) != designated) {
            throw GeometryError("contour loop does not enclose exactly the two designated branch points");
        }
        for (int s = 0; s < kSamples; ++s) {
            if (std::abs(loop.point(2.0 * kPi * s / kSamples) - root) < 1e-3) {
                throw GeometryError("contour loop passes within 1e-3 of a branch point");
            }
        }
    }
}

namespace {

// f(y, log y, a0) with log y and a0 continued along the loop.
template <class F>
cplx tracked_loop_integral(int N, const ContourLoop& loop, F&& f, double rel_tol) {
    const int M = 2 * N + 1;
    cplx previous{};
    for (int nodes = 256; nodes <= (1 << 20); nodes *= 2) {
        cplx sum{};
        cplx carry{};
        double scale = 0.0;
        cplx a0_prev{1.0, 0.0};
        cplx y_prev = loop.point(0.0);
        double arg = std::arg(y_prev);
        for (int k = 0; k < nodes; ++k) {
            const double t = 2.0 * kPi * k / nodes;
            const cplx y = loop.point(t);
            cplx a0 = std::sqrt(1.0 - ipow(y, M));
            if (k == 0) {
                if (a0.real() < 0.0) a0 = -a0;
            } else {
                if (std::abs(a0 + a0_prev) < std::abs(a0 - a0_prev)) a0 = -a0;
                arg += std::arg(y / y_prev);
            }
            a0_prev = a0;
            y_prev = y;
            const cplx term = f(y, cplx{std::log(std::abs(y)), arg}, a0) * loop.tangent(t);
            const cplx corrected = term - carry;
            const cplx next = sum + corrected;
            carry = (next - sum) - corrected;
            sum = next;
            scale += std::abs(term);
        }
        const double w = 2.0 * kPi / nodes;
        sum *= w;
        scale *= w;
        if (nodes > 256 && std::abs(sum - previous) <= std::max(rel_tol * std::abs(sum), 1e-14 * scale)) {
            return sum;
        }
        previous = sum;
    }
    return previous;
}

}  // namespace

cplx loop_integral(int N, const ContourLoop& loop, const std::function<cplx(cplx, cplx)>& f, double rel_tol) {
    return tracked_loop_integral(N, loop, [&](cplx y, cplx, cplx a0) { return f(y, a0); }, rel_tol);
}

cplx contour_integral_numeric(int N, int n, int j, const ContourLoop& loop) {
    if (j < 0) {
        throw DomainError("contour_integral_numeric: j must be >= 0");
    }
    check_loop(N, loop);
    const int M = 2 * N + 1;
    const bool integer_power = ((M * (j + 1)) % 2) == 0;
    const double power = 0.5 * M * (j + 1) - n;
    auto integrand = [&](cplx y, cplx log_y, cplx a0) {
        const cplx yp = integer_power ? ipow(y, M * (j + 1) / 2 - n) : std::exp(power * log_y);
        return yp * ipow(a0, -j);
    };
    return tracked_loop_integral(N, loop, integrand, 1e-12);
}

cplx contour_integral_numeric(int N, int n, int j, double radius_margin) {
    return contour_integral_numeric(N, n, j, default_loop(N, radius_margin));
}

bool contour_selection_rule_passes(int N, int n, int j) {
    const int M = 2 * N + 1;
    return j % 2 == 1 && ((n - 1) % M + M) % M != 0;
}

bool contour_closed_form_defined(int N, int n, int j) {
    if (j < 0) return false;
    if (j == 0) return true;
    if (j % 2 == 0) return false;
    if (contour_selection_rule_passes(N, n, j)) return true;
    const int M = 2 * N + 1;
    const int P = M * (j + 1) / 2 - n;
    return P >= 0;
}

cplx contour_integral_closed_form(int N, int n, int j) {
    if (!contour_closed_form_defined(N, n, j)) {
        throw DomainError("contour_integral_closed_form: (N=" + std::to_string(N) + ", n=" + std::to_string(n) +
                          ", j=" + std::to_string(j) + ") is a pole-residue case outside the closed form");
    }
    if (!contour_selection_rule_passes(N, n, j)) {
        return {};
    }
    const int M = 2 * N + 1;
    const int P = M * (j + 1) / 2 - n;
    const double theta = branch_points(N).angle();
    const double x = static_cast<double>(n - 1) / M;
    const double value = std::sin((P + 1) * theta) * gamma(1.0 - 0.5 * j) * gamma(1.5 - x + 0.5 * j) *
                         reciprocal_gamma(1.5 - x) / (P + 1);
    return cplx{0.0, 4.0 * value};
}

std::string phase_convention() {
    return "theta = arg(upper enclosed branch point) = 2*pi*ceil(N/2)/(2N+1); "
           "loop integral of y^P (1-y^M)^(-j/2) dy = 4i sin((P+1) theta) Gamma(1-j/2) Gamma((P+1)/M+1) / "
           "((P+1) Gamma((P+1)/M+1-j/2)) for odd j; orientation: the loop side facing the origin runs from the "
           "lower to the upper branch point; d_n = 2 sin((n-1) theta)/(pi Gamma(3/2-(n-1)/M)) * sum_j "
           "A_{2(n-j-1),2j+1} Gamma(1/2-j) Gamma(2+j-(n-1)/M)/(1+M(j+1)-n); vanishing iff M | (n-1)";
}

}  // namespace aee
