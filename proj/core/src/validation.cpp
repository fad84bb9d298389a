#include "aee/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "aee/energy_series.hpp"
#include "aee/errors.hpp"
#include "aee/oracle.hpp"
#include "aee/presets.hpp"
#include "aee/solver.hpp"
#include "aee/taylor.hpp"

namespace aee {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

double rel_diff(cplx a, cplx b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

ValidationCheck make_check(std::string name, double measured, double tol, std::string detail = {}) {
    return {std::move(name), measured <= tol, measured, tol, std::move(detail)};
}

// Deterministic generic potential with every coefficient nonzero.
Potential generic_potential(int N, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> betas;
    for (int k = 0; k < 2 * N; ++k) betas.emplace_back(u(rng), u(rng));
    return Potential(N, betas, 1.0);
}

std::vector<cplx> disk_points(int count, double radius, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> r01(0.0, 1.0);
    std::vector<cplx> pts;
    for (int i = 0; i < count; ++i) {
        const double r = radius * std::sqrt(r01(rng));
        pts.push_back(std::polar(r, 2.0 * kPi * r01(rng)));
    }
    return pts;
}

ValidationCheck check_two_path(const TableFaults& faults) {
    double worst = 0.0;
    std::string where;
    for (int N = 1; N <= 4; ++N) {
        for (cplx b : {kI, 1.0 + kI}) {
            const Potential p = two_term_potential(N, b);
            const int n_max = 2 * N + 3;
            const EnergySeries general = d_coefficients(build_tables(p, n_max, faults), n_max);
            const EnergySeries closed = two_term_series(N, b, 1.0);
            for (int slot : {0, 2 * N, 2 * N + 3}) {
                const double d = rel_diff(general.terms[static_cast<std::size_t>(slot)].d,
                                          closed.terms[static_cast<std::size_t>(slot)].d);
                if (d > worst) {
                    worst = d;
                    std::ostringstream os;
                    os << "worst at N=" << N << " b=" << b << " slot " << slot;
                    where = os.str();
                }
            }
        }
    }
    return make_check("two_path_equality", worst, 1e-12, where);
}

ValidationCheck check_contour_vs_gamma(std::vector<ValidationCheck>& extra) {
    double worst_rel = 0.0;
    double worst_zero = 0.0;
    int passing = 0;
    int vanishing = 0;
    int outside = 0;
    for (int N = 1; N <= 3; ++N) {
        for (int n = 0; n <= 8; ++n) {
            for (int j = 0; j <= 5; ++j) {
                if (!contour_closed_form_defined(N, n, j)) {
                    ++outside;
                    continue;
                }
                const cplx numeric = contour_integral_numeric(N, n, j);
                if (contour_selection_rule_passes(N, n, j)) {
                    ++passing;
                    worst_rel = std::max(worst_rel, rel_diff(numeric, contour_integral_closed_form(N, n, j)));
                } else {
                    ++vanishing;
                    worst_zero = std::max(worst_zero, std::abs(numeric));
                }
            }
        }
    }
    extra.push_back(make_check("contour_selection_rule_vanishing", worst_zero, 1e-10,
                               std::to_string(vanishing) + " vanishing cases"));
    return make_check("contour_vs_gamma", worst_rel, 1e-8,
                      std::to_string(passing) + " cases; " + std::to_string(outside) +
                          " pole-residue cases outside the closed form skipped");
}

ValidationCheck check_loop_shape() {
    double worst = 0.0;
    for (int N = 1; N <= 3; ++N) {
        for (int n : {0, 3, 5}) {
            worst = std::max(worst, rel_diff(contour_integral_numeric(N, n, 1, 0.25),
                                             contour_integral_numeric(N, n, 1, 0.6)));
        }
    }
    return make_check("contour_loop_independence", worst, 1e-9);
}

ValidationCheck check_taylor_vs_closed() {
    double worst = 0.0;
    std::string where;
    for (int N = 1; N <= 3; ++N) {
        const Potential p = generic_potential(N, 100u + static_cast<unsigned>(N));
        const int top = 4 * N + 6;
        const TablePair tables = build_tables(p, (top + 1) / 2);
        for (const cplx y : disk_points(20, 0.9, 7u + static_cast<unsigned>(N))) {
            for (int idx = 0; idx <= top; ++idx) {
                const double d = rel_diff(a_n_taylor(p, y, idx), a_m_closed_form(tables, y, idx));
                if (d > worst) {
                    worst = d;
                    where = "worst at N=" + std::to_string(N) + " index " + std::to_string(idx);
                }
            }
        }
    }
    return make_check("taylor_vs_closed_form", worst, 1e-9, where);
}

ValidationCheck check_hand_listed() {
    double worst = 0.0;
    for (int N = 1; N <= 3; ++N) {
        const int M = 2 * N + 1;
        const cplx b{0.7, -0.4};
        const Potential p = two_term_potential(N, b, 1.3);
        const double hbar = p.hbar();
        const TablePair tables = build_tables(p, 2 * N + 4);
        for (const cplx y : disk_points(8, 0.85, 31u + static_cast<unsigned>(N))) {
            const cplx r = 1.0 - ipow(y, M);
            const cplx a0 = std::sqrt(r);
            const cplx a2n3 = hbar * static_cast<double>(M) * ipow(y, M - 1) / (4.0 * r);
            const cplx da2n3 =
                hbar * M / 4.0 * ((M - 1.0) * ipow(y, M - 2) * r + static_cast<double>(M) * ipow(y, 2 * M - 2)) / (r * r);
            const cplx a4n = -b * y / (2.0 * kI * a0);
            const cplx a4n6 = -(a2n3 * a2n3 + hbar * da2n3) / (2.0 * a0);
            const std::pair<int, cplx> expected[] = {{0, a0}, {2 * N + 3, a2n3}, {4 * N, a4n}, {4 * N + 6, a4n6}};
            for (const auto& [idx, value] : expected) {
                worst = std::max(worst, rel_diff(a_m_closed_form(tables, y, idx), value));
                worst = std::max(worst, rel_diff(a_n_taylor(p, y, idx), value));
            }
        }
    }
    return make_check("hand_listed_terms", worst, 1e-12);
}

ValidationCheck check_parity_exclusion() {
    int bad = 0;
    int total = 0;
    for (int id = 1; id <= 4; ++id) {
        const TablePreset pr = table_preset(id);
        const TablePair t = build_tables(pr.potential, pr.n_max);
        for (const CoefficientTable* tab : {&t.even, &t.odd}) {
            for (const auto& [key, value] : tab->entries) {
                ++total;
                const auto [s, l] = key;
                if (s < 0 || l < 0 || (s + l) % 2 == 0) ++bad;
            }
        }
    }
    return make_check("parity_exclusion", bad, 0.0, std::to_string(total) + " stored entries");
}

ValidationCheck check_odd_terms_vanish(std::vector<ValidationCheck>& extra) {
    double worst = 0.0;
    double maslov = 0.0;
    for (int N = 1; N <= 3; ++N) {
        const Potential p = generic_potential(N, 200u + static_cast<unsigned>(N));
        const int top = 4 * N + 7;
        const TablePair tables = build_tables(p, top / 2);
        const ContourLoop loop = default_loop(N);
        for (int k = 1; k <= top; k += 2) {
            const cplx v = loop_integral(
                N, loop, [&](cplx y, cplx a0) { return a_m_closed_form(tables, y, k, a0); }, 1e-13) /
                           (2.0 * kPi * kI);
            if (k == 2 * N + 3) {
                maslov = std::max(maslov, std::abs(std::abs(v) - 0.5 * p.hbar()));
            } else {
                worst = std::max(worst, std::abs(v));
            }
        }
    }
    extra.push_back(make_check("odd_index_maslov_magnitude", maslov, 1e-12));
    return make_check("odd_index_terms_vanish", worst, 1e-12);
}

ValidationCheck check_pt_reality() {
    double worst = 0.0;
    for (int id : {1, 3, 4}) {
        const TablePreset pr = table_preset(id);
        for (const auto& t : d_coefficients(pr.potential, 60).terms) {
            worst = std::max(worst, std::abs(t.d.imag()) / (1.0 + std::abs(t.d)));
        }
    }
    return make_check("pt_reality_of_series", worst, 1e-12);
}

ValidationCheck check_real_axis_J() {
    double worst = 0.0;
    const EnergySeries s = preset_series(table_preset(1));
    for (double E : {5.0, 50.0, 500.0}) {
        const cplx J = eval_J(s, E);
        worst = std::max(worst, std::abs(J.imag()) / std::abs(J));
    }
    return make_check("real_axis_J_reality", worst, 1e-10);
}

ValidationCheck check_newton_derivative() {
    double worst = 0.0;
    auto fd_check = [&](const EnergySeries& s, cplx E, int k) {
        const double h = 1e-5 * std::max(1.0, std::abs(E));
        const cplx fd = (eval_J(s, E + h, k) - eval_J(s, E - h, k)) / (2.0 * h);
        worst = std::max(worst, rel_diff(fd, eval_J_derivative(s, E, k)));
    };
    for (int id : {1, 2, 3, 4}) {
        const TablePreset pr = table_preset(id);
        const EnergySeries s = preset_series(pr);
        fd_check(s, 50.0, s.n_max);
        SolveOptions opts;
        opts.fixed_truncation = s.n_max;
        opts.threads = 1;
        for (const auto& lvl : solve_range(s, pr.n_lo, pr.n_hi, opts)) {
            if (lvl.failure.empty()) fd_check(s, lvl.energy, lvl.k_trunc);
        }
    }
    return make_check("newton_derivative_fd", worst, 1e-6);
}

ValidationCheck check_hbar_scaling() {
    double worst = 0.0;
    for (int N = 1; N <= 3; ++N) {
        const Potential p1 = generic_potential(N, 300u + static_cast<unsigned>(N));
        const Potential p2(N, std::vector<cplx>(p1.betas().begin(), p1.betas().end()), 2.0 * p1.hbar());
        const TablePair t1 = build_tables(p1, 2 * N + 3);
        const TablePair t2 = build_tables(p2, 2 * N + 3);
        for (int s = 0; s <= 4 * N; ++s) {
            worst = std::max(worst, rel_diff(t1.even.at(s, 1), t2.even.at(s, 1)));
        }
        worst = std::max(worst, rel_diff(2.0 * t1.odd.at(2 * N - 1, 2), t2.odd.at(2 * N - 1, 2)));
    }
    return make_check("hbar_scaling", worst, 1e-15);
}

ValidationCheck check_solver_properties() {
    double worst = 0.0;
    std::string detail;
    for (int id : {1, 3, 4}) {
        const TablePreset pr = table_preset(id);
        const EnergySeries s = preset_series(pr);
        SolveOptions opts;
        opts.fixed_truncation = s.n_max;
        const auto levels = solve_range(s, pr.n_lo, pr.n_hi, opts);
        for (std::size_t i = 0; i < levels.size(); ++i) {
            if (!levels[i].converged) {
                worst = std::numeric_limits<double>::infinity();
                detail = "unconverged level in table " + std::to_string(id);
            }
            if (i > 0 && !(levels[i].energy.real() > levels[i - 1].energy.real())) {
                worst = std::numeric_limits<double>::infinity();
                detail = "non-monotone levels in table " + std::to_string(id);
            }
            if (id == 1 && levels[i].n >= 2) {
                worst = std::max(worst, std::abs(levels[i].energy.imag()) / levels[i].energy.real());
            }
        }
    }
    return make_check("solver_monotone_real_pt", worst, 1e-8, detail);
}

ValidationCheck check_oracle_conjugation() {
    const OracleResult r = diag_spectrum(table_preset(1).potential, 12);
    double worst = 0.0;
    for (const cplx& v : r.values) {
        double best = std::abs(v.imag());
        for (const cplx& w : r.values) best = std::min(best, std::abs(w - std::conj(v)));
        worst = std::max(worst, best / std::max(1.0, std::abs(v)));
    }
    if (r.values.size() != 12) worst = 1.0;
    return make_check("oracle_conjugation_symmetry", worst, 1e-8);
}

ValidationCheck check_oracle_triangle() {
    const Potential p = table_preset(1).potential;
    const OracleResult d = diag_spectrum(p, 10);
    double worst = d.values.size() == 10 ? 0.0 : 1.0;
    for (const cplx& v : d.values) {
        const ShootingRefinement s = refine_energy_shooting(p, v, 1e-11);
        worst = std::max(worst, std::abs(s.energy - v));
    }
    return make_check("oracle_triangle_diag_vs_shooting", worst, 1e-4);
}

}  // namespace

bool ValidationReport::all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

ValidationReport run_validation(const ValidationOptions& opts) {
    ValidationReport rep;
    rep.mode = opts.full ? "full" : "quick";
    rep.phase_convention = phase_convention();
    auto guarded = [&](const char* name, auto&& fn) {
        try {
            rep.checks.push_back(fn());
        } catch (const std::exception& e) {
            rep.checks.push_back({name, false, 0.0, 0.0, std::string("exception: ") + e.what()});
        }
    };
    std::vector<ValidationCheck> extra;
    guarded("two_path_equality", [&] { return check_two_path(opts.faults); });
    guarded("contour_vs_gamma", [&] { return check_contour_vs_gamma(extra); });
    guarded("taylor_vs_closed_form", [&] { return check_taylor_vs_closed(); });
    guarded("hand_listed_terms", [&] { return check_hand_listed(); });
    guarded("parity_exclusion", [&] { return check_parity_exclusion(); });
    guarded("odd_index_terms_vanish", [&] { return check_odd_terms_vanish(extra); });
    guarded("pt_reality_of_series", [&] { return check_pt_reality(); });
    guarded("real_axis_J_reality", [&] { return check_real_axis_J(); });
    guarded("newton_derivative_fd", [&] { return check_newton_derivative(); });
    guarded("hbar_scaling", [&] { return check_hbar_scaling(); });
    if (opts.full) {
        guarded("contour_loop_independence", [&] { return check_loop_shape(); });
        guarded("solver_monotone_real_pt", [&] { return check_solver_properties(); });
        guarded("oracle_conjugation_symmetry", [&] { return check_oracle_conjugation(); });
        guarded("oracle_triangle_diag_vs_shooting", [&] { return check_oracle_triangle(); });
    }
    rep.checks.insert(rep.checks.end(), extra.begin(), extra.end());
    return rep;
}

std::string report_to_json(const ValidationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"measured", c.measured},
                          {"tolerance", c.tolerance},
                          {"detail", c.detail}});
    }
    nlohmann::json out{{"mode", report.mode},
                       {"all_passed", report.all_passed()},
                       {"phase_convention", report.phase_convention},
                       {"checks", checks}};
    return out.dump(2) + "\n";
}

}  // namespace aee
