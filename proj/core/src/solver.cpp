#include "aee/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "aee/errors.hpp"

namespace aee {

namespace {

constexpr double kMinModulus = 1e-6;

struct NewtonState {
    cplx E;
    int iterations = 0;
};

bool crosses_negative_axis(cplx from, cplx to) {
    if (to.real() >= 0.0) return false;
    if (to.imag() == 0.0) return true;
    return from.imag() != 0.0 && std::signbit(from.imag()) != std::signbit(to.imag());
}

void check_iterate(cplx from, cplx to) {
    if (std::abs(to) < kMinModulus) {
        throw BranchEscapeError("solve_level: |E| collapsed below 1e-6");
    }
    if (crosses_negative_axis(from, to)) {
        throw BranchEscapeError("solve_level: iterate crossed the negative real E axis");
    }
}

// One damped Newton step at fixed truncation; returns |f| after the step.
double newton_step(const EnergySeries& s, double target, int k, NewtonState& st) {
    const cplx f = eval_J(s, st.E, k) - target;
    const cplx fp = eval_J_derivative(s, st.E, k);
    if (fp == cplx{}) {
        throw BranchEscapeError("solve_level: vanishing derivative");
    }
    cplx step = -f / fp;
    cplx candidate = st.E + step;
    double f_new = std::abs(eval_J(s, candidate, k) - target);
    for (int h = 0; h < 8 && !(f_new <= std::abs(f)); ++h) {
        step *= 0.5;
        candidate = st.E + step;
        if (std::abs(candidate) < kMinModulus) break;
        f_new = std::abs(eval_J(s, candidate, k) - target);
    }
    check_iterate(st.E, candidate);
    st.E = candidate;
    ++st.iterations;
    return f_new;
}

}  // namespace

cplx initial_guess(const EnergySeries& s, int n) {
    const cplx d0 = s.terms.at(0).d;
    const cplx base = (static_cast<double>(n) * s.hbar - s.constant) / d0;
    const double power = (4.0 * s.N + 2.0) / (2.0 * s.N + 3.0);
    return std::pow(base, power);
}

EnergyLevel solve_level(const EnergySeries& s, int n, const SolveOptions& opts) {
    if (n < 0) {
        throw DomainError("solve_level: n must be >= 0");
    }
    if (!(opts.tol > 0.0) || opts.max_iter < 1) {
        throw DomainError("solve_level: tol must be > 0 and max_iter >= 1");
    }
    if (opts.fixed_truncation && (*opts.fixed_truncation < 0 || *opts.fixed_truncation > s.n_max)) {
        throw RangeError("solve_level: fixed truncation outside the series");
    }
    const double target = n * s.hbar;
    const double tol = opts.tol * (1.0 + target);
    NewtonState st{initial_guess(s, n)};

    auto final_k = [&](cplx E) {
        return opts.fixed_truncation ? *opts.fixed_truncation : optimal_truncation(s, E);
    };

    if (opts.continuation) {
        for (int k = 1; k <= s.n_max; ++k) {
            if (s.terms[static_cast<std::size_t>(k)].d == cplx{}) continue;
            if (k > final_k(st.E)) break;
            for (int it = 0; it < opts.max_iter; ++it) {
                if (newton_step(s, target, k, st) <= tol) break;
            }
        }
    }

    EnergyLevel level;
    level.n = n;
    int k = final_k(st.E);
    int switches = 0;
    double residual = std::abs(eval_J(s, st.E, k) - target);
    for (int it = 0; it < opts.max_iter && residual > tol; ++it) {
        newton_step(s, target, k, st);
        if (!opts.fixed_truncation && switches < 4) {
            const int k_new = optimal_truncation(s, st.E);
            if (k_new != k) {
                ++switches;
                k = k_new;
            }
        }
        residual = std::abs(eval_J(s, st.E, k) - target);
    }
    level.energy = st.E;
    level.k_trunc = k;
    level.residual = residual;
    level.iterations = st.iterations;
    level.converged = residual <= tol;
    level.est_series_error = first_omitted_magnitude(s, st.E, k);
    return level;
}

unsigned worker_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("AEE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<EnergyLevel> solve_range(const EnergySeries& s, int n_lo, int n_hi, const SolveOptions& opts) {
    if (n_lo < 0) {
        throw DomainError("solve_range: n_lo must be >= 0");
    }
    if (n_hi < n_lo) return {};
    const auto count = static_cast<std::size_t>(n_hi - n_lo + 1);
    std::vector<EnergyLevel> out(count);

    auto solve_one = [&](std::size_t i) {
        const int n = n_lo + static_cast<int>(i);
        try {
            out[i] = solve_level(s, n, opts);
        } catch (const Error& e) {
            out[i] = EnergyLevel{};
            out[i].n = n;
            out[i].failure = e.what();
        }
    };

    const unsigned workers = std::min<unsigned>(worker_count(opts.threads), static_cast<unsigned>(count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) solve_one(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) solve_one(i);
        });
    }
    pool.clear();
    return out;
}

}  // namespace aee
