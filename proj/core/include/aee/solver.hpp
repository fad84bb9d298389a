#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aee/energy_series.hpp"

namespace aee {

struct EnergyLevel {
    int n = 0;
    cplx energy{};
    /// |eval_J(energy, k_trunc) - n hbar|
    double residual = 0.0;
    int k_trunc = 0;
    int iterations = 0;
    bool converged = false;
    /// Magnitude of the first omitted nonzero term at the returned energy.
    double est_series_error = 0.0;
    /// Empty unless the level failed; holds the error text otherwise.
    std::string failure;
};

struct SolveOptions {
    double tol = 1e-12;
    int max_iter = 50;
    /// Fixed truncation index; optimal truncation is re-selected each iteration when unset.
    std::optional<int> fixed_truncation;
    /// Switch nonzero terms on one at a time from the leading-order guess.
    bool continuation = true;
    /// Worker cap for solve_range; 0 reads AEE_THREADS, then hardware concurrency.
    unsigned threads = 0;
};

/// Leading-order inversion ((n hbar - constant)/d_0)^((4N+2)/(2N+3)), principal branch.
cplx initial_guess(const EnergySeries& s, int n);

/// Damped complex Newton on eval_J(E, k) = n hbar.
///
/// Throws BranchEscapeError if an iterate crosses the negative real E axis or
/// |E| drops below 1e-6. Exhausting max_iter returns the best iterate with
/// converged = false.
EnergyLevel solve_level(const EnergySeries& s, int n, const SolveOptions& opts = {});

/// Independent solves for n_lo..n_hi (empty when n_hi < n_lo). Per-level
/// errors are recorded in EnergyLevel::failure; the range never aborts.
std::vector<EnergyLevel> solve_range(const EnergySeries& s, int n_lo, int n_hi,
                                     const SolveOptions& opts = {});

/// Worker count from AEE_THREADS (clamped to >= 1) or hardware concurrency.
unsigned worker_count(unsigned requested = 0);

}  // namespace aee
