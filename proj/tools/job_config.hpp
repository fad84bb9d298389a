#pragma once

#include <optional>
#include <string_view>

#include "aee/potential.hpp"
#include "aee/presets.hpp"

namespace aee::cli {

/// Validated job description; every field is checked before any computation.
struct JobConfig {
    Potential potential{1, {cplx{}, cplx{}}, 1.0};
    /// Nonzero series coefficients to build, d_0 included.
    int n_terms = 25;
    /// Explicit index cut-off; overrides n_terms when set.
    std::optional<int> n_max;
    int n_lo = 0;
    /// Inclusive; n_hi < n_lo is an empty range.
    int n_hi = 11;
    double tol = 1e-12;
    /// Fixed truncation at the series end instead of optimal truncation.
    bool fixed_truncation = false;
    bool csv = true;
    bool json = false;
    OracleChoice oracle = OracleChoice::none;
};

/// Throws ConfigError with a field-specific message.
JobConfig parse_job_config(std::string_view text);

}  // namespace aee::cli
