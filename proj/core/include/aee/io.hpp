#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "aee/energy_series.hpp"
#include "aee/oracle.hpp"
#include "aee/potential.hpp"
#include "aee/solver.hpp"

namespace aee {

/// `{"N": 2, "betas": [[re, im], ...], "hbar": 1.0}`; hbar defaults to 1.
/// Throws ConfigError on malformed input and DimensionError/DomainError from
/// the Potential invariants.
Potential potential_from_json(std::string_view text);
std::string potential_to_json(const Potential& p);

/// `{"N":..,"hbar":..,"n_max":..,"constant":[re,im],"terms":[{"n","d","exponent_num","exponent_den"}]}`
/// listing only the nonzero terms.
std::string series_to_json(const EnergySeries& s);
EnergySeries series_from_json(std::string_view text);

/// Fixed-width human-readable listing of the nonzero coefficients.
std::string series_to_text(const EnergySeries& s);

/// Shortest-form %.{digits}g rendering; "-0" normalised to "0".
std::string format_sig(double v, int digits = 10);

/// Header `n,re_E,im_E,residual,k_trunc,converged`, then one row per level.
std::string levels_to_csv(const std::vector<EnergyLevel>& levels);
std::string levels_to_json(const std::vector<EnergyLevel>& levels);

std::string oracle_to_json(const OracleResult& r);
/// `n,re_E,im_E,error,converged`, index n counting from 0.
std::string oracle_to_csv(const OracleResult& r);

/// Writes via a sibling temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace aee
