#pragma once

#include <filesystem>
#include <optional>
#include <ostream>

#include "aee/energy_series.hpp"
#include "aee/oracle.hpp"
#include "aee/presets.hpp"
#include "aee/solver.hpp"
#include "job_config.hpp"

namespace aee::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kEngineError = 2,
    kNotConverged = 3,
    kValidationFailed = 4,
};

/// The series a job asks for: explicit n_max, else n_terms nonzero terms.
EnergySeries job_series(const JobConfig& cfg);

int cmd_coeffs(const JobConfig& cfg, const std::optional<std::filesystem::path>& out, std::ostream& os,
               std::ostream& err);

struct SolveJob {
    EnergySeries series;
    Potential potential{1, {cplx{}, cplx{}}, 1.0};
    int n_lo = 0;
    int n_hi = -1;
    SolveOptions options;
    OracleChoice oracle = OracleChoice::none;
    bool csv = true;
    bool json = false;
};

SolveJob solve_job_from_config(const JobConfig& cfg);
SolveJob solve_job_from_preset(const TablePreset& preset, bool four_term);

/// CSV with levels, plus `<oracle>_re_E,<oracle>_im_E,<oracle>_abs_diff` column groups.
std::string solve_csv(const std::vector<EnergyLevel>& levels, const std::vector<std::pair<std::string, OracleResult>>& oracles);

int cmd_solve(const SolveJob& job, const std::optional<std::filesystem::path>& out, std::ostream& os,
              std::ostream& err);

int cmd_validate(bool full, bool corrupt_seed, const std::optional<std::filesystem::path>& out, std::ostream& os,
                 std::ostream& err);

}  // namespace aee::cli
