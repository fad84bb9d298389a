#include "commands.hpp"

#include <json.hpp>

#include "aee/errors.hpp"
#include "aee/io.hpp"
#include "aee/oracle.hpp"
#include "aee/validation.hpp"

namespace aee::cli {

namespace {

std::filesystem::path json_sibling(const std::filesystem::path& p) {
    std::filesystem::path j = p;
    j.replace_extension(".json");
    if (j == p) j += ".json";
    return j;
}

std::vector<std::pair<std::string, OracleResult>> run_oracles(const SolveJob& job,
                                                              const std::vector<EnergyLevel>& levels) {
    std::vector<std::pair<std::string, OracleResult>> out;
    if (levels.empty()) return out;
    const bool diag = job.oracle == OracleChoice::diag || job.oracle == OracleChoice::both;
    const bool shoot = job.oracle == OracleChoice::shoot || job.oracle == OracleChoice::both;
    if (diag) {
        OracleResult full = diag_spectrum(job.potential, job.n_hi + 1);
        OracleResult r = full;
        r.values.clear();
        r.errors.clear();
        r.converged.clear();
        for (int n = job.n_lo; n <= job.n_hi; ++n) {
            const auto i = static_cast<std::size_t>(n);
            if (i < full.values.size()) {
                r.values.push_back(full.values[i]);
                r.errors.push_back(full.errors[i]);
                r.converged.push_back(full.converged[i]);
            }
        }
        out.emplace_back("diag", std::move(r));
    }
    if (shoot) {
        std::vector<cplx> guesses;
        for (const auto& l : levels) {
            guesses.push_back(l.failure.empty() ? l.energy : initial_guess(job.series, l.n));
        }
        out.emplace_back("shoot", shooting_spectrum(job.potential, guesses, 1e-10));
    }
    return out;
}

}  // namespace

EnergySeries job_series(const JobConfig& cfg) {
    if (cfg.n_max) return d_coefficients(cfg.potential, *cfg.n_max);
    return d_coefficients_nonzero(cfg.potential, cfg.n_terms);
}

int cmd_coeffs(const JobConfig& cfg, const std::optional<std::filesystem::path>& out, std::ostream& os,
               std::ostream& err) {
    try {
        const EnergySeries s = job_series(cfg);
        os << series_to_text(s);
        if (out) write_file_atomic(*out, series_to_json(s));
        return kSuccess;
    } catch (const FormulaDegeneracyError& e) {
        err << "engine error (n=" << e.n() << ", j=" << e.j() << "): " << e.what() << "\n";
        return kEngineError;
    } catch (const Error& e) {
        err << "engine error: " << e.what() << "\n";
        return kEngineError;
    }
}

SolveJob solve_job_from_config(const JobConfig& cfg) {
    SolveJob job;
    job.series = job_series(cfg);
    job.potential = cfg.potential;
    job.n_lo = cfg.n_lo;
    job.n_hi = cfg.n_hi;
    job.options.tol = cfg.tol;
    if (cfg.fixed_truncation) job.options.fixed_truncation = job.series.n_max;
    job.oracle = cfg.oracle;
    job.csv = cfg.csv;
    job.json = cfg.json;
    return job;
}

SolveJob solve_job_from_preset(const TablePreset& preset, bool four_term) {
    SolveJob job;
    job.series = preset_series(preset, four_term);
    job.potential = preset.potential;
    job.n_lo = preset.n_lo;
    job.n_hi = preset.n_hi;
    job.options.fixed_truncation = job.series.n_max;
    return job;
}

std::string solve_csv(const std::vector<EnergyLevel>& levels,
                      const std::vector<std::pair<std::string, OracleResult>>& oracles) {
    const std::string base = levels_to_csv(levels);
    if (oracles.empty()) return base;
    std::string out;
    std::size_t pos = 0;
    for (std::size_t row = 0; pos < base.size(); ++row) {
        const std::size_t eol = base.find('\n', pos);
        out += base.substr(pos, eol - pos);
        for (const auto& [name, r] : oracles) {
            if (row == 0) {
                out += "," + name + "_re_E," + name + "_im_E," + name + "_abs_diff";
            } else if (row - 1 < r.values.size()) {
                const cplx v = r.values[row - 1];
                const cplx e = levels[row - 1].energy;
                out += "," + format_sig(v.real()) + "," + format_sig(v.imag()) + "," + format_sig(std::abs(v - e), 3);
            } else {
                out += ",,,";
            }
        }
        out += "\n";
        pos = eol + 1;
    }
    return out;
}

int cmd_solve(const SolveJob& job, const std::optional<std::filesystem::path>& out, std::ostream& os,
              std::ostream& err) {
    std::vector<EnergyLevel> levels;
    std::vector<std::pair<std::string, OracleResult>> oracles;
    try {
        levels = solve_range(job.series, job.n_lo, job.n_hi, job.options);
        oracles = run_oracles(job, levels);
    } catch (const Error& e) {
        err << "engine error: " << e.what() << "\n";
        return kEngineError;
    }
    const std::string csv = solve_csv(levels, oracles);
    std::string json_text;
    if (job.json) {
        nlohmann::json doc{{"levels", nlohmann::json::parse(levels_to_json(levels))}};
        for (const auto& [name, r] : oracles) doc[name] = nlohmann::json::parse(oracle_to_json(r));
        json_text = doc.dump(2) + "\n";
    }
    if (out) {
        if (job.csv) write_file_atomic(*out, csv);
        if (job.json) write_file_atomic(job.csv ? json_sibling(*out) : *out, json_text);
    } else {
        if (job.csv) os << csv;
        if (job.json) os << json_text;
    }
    bool all = true;
    for (const auto& l : levels) {
        if (!l.converged) {
            all = false;
            err << "level " << l.n << " did not converge" << (l.failure.empty() ? "" : ": " + l.failure) << "\n";
        }
    }
    return all ? kSuccess : kNotConverged;
}

int cmd_validate(bool full, bool corrupt_seed, const std::optional<std::filesystem::path>& out, std::ostream& os,
                 std::ostream& err) {
    ValidationOptions opts;
    opts.full = full;
    if (corrupt_seed) opts.faults.hbar_seed_scale = 1.5;
    ValidationReport rep;
    try {
        rep = run_validation(opts);
    } catch (const Error& e) {
        err << "engine error: " << e.what() << "\n";
        return kEngineError;
    }
    const std::string text = report_to_json(rep);
    if (out) {
        write_file_atomic(*out, text);
    }
    os << text;
    for (const auto& c : rep.checks) {
        if (!c.passed) err << "FAILED " << c.name << ": measured " << c.measured << " > " << c.tolerance << "\n";
    }
    return rep.all_passed() ? kSuccess : kValidationFailed;
}

}  // namespace aee::cli
