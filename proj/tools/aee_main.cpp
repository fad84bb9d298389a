#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aee/errors.hpp"
#include "commands.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw aee::ConfigError("cannot read config file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace aee::cli;
    CLI::App app{"Asymptotic energy expansions for odd-degree complex polynomial potentials"};
    app.require_subcommand(1);

    std::string config;
    std::string out;

    auto* coeffs = app.add_subcommand("coeffs", "Build the energy series and print its coefficients");
    coeffs->add_option("-c,--config", config, "Job config JSON")->required();
    coeffs->add_option("-o,--output", out, "Series JSON output path");

    auto* solve = app.add_subcommand("solve", "Solve the quantization condition for a level range");
    std::string oracle;
    int table = 0;
    bool four_term = false;
    auto* cfg_opt = solve->add_option("-c,--config", config, "Job config JSON");
    solve->add_option("--oracle", oracle, "Independent oracle: diag, shoot or both")
        ->check(CLI::IsMember({"diag", "shoot", "both"}));
    solve->add_option("-o,--output", out, "Level CSV output path");
    auto* t1 = solve->add_flag_callback("--table1", [&] { table = 1; }, "Reference Hamiltonian ix^5 + ix");
    auto* t2 = solve->add_flag_callback("--table2", [&] { table = 2; }, "Reference Hamiltonian ix^5 + (1+i)x");
    auto* t3 = solve->add_flag_callback("--table3", [&] { table = 3; }, "Reference Hamiltonian, degree 7");
    auto* t4 = solve->add_flag_callback("--table4", [&] { table = 4; }, "Reference Hamiltonian, degree 9");
    solve->add_flag("--two-term", four_term, "Use the four-term closed form (tables 1 and 2)");
    for (auto* t : {t1, t2, t3, t4}) {
        t->excludes(cfg_opt);
        for (auto* u : {t1, t2, t3, t4}) {
            if (u != t) t->excludes(u);
        }
    }

    auto* validate = app.add_subcommand("validate", "Run the cross-check suites");
    bool quick = false;
    bool full = false;
    bool corrupt = false;
    auto* q = validate->add_flag("--quick", quick, "Engine checks only (default)");
    auto* f = validate->add_flag("--full", full, "Add the oracle checks");
    q->excludes(f);
    validate->add_flag("--corrupt-seed", corrupt, "Test hook: perturb the hbar seed of the two-path check");
    validate->add_option("-o,--output", out, "Report JSON output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kUsageError;
    }

    const std::optional<std::filesystem::path> out_path =
        out.empty() ? std::nullopt : std::optional<std::filesystem::path>(out);
    try {
        if (*coeffs) {
            return cmd_coeffs(parse_job_config(read_file(config)), out_path, std::cout, std::cerr);
        }
        if (*solve) {
            SolveJob job;
            if (table != 0) {
                job = solve_job_from_preset(aee::table_preset(table), four_term);
            } else {
                if (config.empty()) {
                    std::cerr << "solve needs -c CONFIG or one of --table1..--table4\n";
                    return kUsageError;
                }
                if (four_term) {
                    std::cerr << "--two-term applies only to the table presets\n";
                    return kUsageError;
                }
                job = solve_job_from_config(parse_job_config(read_file(config)));
            }
            if (!oracle.empty()) job.oracle = aee::parse_oracle_choice(oracle);
            return cmd_solve(job, out_path, std::cout, std::cerr);
        }
        if (*validate) {
            return cmd_validate(full, corrupt, out_path, std::cout, std::cerr);
        }
    } catch (const aee::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsageError;
    } catch (const aee::Error& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return kEngineError;
    }
    return kUsageError;
}
