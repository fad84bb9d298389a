#pragma once

#include <string>
#include <vector>

#include "aee/coefficient_table.hpp"

namespace aee {

struct ValidationCheck {
    std::string name;
    bool passed = false;
    /// Worst deviation observed, in the units of `tolerance`.
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct ValidationReport {
    std::string mode;
    std::string phase_convention;
    std::vector<ValidationCheck> checks;

    bool all_passed() const noexcept;
};

struct ValidationOptions {
    /// Adds the oracle checks (diagonalisation, shooting, spectra symmetry).
    bool full = false;
    /// Faults injected into the tables of the two-path check only.
    TableFaults faults;
};

ValidationReport run_validation(const ValidationOptions& opts = {});

std::string report_to_json(const ValidationReport& report);

}  // namespace aee
