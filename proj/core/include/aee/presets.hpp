#pragma once

#include <string>

#include "aee/energy_series.hpp"
#include "aee/potential.hpp"

namespace aee {

enum class OracleChoice { none, diag, shoot, both };

OracleChoice parse_oracle_choice(const std::string& text);
std::string to_string(OracleChoice choice);

/// One of the four reference Hamiltonians with the truncation that reproduces
/// its reference asymptotic values.
struct TablePreset {
    int id = 1;
    std::string name;
    Potential potential{1, {cplx{}, cplx{}}, 1.0};
    /// Series index cut-off used with fixed truncation.
    int n_max = 0;
    int n_lo = 0;
    int n_hi = 0;
    /// Independent oracle that produces the reference exact values.
    OracleChoice reference_oracle = OracleChoice::diag;
};

/// id in 1..4; throws RangeError otherwise.
TablePreset table_preset(int id);

/// General series up to preset.n_max, or the four-term closed form when
/// `four_term` is set (only for presets whose potential is (ix)^(2N+1) + b x).
EnergySeries preset_series(const TablePreset& preset, bool four_term = false);

}  // namespace aee
