#include "aee/presets.hpp"

#include "aee/errors.hpp"

namespace aee {

OracleChoice parse_oracle_choice(const std::string& text) {
    if (text == "none" || text.empty()) return OracleChoice::none;
    if (text == "diag") return OracleChoice::diag;
    if (text == "shoot") return OracleChoice::shoot;
    if (text == "both") return OracleChoice::both;
    throw ConfigError("unknown oracle '" + text + "' (expected diag, shoot or both)");
}

std::string to_string(OracleChoice choice) {
    switch (choice) {
        case OracleChoice::none: return "none";
        case OracleChoice::diag: return "diag";
        case OracleChoice::shoot: return "shoot";
        case OracleChoice::both: return "both";
    }
    return "none";
}

TablePreset table_preset(int id) {
    const cplx I{0.0, 1.0};
    switch (id) {
        case 1:
            return {1, "ix^5 + ix", Potential(2, {0.0, 0.0, 0.0, I}), 14, 0, 11, OracleChoice::diag};
        case 2:
            return {2, "ix^5 + (1+i)x", Potential(2, {0.0, 0.0, 0.0, 1.0 + I}), 14, 0, 11, OracleChoice::diag};
        case 3:
            return {3, "-ix^7 + x^6 + ix^5 + x^2", Potential(3, {1.0, I, 0.0, 0.0, 1.0, 0.0}), 19, 0, 11,
                    OracleChoice::shoot};
        case 4:
            return {4, "ix^9 + x^2 + ix", Potential(4, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, I}), 39, 0, 10,
                    OracleChoice::shoot};
        default:
            throw RangeError("table_preset: id must be 1..4");
    }
}

EnergySeries preset_series(const TablePreset& preset, bool four_term) {
    if (!four_term) {
        return d_coefficients(preset.potential, preset.n_max);
    }
    const Potential& p = preset.potential;
    for (int k = 1; k < 2 * p.N(); ++k) {
        if (p.beta(k) != cplx{}) {
            throw DomainError("preset_series: four-term form needs only the linear coefficient");
        }
    }
    return two_term_series(p.N(), p.beta(2 * p.N()), p.hbar());
}

}  // namespace aee
