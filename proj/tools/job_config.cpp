#include "job_config.hpp"

#include <algorithm>

#include <json.hpp>

#include "aee/errors.hpp"
#include "aee/io.hpp"

namespace aee::cli {

using nlohmann::json;

namespace {

int get_int(const json& j, const char* key) {
    if (!j[key].is_number_integer()) throw ConfigError(std::string("\"") + key + "\" must be an integer");
    return j[key].get<int>();
}

}  // namespace

JobConfig parse_job_config(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const char* known[] = {"potential", "n_terms", "n_max", "levels", "tol", "truncation", "outputs", "oracle"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
            throw ConfigError("unknown config field \"" + key + "\"");
        }
    }
    if (!j.contains("potential")) throw ConfigError("config needs a \"potential\" object");

    JobConfig cfg;
    try {
        cfg.potential = potential_from_json(j["potential"].dump());
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(std::string("invalid potential: ") + e.what());
    }
    if (j.contains("n_terms")) {
        cfg.n_terms = get_int(j, "n_terms");
        if (cfg.n_terms < 1) throw ConfigError("\"n_terms\" must be >= 1");
    }
    if (j.contains("n_max")) {
        cfg.n_max = get_int(j, "n_max");
        if (*cfg.n_max < 0) throw ConfigError("\"n_max\" must be >= 0");
    }
    if (j.contains("levels")) {
        const json& lv = j["levels"];
        if (!lv.is_array() || (lv.size() != 0 && lv.size() != 2)) {
            throw ConfigError("\"levels\" must be [] or [n_lo, n_hi]");
        }
        if (lv.empty()) {
            cfg.n_lo = 0;
            cfg.n_hi = -1;
        } else {
            if (!lv[0].is_number_integer() || !lv[1].is_number_integer()) {
                throw ConfigError("\"levels\" bounds must be integers");
            }
            cfg.n_lo = lv[0].get<int>();
            cfg.n_hi = lv[1].get<int>();
            if (cfg.n_lo < 0) throw ConfigError("\"levels\" lower bound must be >= 0");
        }
    }
    if (j.contains("tol")) {
        if (!j["tol"].is_number() || !(j["tol"].get<double>() > 0.0)) {
            throw ConfigError("\"tol\" must be a positive number");
        }
        cfg.tol = j["tol"].get<double>();
    }
    if (j.contains("truncation")) {
        const std::string t = j["truncation"].is_string() ? j["truncation"].get<std::string>() : "";
        if (t == "fixed") {
            cfg.fixed_truncation = true;
        } else if (t != "optimal") {
            throw ConfigError("\"truncation\" must be \"optimal\" or \"fixed\"");
        }
    }
    if (j.contains("outputs")) {
        if (!j["outputs"].is_array()) throw ConfigError("\"outputs\" must be an array");
        cfg.csv = cfg.json = false;
        for (const auto& o : j["outputs"]) {
            const std::string f = o.is_string() ? o.get<std::string>() : "";
            if (f == "csv") {
                cfg.csv = true;
            } else if (f == "json") {
                cfg.json = true;
            } else {
                throw ConfigError("\"outputs\" entries must be \"csv\" or \"json\"");
            }
        }
    }
    if (j.contains("oracle")) {
        if (!j["oracle"].is_string()) throw ConfigError("\"oracle\" must be a string");
        cfg.oracle = parse_oracle_choice(j["oracle"].get<std::string>());
    }
    return cfg;
}

}  // namespace aee::cli
