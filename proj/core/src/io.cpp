#include "aee/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aee/errors.hpp"

namespace aee {

namespace {

using nlohmann::json;

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ConfigError("complex values must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json parse(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

Potential potential_from_json(std::string_view text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("N") || !j.contains("betas")) {
        throw ConfigError("potential JSON needs \"N\" and \"betas\"");
    }
    if (!j["N"].is_number_integer()) throw ConfigError("\"N\" must be an integer");
    if (!j["betas"].is_array()) throw ConfigError("\"betas\" must be an array");
    std::vector<cplx> betas;
    for (const auto& b : j["betas"]) betas.push_back(cplx_from(b));
    double hbar = 1.0;
    if (j.contains("hbar")) {
        if (!j["hbar"].is_number()) throw ConfigError("\"hbar\" must be a number");
        hbar = j["hbar"].get<double>();
    }
    return Potential(j["N"].get<int>(), std::move(betas), hbar);
}

std::string potential_to_json(const Potential& p) {
    json betas = json::array();
    for (const cplx& b : p.betas()) betas.push_back(cplx_json(b));
    return json{{"N", p.N()}, {"betas", betas}, {"hbar", p.hbar()}}.dump();
}

std::string series_to_json(const EnergySeries& s) {
    json terms = json::array();
    for (const auto& t : s.terms) {
        if (t.d == cplx{}) continue;
        terms.push_back(
            {{"n", t.n}, {"d", cplx_json(t.d)}, {"exponent_num", t.exponent_num}, {"exponent_den", t.exponent_den}});
    }
    json out{{"N", s.N}, {"hbar", s.hbar}, {"n_max", s.n_max}, {"constant", cplx_json(s.constant)},
             {"terms", terms}};
    return out.dump(2) + "\n";
}

EnergySeries series_from_json(std::string_view text) {
    const json j = parse(text);
    try {
        EnergySeries s;
        s.N = j.at("N").get<int>();
        s.hbar = j.at("hbar").get<double>();
        s.n_max = j.at("n_max").get<int>();
        s.constant = cplx_from(j.at("constant"));
        for (int n = 0; n <= s.n_max; ++n) s.terms.push_back(make_term(s.N, n, {}));
        for (const auto& t : j.at("terms")) {
            const int n = t.at("n").get<int>();
            if (n < 0 || n > s.n_max) throw ConfigError("series term index out of range");
            s.terms[static_cast<std::size_t>(n)].d = cplx_from(t.at("d"));
        }
        return s;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed series JSON: ") + e.what());
    }
}

std::string series_to_text(const EnergySeries& s) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "N = %d, hbar = %s, n_max = %d, nonzero terms = %d\n", s.N,
                  format_sig(s.hbar).c_str(), s.n_max, s.nonzero_count());
    os << line;
    std::snprintf(line, sizeof line, "%5s  %12s  %24s  %24s\n", "n", "exponent", "re d_n", "im d_n");
    os << line;
    std::snprintf(line, sizeof line, "%5s  %12s  %24.16e  %24.16e\n", "const", "0", s.constant.real(),
                  s.constant.imag());
    os << line;
    for (const auto& t : s.terms) {
        if (t.d == cplx{}) continue;
        const std::string expo = std::to_string(t.exponent_num) + "/" + std::to_string(t.exponent_den);
        std::snprintf(line, sizeof line, "%5d  %12s  %24.16e  %24.16e\n", t.n, expo.c_str(), t.d.real(),
                      t.d.imag());
        os << line;
    }
    return os.str();
}

std::string format_sig(double v, int digits) {
    if (v == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string levels_to_csv(const std::vector<EnergyLevel>& levels) {
    std::string out = "n,re_E,im_E,residual,k_trunc,converged\n";
    for (const auto& l : levels) {
        out += std::to_string(l.n) + "," + format_sig(l.energy.real()) + "," + format_sig(l.energy.imag()) + "," +
               format_sig(l.residual, 3) + "," + std::to_string(l.k_trunc) + "," + (l.converged ? "true" : "false") +
               "\n";
    }
    return out;
}

std::string levels_to_json(const std::vector<EnergyLevel>& levels) {
    json arr = json::array();
    for (const auto& l : levels) {
        json row{{"n", l.n},
                 {"energy", cplx_json(l.energy)},
                 {"residual", l.residual},
                 {"k_trunc", l.k_trunc},
                 {"iterations", l.iterations},
                 {"converged", l.converged},
                 {"est_series_error", l.est_series_error}};
        if (!l.failure.empty()) row["failure"] = l.failure;
        arr.push_back(row);
    }
    return arr.dump(2) + "\n";
}

std::string oracle_to_json(const OracleResult& r) {
    json values = json::array();
    for (const cplx& v : r.values) values.push_back(cplx_json(v));
    json meta = json::object();
    for (const auto& [k, v] : r.meta) meta[k] = v;
    json out{{"kind", to_string(r.kind)}, {"values", values}, {"errors", r.errors}, {"meta", meta}};
    json conv = json::array();
    for (bool c : r.converged) conv.push_back(c);
    out["converged"] = conv;
    return out.dump(2) + "\n";
}

std::string oracle_to_csv(const OracleResult& r) {
    std::string out = "n,re_E,im_E,error,converged\n";
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        const double err = i < r.errors.size() ? r.errors[i] : 0.0;
        const bool conv = i < r.converged.size() && r.converged[i];
        out += std::to_string(i) + "," + format_sig(r.values[i].real()) + "," + format_sig(r.values[i].imag()) + "," +
               format_sig(err, 3) + "," + (conv ? "true" : "false") + "\n";
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open " + tmp.string() + " for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw Error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error("cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

}  // namespace aee
