#include "iqr/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace iqr {

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    if (s == "text") return OutputFormat::Text;
    throw std::invalid_argument("unknown output format: " + s);
}

const char* format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
        case OutputFormat::Text: return "text";
    }
    return "?";
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for " + key + ": " + v);
    }
}

long long to_int(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer value for " + key + ": " + v);
    }
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "family") {
            if (val == "woods-saxon" || val == "ws")
                cfg.family = Family::WoodsSaxon;
            else if (val == "hulthen")
                cfg.family = Family::Hulthen;
            else
                throw std::invalid_argument("config: unknown family: " + val);
        } else if (key == "v0_mev") {
            cfg.v0_mev = to_double(key, val);
        } else if (key == "r0_fm") {
            cfg.r0_fm = to_double(key, val);
        } else if (key == "a_fm") {
            cfg.a_fm = to_double(key, val);
        } else if (key == "mass_number") {
            cfg.mass_number = static_cast<int>(to_int(key, val));
        } else if (key == "big_r0_fm") {
            cfg.big_r0_fm = to_double(key, val);
        } else if (key == "q") {
            cfg.q = to_double(key, val);
        } else if (key == "mass_term") {
            cfg.mass_term = to_double(key, val);
        } else if (key == "n_max") {
            cfg.n_max = static_cast<int>(to_int(key, val));
        } else if (key == "l_max") {
            cfg.l_max = static_cast<int>(to_int(key, val));
        } else if (key == "d_list") {
            cfg.d_list.clear();
            std::istringstream ds(val);
            std::string tok;
            while (std::getline(ds, tok, ',')) {
                tok = trim(tok);
                if (!tok.empty())
                    cfg.d_list.push_back(static_cast<int>(to_int(key, tok)));
            }
        } else if (key == "format") {
            cfg.format = parse_format(val);
        } else if (key == "seed") {
            cfg.seed = static_cast<unsigned long long>(to_int(key, val));
        } else if (key == "samples") {
            cfg.samples = static_cast<int>(to_int(key, val));
        } else {
            throw std::invalid_argument("config: unknown key: " + key);
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

PotentialSpec RunConfig::potential() const {
    if (family == Family::Hulthen) {
        // Hulthen convention: R0 = 1, alpha = 1/a
        return PotentialSpec::hulthen(v0_mev, 1.0 / a_fm, mass_term);
    }
    double R0 = r0_fm;
    if (big_r0_fm)
        R0 = *big_r0_fm;
    else if (mass_number)
        R0 = derive_radius(r0_fm, *mass_number);
    return PotentialSpec::woods_saxon(v0_mev, R0, a_fm, mass_term);
}

void RunConfig::validate() const {
    if (n_max < 0) throw std::invalid_argument("config: n_max must be >= 0");
    if (l_max < 0) throw std::invalid_argument("config: l_max must be >= 0");
    if (d_list.empty()) throw std::invalid_argument("config: d_list must be nonempty");
    for (int D : d_list)
        if (D < 2) throw std::invalid_argument("config: every D must be >= 2");
    if (q) {
        const double expect = family == Family::WoodsSaxon ? 1.0 : -1.0;
        if (*q != expect)
            throw std::invalid_argument("config: q inconsistent with family");
    }
    potential();  // throws on inconsistent physical parameters
}

}  // namespace iqr
