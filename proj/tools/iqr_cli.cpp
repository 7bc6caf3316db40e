// iqr command line driver.
// Subcommands: spectrum | wavefunction | verify | degeneracy | appendix-check
// Exit codes: 0 ok, 1 verification failure, 2 trust-region warnings,
//             3 no such state, 64 usage.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iqr/config.hpp"
#include "iqr/degeneracy.hpp"
#include "iqr/format.hpp"
#include "iqr/numerics.hpp"
#include "iqr/oracle.hpp"
#include "iqr/spectrum.hpp"
#include "iqr/verify.hpp"
#include "iqr/wavefn.hpp"

namespace {

using namespace iqr;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitTrust = 2;
constexpr int kExitNoState = 3;
constexpr int kExitUsage = 64;

struct CommonArgs {
    std::string config_path;
    std::string format = "text";
    std::string out_path;
    std::optional<unsigned long long> seed;
    // overrides
    std::optional<std::string> family;
    std::optional<double> v0_mev, r0_fm, a_fm, big_r0_fm, mass_term;
    std::optional<int> mass_number, n_max, l_max, samples;
    std::vector<int> d_list;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--config", a.config_path, "key = value config file");
    cmd->add_option("--format", a.format, "csv | json | text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    cmd->add_option("--out", a.out_path, "output path (default stdout)");
    cmd->add_option("--seed", a.seed, "RNG seed for randomized suites");
    cmd->add_option("--family", a.family, "woods-saxon | hulthen");
    cmd->add_option("--v0-mev", a.v0_mev, "well depth V0 (MeV)");
    cmd->add_option("--r0-fm", a.r0_fm, "radius parameter r0 (fm)");
    cmd->add_option("--a-fm", a.a_fm, "surface thickness a (fm)");
    cmd->add_option("--mass-number", a.mass_number, "A; sets R0 = r0 A^(1/3)");
    cmd->add_option("--big-r0-fm", a.big_r0_fm, "explicit R0 (fm)");
    cmd->add_option("--mass-term", a.mass_term, "hbar^2/(2 mu) (MeV fm^2)");
    cmd->add_option("--n-max", a.n_max, "max radial quantum number");
    cmd->add_option("--l-max", a.l_max, "max orbital quantum number");
    cmd->add_option("--d", a.d_list, "dimension list");
    cmd->add_option("--samples", a.samples, "sample count for wavefunction output");
}

RunConfig build_config(const CommonArgs& a) {
    RunConfig cfg;
    if (!a.config_path.empty()) cfg = parse_config_file(a.config_path);
    if (a.family) {
        if (*a.family == "woods-saxon" || *a.family == "ws")
            cfg.family = Family::WoodsSaxon;
        else if (*a.family == "hulthen")
            cfg.family = Family::Hulthen;
        else
            throw std::invalid_argument("unknown family: " + *a.family);
    }
    if (a.v0_mev) cfg.v0_mev = *a.v0_mev;
    if (a.r0_fm) cfg.r0_fm = *a.r0_fm;
    if (a.a_fm) cfg.a_fm = *a.a_fm;
    if (a.big_r0_fm) cfg.big_r0_fm = *a.big_r0_fm;
    if (a.mass_term) cfg.mass_term = *a.mass_term;
    if (a.mass_number) cfg.mass_number = *a.mass_number;
    if (a.n_max) cfg.n_max = *a.n_max;
    if (a.l_max) cfg.l_max = *a.l_max;
    if (!a.d_list.empty()) cfg.d_list = a.d_list;
    if (a.samples) cfg.samples = *a.samples;
    if (a.seed) cfg.seed = *a.seed;
    cfg.format = parse_format(a.format);
    cfg.out_path = a.out_path;
    cfg.validate();
    return cfg;
}

// Sink: file when --out given, stdout otherwise.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file " + path);
            os = &file;
        }
    }
    std::ostream& out() { return *os; }
};

std::string json_escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '"' || c == '\\') { o += '\\'; o += c; }
        else if (c == '\n') o += "\\n";
        else o += c;
    }
    return o;
}

std::string jnum(double v) {
    if (!std::isfinite(v)) return "null";
    return fmt17(v);
}

struct SpectrumRow {
    QuantumNumbers qn;
    EnergyLevel closed;
    EnergyLevel numeric;
    double oracle_pekeris = std::nan("");
    double oracle_exact = std::nan("");
};

std::vector<SpectrumRow> compute_spectrum(const RunConfig& cfg) {
    const PotentialSpec spec = cfg.potential();
    std::vector<int> dims = cfg.d_list;
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

    std::vector<SpectrumRow> rows;
    for (int D : dims)
        for (int l = 0; l <= cfg.l_max; ++l) {
            const RadialGrid grid = RadialGrid::default_for(spec, 2500);
            OracleLevels op = oracle_levels(spec, l, D, cfg.n_max + 1,
                                            CentrifugalMode::Pekeris, grid);
            OracleLevels oe = oracle_levels(spec, l, D, cfg.n_max + 1,
                                            CentrifugalMode::Exact, grid);
            for (int n = 0; n <= cfg.n_max; ++n) {
                SpectrumRow row;
                row.qn = {n, l, D};
                row.closed = solve_energy(row.qn, spec);
                row.numeric = quantize_numeric(row.qn, spec);
                if (n < static_cast<int>(op.energies.size()))
                    row.oracle_pekeris = op.energies[n];
                if (n < static_cast<int>(oe.energies.size()))
                    row.oracle_exact = oe.energies[n];
                rows.push_back(row);
            }
        }
    return rows;
}

std::string csv_cell(double v) { return std::isfinite(v) ? fmt17(v) : ""; }

int cmd_spectrum(const RunConfig& cfg) {
    const auto rows = compute_spectrum(cfg);
    Sink sink(cfg.out_path);
    std::ostream& os = sink.out();

    if (cfg.format == OutputFormat::Csv) {
        os << "n,l,D,E_closed,E_numeric_iqr,E_oracle_pekeris,E_oracle_exact,"
              "valid,yA,yB\n";
        for (const auto& r : rows) {
            double yA = std::nan(""), yB = std::nan("");
            if (r.closed.turning) { yA = r.closed.turning->yA; yB = r.closed.turning->yB; }
            os << r.qn.n << ',' << r.qn.l << ',' << r.qn.D << ','
               << csv_cell(r.closed.valid || r.closed.status == LevelStatus::TrustRegion ||
                                   r.closed.status == LevelStatus::FormalOnly
                               ? r.closed.E : std::nan(""))
               << ',' << csv_cell(r.numeric.valid ? r.numeric.E : std::nan(""))
               << ',' << csv_cell(r.oracle_pekeris)
               << ',' << csv_cell(r.oracle_exact)
               << ',' << status_name(r.closed.status)
               << ',' << csv_cell(yA) << ',' << csv_cell(yB) << '\n';
        }
    } else if (cfg.format == OutputFormat::Json) {
        const PotentialSpec spec = cfg.potential();
        const PekerisCoefficients pc = coefficients_for(spec, 0.0);
        os << "{\n  \"family\": \"" << family_name(spec.family) << "\",\n"
           << "  \"pekeris\": {\"d0\": " << fmt17(pc.d0)
           << ", \"d1\": " << fmt17(pc.d1) << ", \"d2\": " << fmt17(pc.d2)
           << "},\n  \"levels\": [\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            os << "    {\"n\": " << r.qn.n << ", \"l\": " << r.qn.l
               << ", \"D\": " << r.qn.D
               << ", \"E_closed\": " << jnum(r.closed.E)
               << ", \"E_numeric_iqr\": " << jnum(r.numeric.valid ? r.numeric.E : std::nan(""))
               << ", \"E_oracle_pekeris\": " << jnum(r.oracle_pekeris)
               << ", \"E_oracle_exact\": " << jnum(r.oracle_exact)
               << ", \"valid\": \"" << status_name(r.closed.status) << "\""
               << ", \"yA\": " << jnum(r.closed.turning ? r.closed.turning->yA : std::nan(""))
               << ", \"yB\": " << jnum(r.closed.turning ? r.closed.turning->yB : std::nan(""))
               << ", \"message\": \"" << json_escape(r.closed.message) << "\"}"
               << (i + 1 < rows.size() ? ",\n" : "\n");
        }
        os << "  ]\n}\n";
    } else {
        os << "n  l  D  E_closed        E_numeric       E_orc_pekeris   "
              "E_orc_exact     status\n";
        for (const auto& r : rows) {
            char line[256];
            std::snprintf(line, sizeof(line), "%-2d %-2d %-2d %-15s %-15s %-15s %-15s %s\n",
                          r.qn.n, r.qn.l, r.qn.D,
                          std::isfinite(r.closed.E) ? fmt_short(r.closed.E).c_str() : "-",
                          r.numeric.valid ? fmt_short(r.numeric.E).c_str() : "-",
                          std::isfinite(r.oracle_pekeris) ? fmt_short(r.oracle_pekeris).c_str() : "-",
                          std::isfinite(r.oracle_exact) ? fmt_short(r.oracle_exact).c_str() : "-",
                          status_name(r.closed.status));
            os << line;
        }
    }
    for (const auto& r : rows)
        if (r.closed.status == LevelStatus::TrustRegion) return kExitTrust;
    return kExitOk;
}

int cmd_wavefunction(const RunConfig& cfg, int n, int l, int D) {
    if (cfg.samples <= 0) {
        std::cerr << "wavefunction: samples must be > 0\n";
        return kExitUsage;
    }
    const PotentialSpec spec = cfg.potential();
    const EnergyLevel lvl = solve_energy({n, l, D}, spec);
    const bool usable = lvl.valid || lvl.status == LevelStatus::TrustRegion;
    if (!usable) {
        std::cerr << "wavefunction: no bound state (n=" << n << ", l=" << l
                  << ", D=" << D << "): " << status_name(lvl.status);
        if (!lvl.message.empty()) std::cerr << " (" << lvl.message << ")";
        std::cerr << "\n";
        return kExitNoState;
    }
    RadialWavefunction wf = make_wavefunction(lvl, spec);
    normalize(wf);

    Sink sink(cfg.out_path);
    std::ostream& os = sink.out();
    os << "# n=" << n << " l=" << l << " D=" << D << "\n"
       << "# E=" << fmt17(lvl.E) << "\n"
       << "# eps_tilde=" << fmt17(wf.eps_tilde) << "\n"
       << "# nu=" << fmt17(wf.nu) << "\n"
       << "r,u,total_radial_factor\n";
    const double r_hi = wf.r_tail;
    for (int i = 1; i <= cfg.samples; ++i) {
        const double r = r_hi * i / cfg.samples;
        os << fmt17(r) << ',' << fmt17(radial_u(r, wf)) << ','
           << fmt17(total_radial_factor(r, wf)) << '\n';
    }
    return lvl.status == LevelStatus::TrustRegion ? kExitTrust : kExitOk;
}

int parse_only(const std::string& s) {
    static const std::map<std::string, int> names = {
        {"pekeris", 1},          {"quantum-correction", 2},
        {"momentum", 3},         {"quantization", 4},
        {"oracle-pekeris", 5},   {"oracle-exact", 6},
        {"hulthen", 7},          {"degeneracy", 8},
        {"wavefunctions", 9},    {"appendix", 10},
        {"determinism", 11},
    };
    const auto it = names.find(s);
    if (it != names.end()) return it->second;
    const int id = std::stoi(s);
    if (id < 1 || id > 11) throw std::invalid_argument("no such criterion: " + s);
    return id;
}

int cmd_verify(const RunConfig& cfg, const std::string& only) {
    VerifyOptions opt;
    opt.seed = cfg.seed;
    if (!only.empty()) opt.only = parse_only(only);
    const auto results = run_criteria(opt);

    Sink sink(cfg.out_path);
    std::ostream& os = sink.out();
    if (cfg.format == OutputFormat::Json) {
        os << "{\n  \"seed\": " << cfg.seed << ",\n  \"criteria\": [\n";
        for (size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            os << "    {\"id\": " << r.id << ", \"name\": \"" << r.name
               << "\", \"pass\": " << (r.pass ? "true" : "false")
               << ", \"detail\": \"" << json_escape(r.detail) << "\", \"findings\": [";
            for (size_t j = 0; j < r.findings.size(); ++j)
                os << "\"" << json_escape(r.findings[j]) << "\""
                   << (j + 1 < r.findings.size() ? ", " : "");
            os << "]}" << (i + 1 < results.size() ? ",\n" : "\n");
        }
        os << "  ]\n}\n";
    } else {
        os << render_report(results);
    }
    return all_passed(results) ? kExitOk : kExitFail;
}

int cmd_degeneracy(const RunConfig& cfg, int n, int l, int D) {
    const PotentialSpec spec = cfg.potential();
    const DegeneracyFamily fam = family_of({n, l, D}, spec.mass_term);
    const FamilyReport rep = verify_family(fam, spec, 2500);

    Sink sink(cfg.out_path);
    std::ostream& os = sink.out();
    if (cfg.format == OutputFormat::Csv) {
        os << "n,l,D,Lambda,E,status\n";
        for (const auto& m : rep.members)
            os << m.qn.n << ',' << m.qn.l << ',' << m.qn.D << ',' << fam.Lambda
               << ',' << csv_cell(m.level.E) << ',' << status_name(m.level.status)
               << '\n';
    } else if (cfg.format == OutputFormat::Json) {
        os << "{\n  \"Lambda\": " << fam.Lambda << ",\n  \"delta2\": "
           << fmt17(fam.delta2) << ",\n  \"energies_identical\": "
           << (rep.energies_identical ? "true" : "false") << ",\n  \"members\": [\n";
        for (size_t i = 0; i < rep.members.size(); ++i) {
            const auto& m = rep.members[i];
            os << "    {\"n\": " << m.qn.n << ", \"l\": " << m.qn.l
               << ", \"D\": " << m.qn.D << ", \"E\": " << jnum(m.level.E)
               << ", \"status\": \"" << status_name(m.level.status) << "\"}"
               << (i + 1 < rep.members.size() ? ",\n" : "\n");
        }
        os << "  ]\n}\n";
    } else {
        os << "Lambda = " << fam.Lambda << "  (delta^2 = " << fmt_short(fam.delta2)
           << "), shared E across members:\n";
        for (const auto& m : rep.members)
            os << "  (n=" << m.qn.n << ", l=" << m.qn.l << ", D=" << m.qn.D
               << ")  E = " << fmt_short(m.level.E) << "  ["
               << status_name(m.level.status) << "]\n";
        os << "bit-identical energies: " << (rep.energies_identical ? "yes" : "no")
           << "\n";
    }
    return rep.energies_identical && rep.statuses_identical ? kExitOk : kExitFail;
}

int cmd_appendix_check(const RunConfig& cfg) {
    static const char* ids[] = {"A1", "A2", "A3", "A4", "A5"};
    std::mt19937_64 eng(cfg.seed);
    const auto u01 = [&eng] { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };

    std::vector<IntegralReport> reports;
    for (const char* id : ids)
        for (int t = 0; t < 3; ++t) {
            double rA = 0.1 + 9.9 * u01();
            double rB = 0.1 + 9.9 * u01();
            if (rA > rB) std::swap(rA, rB);
            const double a = 0.1 + 4.9 * u01();
            const double b = 0.1 + 4.9 * u01();
            reports.push_back(appendix_identity(id, rA, rB, a, b));
        }

    Sink sink(cfg.out_path);
    std::ostream& os = sink.out();
    bool ok = true;
    if (cfg.format == OutputFormat::Csv) {
        os << "identity,rA,rB,a,b,closed,numeric,abs_diff\n";
        for (const auto& r : reports)
            os << r.identity_id << ',' << fmt17(r.rA) << ',' << fmt17(r.rB) << ','
               << fmt17(r.a) << ',' << fmt17(r.b) << ',' << fmt17(r.closed_value)
               << ',' << fmt17(r.numeric_value) << ',' << fmt17(r.abs_diff) << '\n';
    } else if (cfg.format == OutputFormat::Json) {
        os << "[\n";
        for (size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            os << "  {\"identity\": \"" << r.identity_id << "\", \"rA\": "
               << fmt17(r.rA) << ", \"rB\": " << fmt17(r.rB) << ", \"closed\": "
               << fmt17(r.closed_value) << ", \"numeric\": " << fmt17(r.numeric_value)
               << ", \"abs_diff\": " << fmt17(r.abs_diff) << "}"
               << (i + 1 < reports.size() ? ",\n" : "\n");
        }
        os << "]\n";
    } else {
        os << "id  rA           rB           closed          numeric         abs_diff\n";
        for (const auto& r : reports) {
            char line[256];
            std::snprintf(line, sizeof(line), "%-3s %-12s %-12s %-15s %-15s %s\n",
                          r.identity_id.c_str(), fmt_short(r.rA).c_str(),
                          fmt_short(r.rB).c_str(), fmt_short(r.closed_value).c_str(),
                          fmt_short(r.numeric_value).c_str(), fmt_short(r.abs_diff).c_str());
            os << line;
        }
    }
    for (const auto& r : reports)
        if (!(r.abs_diff < 1e-8)) ok = false;
    return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Improved-quantization-rule spectra for deformed "
                 "Woods-Saxon / Hulthen wells in D dimensions"};
    app.require_subcommand(1);

    CommonArgs a_spec, a_wf, a_ver, a_deg, a_app;
    int wf_n = 0, wf_l = 0, wf_D = 3;
    int deg_n = 0, deg_l = 4, deg_D = 2;
    std::string only;

    CLI::App* spectrum = app.add_subcommand("spectrum", "level table over (n, l, D)");
    add_common(spectrum, a_spec);

    CLI::App* wavefn = app.add_subcommand("wavefunction", "sampled radial eigenfunction");
    add_common(wavefn, a_wf);
    wavefn->add_option("--n", wf_n, "radial quantum number");
    wavefn->add_option("--l", wf_l, "orbital quantum number");
    wavefn->add_option("--D", wf_D, "spatial dimension");

    CLI::App* verify = app.add_subcommand("verify", "acceptance criteria suite");
    add_common(verify, a_ver);
    verify->add_option("--only", only, "criterion id (1-11) or name");

    CLI::App* degeneracy = app.add_subcommand("degeneracy", "interdimensional family table");
    add_common(degeneracy, a_deg);
    degeneracy->add_option("--n", deg_n, "radial quantum number");
    degeneracy->add_option("--l", deg_l, "anchor orbital quantum number");
    degeneracy->add_option("--D", deg_D, "anchor dimension");

    CLI::App* appendix = app.add_subcommand("appendix-check", "reference integral identities");
    add_common(appendix, a_app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(build_config(a_spec));
        if (wavefn->parsed())
            return cmd_wavefunction(build_config(a_wf), wf_n, wf_l, wf_D);
        if (verify->parsed()) return cmd_verify(build_config(a_ver), only);
        if (degeneracy->parsed())
            return cmd_degeneracy(build_config(a_deg), deg_n, deg_l, deg_D);
        if (appendix->parsed()) return cmd_appendix_check(build_config(a_app));
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
