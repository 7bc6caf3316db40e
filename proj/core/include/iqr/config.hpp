#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iqr/params.hpp"

namespace iqr {

enum class OutputFormat { Csv, Json, Text };

OutputFormat parse_format(const std::string& s);
const char* format_name(OutputFormat f);

// Flat key = value run configuration ('#' comments, unknown keys are errors).
struct RunConfig {
    Family family = Family::WoodsSaxon;
    double v0_mev = 50.0;
    double r0_fm = 1.25;
    double a_fm = 0.6;
    std::optional<int> mass_number;    // triggers derive_radius
    std::optional<double> big_r0_fm;   // direct R0
    std::optional<double> q;           // must match family if given
    double mass_term = kDefaultMassTerm;

    int n_max = 2;
    int l_max = 1;
    std::vector<int> d_list{3};
    OutputFormat format = OutputFormat::Text;
    std::string out_path;  // empty = stdout
    unsigned long long seed = 1;
    int samples = 200;

    PotentialSpec potential() const;
    void validate() const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace iqr
