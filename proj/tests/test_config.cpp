#include <doctest.h>

#include "iqr/config.hpp"
#include "iqr/format.hpp"

using namespace iqr;

TEST_CASE("config parsing: defaults and overrides") {
    const RunConfig cfg = parse_config_text(
        "family = ws\n"
        "v0_mev = 44.0  # depth\n"
        "mass_number = 64\n"
        "n_max = 3\n"
        "d_list = 3, 4, 5\n"
        "format = csv\n"
        "seed = 7\n");
    CHECK(cfg.family == Family::WoodsSaxon);
    CHECK(cfg.v0_mev == 44.0);
    REQUIRE(cfg.mass_number.has_value());
    CHECK(*cfg.mass_number == 64);
    CHECK(cfg.n_max == 3);
    REQUIRE(cfg.d_list.size() == 3);
    CHECK(cfg.d_list[1] == 4);
    CHECK(cfg.format == OutputFormat::Csv);
    CHECK(cfg.seed == 7);
    // A = 64 -> R0 = 1.25 * 4 = 5
    CHECK(cfg.potential().R0 == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("unknown keys are hard errors") {
    CHECK_THROWS(parse_config_text("v0mev = 50\n"));
    CHECK_THROWS(parse_config_text("colour = red\n"));
}

TEST_CASE("malformed values are rejected") {
    CHECK_THROWS(parse_config_text("v0_mev = fifty\n"));
    CHECK_THROWS(parse_config_text("n_max\n"));
    CHECK_THROWS(parse_config_text("d_list =\n"));
}

TEST_CASE("q must match the family") {
    CHECK_NOTHROW(parse_config_text("family = ws\nq = 1\n"));
    CHECK_THROWS(parse_config_text("family = ws\nq = -1\n"));
    CHECK_THROWS(parse_config_text("family = hulthen\nq = 1\n"));
}

TEST_CASE("hulthen config maps a_fm to 1/alpha") {
    const RunConfig cfg = parse_config_text(
        "family = hulthen\nv0_mev = 1\na_fm = 4\nmass_term = 1\n");
    const PotentialSpec spec = cfg.potential();
    CHECK(spec.family == Family::Hulthen);
    CHECK(spec.alpha() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(spec.mass_term == 1.0);
}

TEST_CASE("fmt17 round-trips doubles") {
    for (double v : {1.0 / 3.0, -41.136953068212345, 2.2250738585072014e-308}) {
        CHECK(std::stod(fmt17(v)) == v);
    }
}
