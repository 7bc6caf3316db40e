#include <doctest.h>

#include <cmath>

#include "iqr/spectrum.hpp"

using namespace iqr;

namespace {
// strong-coupling Hulthen well: alpha = 0.25, Z e^2 = 16, mass_term = 1
PotentialSpec hulthen_strong() { return PotentialSpec::hulthen(4.0, 0.25, 1.0); }
}  // namespace

TEST_CASE("turning points bracket the well minimum") {
    const PotentialSpec hu = hulthen_strong();
    const SpectrumContext ctx = SpectrumContext::make(hu, 1, 3);
    const GroundStateSolution g = ground_state(ctx);
    const TurningPoints tp = turning_points(g.E0, hu, ctx.c);
    CHECK(tp.yA < tp.yB);
    const double ystar = (hu.V0 - ctx.c.b * ctx.c.d1) / (2.0 * ctx.c.b * ctx.c.d2);
    CHECK(tp.yA < ystar);
    CHECK(tp.yB > ystar);
    CHECK(effective_potential_y(tp.yA, hu, ctx.c) == doctest::Approx(g.E0).epsilon(1e-10));
}

TEST_CASE("hulthen closed-form levels, l = 1 (frozen oracle values)") {
    const PotentialSpec hu = hulthen_strong();
    const double expect[] = {-14.0520833333333, -5.24131944444444, -2.23958333333333};
    for (int n = 0; n < 3; ++n) {
        const EnergyLevel lvl = solve_energy({n, 1, 3}, hu);
        REQUIRE(lvl.valid);
        CHECK(lvl.E == doctest::Approx(expect[n]).epsilon(1e-12));
    }
}

TEST_CASE("hulthen closed-form levels, l = 2 (frozen oracle values)") {
    const PotentialSpec hu = hulthen_strong();
    const double expect[] = {-5.22048611111111, -2.21875, -0.919375};
    for (int n = 0; n < 3; ++n) {
        const EnergyLevel lvl = solve_energy({n, 2, 3}, hu);
        REQUIRE(lvl.valid);
        CHECK(lvl.E == doctest::Approx(expect[n]).epsilon(1e-12));
    }
}

TEST_CASE("closed and numeric quantum correction agree for hulthen") {
    const SpectrumContext ctx = SpectrumContext::make(hulthen_strong(), 1, 3);
    const double closed = quantum_correction_closed(ctx);
    const QuadratureResult num = quantum_correction_numeric(ctx);
    CHECK(num.converged);
    CHECK(closed == doctest::Approx(-1.301290284569).epsilon(1e-9));
    CHECK(closed == doctest::Approx(num.value).epsilon(1e-9));
}

TEST_CASE("closed and numeric momentum integral agree for hulthen") {
    const SpectrumContext ctx = SpectrumContext::make(hulthen_strong(), 1, 3);
    const double frozen[][2] = {
        {-10.0, 2.834614715810}, {-5.0, 5.149525454963}, {-2.0, 8.547269507578}};
    for (const auto& f : frozen) {
        CHECK(momentum_integral_closed(f[0], ctx) ==
              doctest::Approx(f[1]).epsilon(1e-9));
        CHECK(momentum_integral_numeric(f[0], ctx).value ==
              doctest::Approx(f[1]).epsilon(1e-9));
    }
}

TEST_CASE("quantize_numeric reproduces the closed-form hulthen levels") {
    const PotentialSpec hu = hulthen_strong();
    for (int n = 0; n < 3; ++n) {
        const EnergyLevel ec = solve_energy({n, 1, 3}, hu);
        const EnergyLevel en = quantize_numeric({n, 1, 3}, hu);
        REQUIRE(ec.valid);
        REQUIRE(en.valid);
        CHECK(en.E == doctest::Approx(ec.E).epsilon(1e-9));
    }
}

TEST_CASE("printed hulthen formula matches exact rationals at the reference point") {
    // alpha = 0.25, Z e^2 = 4 -> V0 = 1 with mass_term = 1
    const PotentialSpec hu = PotentialSpec::hulthen(1.0, 0.25, 1.0);
    CHECK(energy_formula_hulthen({0, 0, 3}, hu) ==
          doctest::Approx(-3.515625).epsilon(1e-14));
    CHECK(energy_formula_hulthen({1, 0, 3}, hu) ==
          doctest::Approx(-0.5625).epsilon(1e-14));
    CHECK(energy_formula_hulthen({2, 0, 3}, hu) ==
          doctest::Approx(-49.0 / 576.0).epsilon(1e-14));
}

TEST_CASE("woods-saxon s-state has a degenerate closed-form condition") {
    const PotentialSpec ws = PotentialSpec::woods_saxon(50.0, 5.0, 0.6);
    const EnergyLevel lvl = solve_energy({0, 0, 3}, ws);
    CHECK(!lvl.valid);
    CHECK(lvl.status == LevelStatus::NoBoundState);
}

TEST_CASE("default woods-saxon matrix has no closed-form pocket") {
    // vertex of the Pekeris-replaced quadratic lies far beyond y_max
    const PotentialSpec ws = PotentialSpec::woods_saxon(50.0, 5.0, 0.6);
    for (int l = 1; l <= 2; ++l) {
        const EnergyLevel lvl = solve_energy({0, l, 3}, ws);
        CHECK(!lvl.valid);
    }
}

TEST_CASE("ground state throws when the linear phi0 degenerates") {
    const PotentialSpec ws = PotentialSpec::woods_saxon(50.0, 5.0, 0.6);
    const SpectrumContext ctx = SpectrumContext::make(ws, 0, 3);  // delta = 0
    CHECK_THROWS_AS(ground_state(ctx), std::domain_error);
}

TEST_CASE("momentum closed form throws outside its domain") {
    const SpectrumContext ctx = SpectrumContext::make(hulthen_strong(), 1, 3);
    CHECK_THROWS_AS(momentum_integral_closed(1.0, ctx), std::domain_error);
}
