#include <doctest.h>

#include "iqr/params.hpp"

using namespace iqr;

TEST_CASE("derive_radius cube root scaling") {
    CHECK(derive_radius(1.25, 64) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(derive_radius(1.0, 1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("potential spec factories fix family conventions") {
    const PotentialSpec ws = PotentialSpec::woods_saxon(50.0, 5.0, 0.6);
    CHECK(ws.q == 1.0);
    CHECK(ws.Q == 1.0);
    CHECK(ws.family == Family::WoodsSaxon);
    CHECK(ws.alpha() == doctest::Approx(50.0 / 6.0));

    const PotentialSpec hu = PotentialSpec::hulthen(4.0, 0.25, 1.0);
    CHECK(hu.q == -1.0);
    CHECK(hu.Q == 0.25);
    CHECK(hu.R0 == 1.0);
    CHECK(hu.a == doctest::Approx(4.0));  // a = 1/alpha
    CHECK(hu.alpha() == doctest::Approx(0.25));
}

TEST_CASE("spec validation rejects nonphysical input") {
    CHECK_THROWS(PotentialSpec::woods_saxon(-1.0, 5.0, 0.6));
    CHECK_THROWS(PotentialSpec::woods_saxon(50.0, 5.0, 0.0));
    CHECK_THROWS(PotentialSpec::hulthen(1.0, -0.5));
}

TEST_CASE("Lambda and centrifugal strength") {
    QuantumNumbers qn{0, 2, 5};
    CHECK(qn.Lambda() == 7);
    // delta^2 = mt (l + (D-1)/2)(l + (D-3)/2) = mt * 4 * 3
    const Centrifugal c = centrifugal_strength(qn, 2.0);
    CHECK(c.delta2 == doctest::Approx(24.0).epsilon(1e-15));
    // equals (Lambda^2 - 1) mt / 4
    CHECK(c.lambda == doctest::Approx((49.0 - 1.0) * 2.0 / 4.0).epsilon(1e-15));
    CHECK(c.lambda == doctest::Approx(c.delta2).epsilon(1e-15));
}

TEST_CASE("s-state in 3D has no centrifugal term") {
    const Centrifugal c = centrifugal_strength({0, 0, 3}, kDefaultMassTerm);
    CHECK(c.delta2 == doctest::Approx(0.0));
}
