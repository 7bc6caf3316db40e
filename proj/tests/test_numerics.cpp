#include <doctest.h>

#include <cmath>

#include "iqr/numerics.hpp"

using namespace iqr;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const GaussRule& g = gauss_legendre(16);
    REQUIRE(g.x.size() == 16);
    double s0 = 0.0, s2 = 0.0, s7 = 0.0;
    for (size_t i = 0; i < g.x.size(); ++i) {
        s0 += g.w[i];
        s2 += g.w[i] * g.x[i] * g.x[i];
        s7 += g.w[i] * std::pow(g.x[i], 7);
    }
    CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(std::fabs(s7) < 1e-14);  // odd moment
}

TEST_CASE("sqrt-kernel quadrature handles inverse-sqrt endpoints") {
    // int_0^1 dr / sqrt(r(1-r)) = pi
    const auto f = [](double r) { return 1.0 / std::sqrt(r * (1.0 - r)); };
    const QuadratureResult res = integrate_sqrt_kernel(f, 0.0, 1.0);
    CHECK(res.converged);
    CHECK(res.value == doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("sqrt-kernel quadrature handles sqrt endpoints") {
    // int_1^3 sqrt((r-1)(3-r)) dr = pi (rB-rA)^2 / 8 = pi/2
    const auto f = [](double r) { return std::sqrt((r - 1.0) * (3.0 - r)); };
    const QuadratureResult res = integrate_sqrt_kernel(f, 1.0, 3.0);
    CHECK(res.converged);
    CHECK(res.value == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
}

TEST_CASE("appendix identities at fixed endpoints") {
    const double rA = 1.3, rB = 4.7;
    for (const char* id : {"A1", "A2", "A3", "A4"}) {
        const IntegralReport r = appendix_identity(id, rA, rB);
        CHECK(r.abs_diff < 1e-10);
    }
    const IntegralReport r5 = appendix_identity("A5", rA, rB, 0.7, 2.1);
    CHECK(r5.abs_diff < 1e-10);
    CHECK(r5.closed_value ==
          doctest::Approx(M_PI / std::sqrt((0.7 + 2.1 * rA) * (0.7 + 2.1 * rB)))
              .epsilon(1e-13));
}

TEST_CASE("appendix closed forms match the stated expressions") {
    const double rA = 0.5, rB = 2.0;
    CHECK(appendix_identity("A1", rA, rB).closed_value ==
          doctest::Approx(M_PI / 2.0 * (rA + rB)).epsilon(1e-14));
    CHECK(appendix_identity("A2", rA, rB).closed_value ==
          doctest::Approx(M_PI / std::sqrt(rA * rB)).epsilon(1e-14));
    CHECK(appendix_identity("A3", rA, rB).closed_value ==
          doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(appendix_identity("A4", rA, rB).closed_value ==
          doctest::Approx(M_PI * ((rA + rB) / 2.0 - std::sqrt(rA * rB))).epsilon(1e-14));
}

TEST_CASE("appendix identity rejects bad endpoints") {
    CHECK_THROWS(appendix_identity("A1", 2.0, 1.0));
    CHECK_THROWS(appendix_identity("A9", 1.0, 2.0));
}
