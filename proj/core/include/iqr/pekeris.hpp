#pragma once

#include <array>

#include "iqr/params.hpp"

namespace iqr {

// Coefficients of the three-term replacement of the centrifugal 1/r^2:
//   1/r^2  ~  (1/R0^2) * (d0 + d1*yr + d2*yr^2),   yr = Y/(1+qY).
// b = Q^2 delta^2 / R0^2 is the resulting quadratic-well strength (MeV).
struct PekerisCoefficients {
    double d0 = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double b = 0.0;
};

// d0 = 1 - 4/alpha + 12/alpha^2, d1 = 8/alpha - 48/alpha^2, d2 = 48/alpha^2
PekerisCoefficients ws_coefficients(double alpha);

// (1/12, 1, 1)
PekerisCoefficients hulthen_coefficients();

// Family dispatch; also fills b from delta2.
PekerisCoefficients coefficients_for(const PotentialSpec& spec, double delta2);

// Expansion quality degrades for small alpha (d0 can go negative).
bool low_alpha_warning(double alpha);

// The bracketed replacement of 1/r^2 evaluated at radius r.
double approx_inverse_r2(double r, const PotentialSpec& spec,
                         const PekerisCoefficients& c);

// Ratio variable yr(r) = Y/(1+qY); the potential is V(r) = -V0*yr(r).
double ratio_variable(double r, const PotentialSpec& spec);

// Order-0/1/2 Taylor matching residuals at r = R0:
//   |d0 + d1/2 + d2/4 - 1|, |alpha(d1+d2)/4 - 2|, |alpha^2 d2/16 - 3|
std::array<double, 3> taylor_match_residual(double alpha, const PekerisCoefficients& c);

}  // namespace iqr
