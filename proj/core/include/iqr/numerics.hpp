#pragma once

#include <functional>
#include <string>
#include <vector>

namespace iqr {

// Gauss-Legendre nodes/weights on (-1, 1); cached per order.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussRule& gauss_legendre(int order);

struct QuadratureResult {
    double value = 0.0;
    double est_error = 0.0;
    bool converged = false;
    int order = 0;
};

// Integrate f over (rA, rB) where f may carry inverse-square-root or
// square-root endpoint factors: substitute r = rA + (rB-rA) sin^2(theta),
// which removes both kinds, then Gauss-Legendre with order doubling until
// successive estimates agree to 1e-12 relative (max order 2^14).
QuadratureResult integrate_sqrt_kernel(const std::function<double(double)>& f,
                                       double rA, double rB);

// Same, but hands the integrand rho = sqrt((r-rA)(rB-r)) computed from the
// substitution variable ((rB-rA) sin cos), which is free of the endpoint
// cancellation that r-space evaluation suffers at high orders.
QuadratureResult integrate_sqrt_kernel_rho(
    const std::function<double(double, double)>& f, double rA, double rB);

struct IntegralReport {
    std::string identity_id;  // "A1".."A5"
    double rA = 0.0, rB = 0.0;
    double a = 0.0, b = 0.0;  // A5 only
    double closed_value = 0.0;
    double numeric_value = 0.0;
    double abs_diff = 0.0;
};

// Closed vs quadrature for the five reference integrals:
//   A1: int r/rho dr            = (pi/2)(rA+rB)
//   A2: int 1/(r rho) dr        = pi/sqrt(rA rB)
//   A3: int 1/rho dr            = pi
//   A4: int rho/r dr            = pi[(rA+rB)/2 - sqrt(rA rB)]
//   A5: int 1/((a+br) rho) dr   = pi/sqrt((a+b rA)(a+b rB))
// with rho = sqrt((r-rA)(rB-r)), rB > rA > 0.
IntegralReport appendix_identity(const std::string& id, double rA, double rB,
                                 double a = 0.0, double b = 0.0);

}  // namespace iqr
