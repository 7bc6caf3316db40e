#include "iqr/pekeris.hpp"

#include <cmath>

namespace iqr {

PekerisCoefficients ws_coefficients(double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("ws_coefficients: alpha must be > 0");
    PekerisCoefficients c;
    c.d0 = 1.0 - 4.0 / alpha + 12.0 / (alpha * alpha);
    c.d1 = 8.0 / alpha - 48.0 / (alpha * alpha);
    c.d2 = 48.0 / (alpha * alpha);
    return c;
}

PekerisCoefficients hulthen_coefficients() {
    PekerisCoefficients c;
    c.d0 = 1.0 / 12.0;
    c.d1 = 1.0;
    c.d2 = 1.0;
    return c;
}

PekerisCoefficients coefficients_for(const PotentialSpec& spec, double delta2) {
    PekerisCoefficients c = spec.family == Family::WoodsSaxon
                                ? ws_coefficients(spec.alpha())
                                : hulthen_coefficients();
    c.b = spec.Q * spec.Q * delta2 / (spec.R0 * spec.R0);
    return c;
}

bool low_alpha_warning(double alpha) { return alpha <= 2.0; }

double ratio_variable(double r, const PotentialSpec& spec) {
    const double Y = spec.family == Family::WoodsSaxon
                         ? std::exp(-(r - spec.R0) / spec.a)
                         : std::exp(-r / spec.a);
    const double den = 1.0 + spec.q * Y;
    if (den == 0.0)
        throw std::domain_error("ratio_variable: pole at 1 + qY = 0");
    return Y / den;
}

double approx_inverse_r2(double r, const PotentialSpec& spec,
                         const PekerisCoefficients& c) {
    if (!(r > 0.0)) throw std::invalid_argument("approx_inverse_r2: r must be > 0");
    const double y = ratio_variable(r, spec);
    return (c.d0 + c.d1 * y + c.d2 * y * y) / (spec.R0 * spec.R0);
}

std::array<double, 3> taylor_match_residual(double alpha,
                                            const PekerisCoefficients& c) {
    return {std::fabs(c.d0 + c.d1 / 2.0 + c.d2 / 4.0 - 1.0),
            std::fabs(alpha * (c.d1 + c.d2) / 4.0 - 2.0),
            std::fabs(alpha * alpha * c.d2 / 16.0 - 3.0)};
}

}  // namespace iqr
