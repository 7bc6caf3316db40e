#include "iqr/params.hpp"

namespace iqr {

PotentialSpec PotentialSpec::woods_saxon(double V0, double R0, double a,
                                         double mass_term) {
    PotentialSpec s;
    s.V0 = V0;
    s.R0 = R0;
    s.a = a;
    s.q = 1.0;
    s.Q = 1.0;
    s.mass_term = mass_term;
    s.family = Family::WoodsSaxon;
    s.validate();
    return s;
}

PotentialSpec PotentialSpec::hulthen(double V0, double alpha, double mass_term) {
    PotentialSpec s;
    s.V0 = V0;
    s.R0 = 1.0;
    s.a = 1.0 / alpha;
    s.q = -1.0;
    s.Q = alpha;
    s.mass_term = mass_term;
    s.family = Family::Hulthen;
    s.validate();
    return s;
}

void PotentialSpec::validate() const {
    if (!(V0 > 0.0)) throw std::invalid_argument("PotentialSpec: V0 must be > 0");
    if (!(R0 > 0.0)) throw std::invalid_argument("PotentialSpec: R0 must be > 0");
    if (!(a > 0.0)) throw std::invalid_argument("PotentialSpec: a must be > 0");
    if (!(mass_term > 0.0))
        throw std::invalid_argument("PotentialSpec: mass_term must be > 0");
    if (!std::isfinite(alpha()))
        throw std::invalid_argument("PotentialSpec: alpha = R0/a not finite");
    if (family == Family::WoodsSaxon) {
        if (q != 1.0 || Q != 1.0)
            throw std::invalid_argument("PotentialSpec: Woods-Saxon requires q=+1, Q=1");
    } else {
        if (q != -1.0)
            throw std::invalid_argument("PotentialSpec: Hulthen requires q=-1");
        if (Q != alpha())
            throw std::invalid_argument("PotentialSpec: Hulthen requires Q=alpha");
        if (R0 != 1.0)
            throw std::invalid_argument("PotentialSpec: Hulthen convention fixes R0=1");
    }
}

void QuantumNumbers::validate() const {
    if (n < 0) throw std::invalid_argument("QuantumNumbers: n must be >= 0");
    if (l < 0) throw std::invalid_argument("QuantumNumbers: l must be >= 0");
    if (D < 2) throw std::invalid_argument("QuantumNumbers: D must be >= 2");
}

double derive_radius(double r0, int mass_number) {
    if (!(r0 > 0.0)) throw std::invalid_argument("derive_radius: r0 must be > 0");
    if (mass_number < 1)
        throw std::invalid_argument("derive_radius: mass number must be >= 1");
    return r0 * std::cbrt(static_cast<double>(mass_number));
}

Centrifugal centrifugal_strength(const QuantumNumbers& qn, double mass_term) {
    qn.validate();
    const double L = static_cast<double>(qn.Lambda());
    const double l = static_cast<double>(qn.l);
    const double D = static_cast<double>(qn.D);
    Centrifugal c;
    c.lambda = (L * L - 1.0) * mass_term / 4.0;
    c.delta2 = mass_term * (l + (D - 1.0) / 2.0) * (l + (D - 3.0) / 2.0);
    return c;
}

}  // namespace iqr
