#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace iqr {

// Default hbar^2/(2 mu) in MeV fm^2 (mu c^2 = 939 MeV).
inline constexpr double kDefaultMassTerm = 20.7355;

enum class Family { WoodsSaxon, Hulthen };

inline const char* family_name(Family f) {
    return f == Family::WoodsSaxon ? "woods-saxon" : "hulthen";
}

// Physical parameters of the deformed Woods-Saxon / Hulthen potential
//   V(r) = -V0 * Y / (1 + q Y)
// with Y = exp(-(r-R0)/a) for q=+1 and Y = exp(-r/a) for q=-1.
struct PotentialSpec {
    double V0 = 50.0;       // well depth, MeV
    double R0 = 5.0;        // radius, fm (fixed to 1 for Hulthen)
    double a = 0.6;         // surface thickness, fm
    double q = 1.0;         // deformation: +1 WS, -1 Hulthen
    double Q = 1.0;         // scaling: 1 WS, alpha Hulthen
    double mass_term = kDefaultMassTerm;  // hbar^2/(2 mu), MeV fm^2
    Family family = Family::WoodsSaxon;

    double alpha() const { return R0 / a; }

    static PotentialSpec woods_saxon(double V0, double R0, double a,
                                     double mass_term = kDefaultMassTerm);
    // Hulthen convention: R0 = 1, a = 1/alpha, Q = alpha, q = -1.
    static PotentialSpec hulthen(double V0, double alpha,
                                 double mass_term = kDefaultMassTerm);

    void validate() const;
};

struct QuantumNumbers {
    int n = 0;  // radial
    int l = 0;  // orbital
    int D = 3;  // spatial dimension

    int Lambda() const { return 2 * l + D - 2; }
    void validate() const;
};

// R0 = r0 * A^(1/3)
double derive_radius(double r0, int mass_number);

struct Centrifugal {
    double lambda;  // (Lambda^2 - 1) * mass_term / 4
    double delta2;  // mass_term * (l + (D-1)/2)(l + (D-3)/2); equals lambda
};

Centrifugal centrifugal_strength(const QuantumNumbers& qn, double mass_term);

}  // namespace iqr
