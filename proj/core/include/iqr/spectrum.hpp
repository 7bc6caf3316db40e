#pragma once

#include <optional>
#include <string>

#include "iqr/numerics.hpp"
#include "iqr/params.hpp"
#include "iqr/pekeris.hpp"

namespace iqr {

struct TurningPoints {
    double yA = 0.0;
    double yB = 0.0;
};

// Linear log-derivative of the ground state in the ratio variable:
//   phi0(y) = phi0_slope * y + phi0_intercept,  units 1/fm.
struct GroundStateSolution {
    double m = 0.0;
    double zeta = 0.0;
    double phi0_slope = 0.0;
    double phi0_intercept = 0.0;
    double E0_tilde = 0.0;  // E0 - b d0
    double E0 = 0.0;
};

enum class Route { ClosedForm, NumericIQR, Oracle };

enum class LevelStatus {
    Valid,
    TrustRegion,   // solved, but yB exceeds the physical y-domain (q = +1)
    FormalOnly,    // closed-form root violates the branch sign conditions
    NoBoundState,
};

const char* route_name(Route r);
const char* status_name(LevelStatus s);

struct EnergyLevel {
    QuantumNumbers qn;
    double E = 0.0;  // reported even for FormalOnly roots
    Route route = Route::ClosedForm;
    LevelStatus status = LevelStatus::NoBoundState;
    bool valid = false;
    std::optional<TurningPoints> turning;
    std::optional<double> quantum_correction;
    std::string message;
};

// Everything derived from (spec, l, D) that the quantization formulas need.
struct SpectrumContext {
    PotentialSpec spec;
    PekerisCoefficients c;
    double delta2 = 0.0;
    double delta = 0.0;
    double zeta = 0.0;
    double m = 0.0;
    double kappa = 0.0;  // a/sqrt(mass_term) = R0/(alpha sqrt(mass_term))
    double X = 0.0;      // b(d0 + d1/q + d2/q^2) - V0/q
    double y_max = 0.0;  // upper end of the physical y-domain (inf for q=-1)

    static SpectrumContext make(const PotentialSpec& spec, int l, int D);
};

// V_eff(y) = b d2 y^2 + (b d1 - V0) y + b d0
double effective_potential_y(double y, const PotentialSpec& spec,
                             const PekerisCoefficients& c);

// Roots of V_eff(y) = E.  Throws on negative discriminant or b*d2 = 0.
TurningPoints turning_points(double E, const PotentialSpec& spec,
                             const PekerisCoefficients& c);

// k(y) = sqrt((E - V_eff(y))/mass_term) for y in [yA, yB].
double momentum_y(double y, double E, const PotentialSpec& spec,
                  const PekerisCoefficients& c);

// Ground-state Riccati solution.  Throws std::domain_error when m = 0
// (Woods-Saxon with delta = 0): the linear phi0 degenerates.
GroundStateSolution ground_state(const SpectrumContext& ctx);

// Qc = -pi(sqrt(d2/mass_term) delta Q/(|q| alpha) + m/q + 1)
double quantum_correction_closed(const SpectrumContext& ctx);

// Quadrature of int k0'(r) phi0(r)/phi0'(r) dr between the ground-state
// turning points.  Throws when the ground state has no classical pocket.
QuadratureResult quantum_correction_numeric(const SpectrumContext& ctx);

// pi kappa (q sqrt(b d2) - sqrt(b d0 - E) - q sqrt(X - E)).
// Throws std::domain_error (with the offending radicand in the message)
// when a radicand is negative.
double momentum_integral_closed(double E, const SpectrumContext& ctx);

// int_{rA}^{rB} k(r) dr via the y-substitution.
QuadratureResult momentum_integral_numeric(double E, const SpectrumContext& ctx);

// Closed-form solve of the quantization condition (route = ClosedForm).
EnergyLevel solve_energy(const QuantumNumbers& qn, const PotentialSpec& spec);

// Root-finding on the integral rule with the numeric quantum correction
// (route = NumericIQR): momentum_integral_numeric(E) = (n+1) pi + Qc_numeric.
EnergyLevel quantize_numeric(const QuantumNumbers& qn, const PotentialSpec& spec);

// Literal transcriptions of the printed spectrum formulas (cross-checks only,
// never authoritative).  Throw when the printed expression is singular.
double energy_formula_ws(const QuantumNumbers& qn, const PotentialSpec& spec);
double energy_formula_d3(const QuantumNumbers& qn, const PotentialSpec& spec);
double energy_formula_hulthen(const QuantumNumbers& qn, const PotentialSpec& spec);

}  // namespace iqr
