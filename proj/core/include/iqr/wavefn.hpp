#pragma once

#include <utility>
#include <vector>

#include "iqr/spectrum.hpp"

namespace iqr {

// Analytic reduced radial eigenfunction
//   u(r) = N * Y^eps * (1 + q Y)^nu * 2F1(-n, B; C; Y)
// with Y = exp(-(r-R0)/a) (Woods-Saxon) or exp(-r/a) (Hulthen),
// B = n + 2 eps + 2 nu, C = 1 + 2 eps, nu = (1 - q zeta)/2.
struct RadialWavefunction {
    QuantumNumbers qn;
    PotentialSpec spec;
    double E = 0.0;
    double eps_tilde = 0.0;
    double nu = 0.0;
    double zeta = 0.0;
    double hyp_B = 0.0;
    double hyp_C = 0.0;
    double norm = 1.0;     // 1 until normalize()
    double r_tail = 0.0;   // radius where Y^(2 eps) drops below 1e-30
};

// eps = a sqrt((b d0 - E)/mass_term); throws when the radicand is <= 0.
double decay_exponent(double E, const QuantumNumbers& qn, const PotentialSpec& spec);

// (nu, zeta) with nu = (1 - q zeta)/2 (the +/- branch per family).
std::pair<double, double> nu_zeta(const QuantumNumbers& qn, const PotentialSpec& spec);

// Terminating Gauss series: sum_{k=0}^{n} (-n)_k (B)_k / (C)_k y^k / k!,
// Pochhammer recurrence with compensated summation.
double gauss_2f1_terminating(int n, double B, double C, double y);

RadialWavefunction make_wavefunction(const EnergyLevel& level, const PotentialSpec& spec);

double radial_u(double r, const RadialWavefunction& wf);

// r^{-(D-1)/2} u(r); the angular factor is out of scope.
double total_radial_factor(double r, const RadialWavefunction& wf);

// Sets wf.norm so that int_0^inf u^2 dr = 1; returns the constant.
double normalize(RadialWavefunction& wf);

// Strict sign changes of u on (0, r_tail), with a bisection refinement pass
// that rejects double-touch false positives.
int node_count(const RadialWavefunction& wf);

// Max over the interior grid of |u'' + (E - V_eff)/mass_term u| scaled by
// |E| max|u|, with fourth-order central differences of step h.
double ode_residual_max(const RadialWavefunction& wf, double r_lo, double r_hi,
                        int n_points);

// P_n^{(A,B)}(x) by the three-term recurrence (independent of 2F1).
double jacobi_recurrence(int n, double A, double B, double x);

// Jacobi identity check: P_n^{(A,B)}(1-2x) vs the prefactored 2F1 form.
double jacobi_identity_gap(int n, double A, double B, double x);

}  // namespace iqr
