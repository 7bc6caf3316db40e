#pragma once

#include <vector>

#include "iqr/params.hpp"
#include "iqr/pekeris.hpp"

namespace iqr {

struct RadialGrid {
    // Dirichlet wall at r_min and r_max.  r_min = 0 is safe: the potential is
    // only evaluated at interior points, and a wall at r_min > 0 shifts every
    // eigenvalue by O(r_min |u'(0)|^2), which Richardson cannot remove.
    double r_min = 0.0;
    double r_max = 23.0;
    int n_points = 4000;  // interior points

    double h() const { return (r_max - r_min) / (n_points + 1); }
    double r(int i) const { return r_min + (i + 1) * h(); }  // i = 0..n_points-1

    static RadialGrid default_for(const PotentialSpec& spec, int n_points = 4000);
};

enum class CentrifugalMode { Exact, Pekeris };

// Symmetric tridiagonal: diag[i] = 2 mt/h^2 + V_eff(r_i), off[i] = -mt/h^2.
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;  // size diag.size() - 1
};

Tridiagonal build_hamiltonian(const PotentialSpec& spec, int l, int D,
                              const RadialGrid& grid, CentrifugalMode mode);

struct OracleSpectrum {
    CentrifugalMode mode = CentrifugalMode::Exact;
    std::vector<double> eigenvalues;               // strictly increasing
    std::vector<std::vector<double>> eigenvectors; // h-weighted normalized
};

// Lowest `count` eigenpairs by Sturm-sequence bisection + inverse iteration.
OracleSpectrum eigen_lowest(const Tridiagonal& T, int count, double h);

// Number of eigenvalues of T strictly below sigma.
int sturm_count(const Tridiagonal& T, double sigma);

struct OracleLevels {
    std::vector<double> energies;   // Richardson-extrapolated, E < 0 only
    std::vector<double> est_error;  // |E_2N - E_N| / 3
    bool truncated = false;         // fewer bound states than requested
};

// Grids (N, 2N+1) halve h exactly; O(h^2) error eliminated.
OracleLevels oracle_levels(const PotentialSpec& spec, int l, int D, int count,
                           CentrifugalMode mode, const RadialGrid& grid);

// |h-weighted inner product| of two grid-sampled normalized vectors.
double overlap(const std::vector<double>& u, const std::vector<double>& v, double h);

}  // namespace iqr
