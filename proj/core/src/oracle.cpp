#include "iqr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace iqr {

RadialGrid RadialGrid::default_for(const PotentialSpec& spec, int n_points) {
    RadialGrid g;
    g.r_min = 0.0;
    g.r_max = spec.family == Family::WoodsSaxon ? spec.R0 + 30.0 * spec.a
                                                : 40.0 * spec.a;
    g.n_points = n_points;
    return g;
}

Tridiagonal build_hamiltonian(const PotentialSpec& spec, int l, int D,
                              const RadialGrid& grid, CentrifugalMode mode) {
    if (grid.n_points < 100)
        throw std::invalid_argument("build_hamiltonian: need at least 100 points");
    const Centrifugal cf = centrifugal_strength({0, l, D}, spec.mass_term);
    const PekerisCoefficients c = coefficients_for(spec, cf.delta2);
    const double h = grid.h();
    const double kin = spec.mass_term / (h * h);
    Tridiagonal T;
    T.diag.resize(grid.n_points);
    T.off.assign(grid.n_points - 1, -kin);
    for (int i = 0; i < grid.n_points; ++i) {
        const double r = grid.r(i);
        const double yr = ratio_variable(r, spec);
        double V = -spec.V0 * yr;
        if (mode == CentrifugalMode::Exact)
            V += cf.delta2 / (r * r);
        else
            V += c.b * (c.d0 + c.d1 * yr + c.d2 * yr * yr);
        T.diag[i] = 2.0 * kin + V;
    }
    return T;
}

int sturm_count(const Tridiagonal& T, double sigma) {
    const int n = static_cast<int>(T.diag.size());
    int count = 0;
    double d = 1.0;
    for (int i = 0; i < n; ++i) {
        const double off2 = i > 0 ? T.off[i - 1] * T.off[i - 1] : 0.0;
        d = T.diag[i] - sigma - off2 / d;
        // a zero pivot means sigma is an eigenvalue of a leading minor;
        // count it as negative or the sequence silently loses sign changes
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++count;
    }
    return count;
}

namespace {

// k-th (0-based) eigenvalue by bisection on the Sturm count.
double bisect_eigenvalue(const Tridiagonal& T, int k, double lo, double hi) {
    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(T, mid) > k)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 1e-13 * std::max(1.0, std::fabs(mid))) break;
    }
    return 0.5 * (lo + hi);
}

// Solve (T - sigma) x = b by LU with partial pivoting (tridiagonal).
void shifted_solve(const Tridiagonal& T, double sigma, std::vector<double>& x) {
    const int n = static_cast<int>(T.diag.size());
    std::vector<double> d(n), e(n, 0.0), f(n, 0.0);
    std::vector<double> b = x;
    for (int i = 0; i < n; ++i) d[i] = T.diag[i] - sigma;
    for (int i = 0; i < n - 1; ++i) e[i] = T.off[i];
    for (int i = 0; i < n - 1; ++i) {
        const double c = T.off[i];  // subdiagonal element (i+1, i)
        if (std::fabs(d[i]) >= std::fabs(c)) {
            if (d[i] == 0.0) d[i] = 1e-300;
            const double m = c / d[i];
            d[i + 1] -= m * e[i];
            b[i + 1] -= m * b[i];
        } else {
            // swap rows i and i+1, then eliminate
            const double m = d[i] / c;
            const double ei_old = e[i];
            const double d1_old = d[i + 1];
            const double e1_old = (i + 1 < n - 1) ? e[i + 1] : 0.0;
            d[i] = c;
            e[i] = d1_old;
            f[i] = e1_old;
            d[i + 1] = ei_old - m * d1_old;
            if (i + 1 < n - 1) e[i + 1] = -m * e1_old;
            std::swap(b[i], b[i + 1]);
            b[i + 1] -= m * b[i];
        }
    }
    x[n - 1] = b[n - 1] / d[n - 1];
    if (n >= 2) x[n - 2] = (b[n - 2] - e[n - 2] * x[n - 1]) / d[n - 2];
    for (int i = n - 3; i >= 0; --i)
        x[i] = (b[i] - e[i] * x[i + 1] - f[i] * x[i + 2]) / d[i];
}

}  // namespace

OracleSpectrum eigen_lowest(const Tridiagonal& T, int count, double h) {
    if (count < 1) throw std::invalid_argument("eigen_lowest: count must be >= 1");
    const int n = static_cast<int>(T.diag.size());
    // Gershgorin bounds
    double lo = T.diag[0], hi = T.diag[0];
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::fabs(T.off[i - 1]);
        if (i < n - 1) r += std::fabs(T.off[i]);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    OracleSpectrum spec;
    for (int k = 0; k < std::min(count, n); ++k) {
        const double ev = bisect_eigenvalue(T, k, lo, hi);
        spec.eigenvalues.push_back(ev);
        // inverse iteration
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) x[i] = 1.0 / std::sqrt(static_cast<double>(n) + i);
        const double shift = ev + 1e-11 * std::max(1.0, std::fabs(ev));
        bool ok = false;
        for (int attempt = 0; attempt < 3 && !ok; ++attempt) {
            const double s = shift * (1.0 + attempt * 1e-9);
            for (int it = 0; it < 4; ++it) {
                shifted_solve(T, s, x);
                // orthogonalize against previous vectors
                for (const auto& v : spec.eigenvectors) {
                    double dot = 0.0;
                    for (int i = 0; i < n; ++i) dot += x[i] * v[i];
                    dot *= h;
                    for (int i = 0; i < n; ++i) x[i] -= dot * v[i];
                }
                double nrm = 0.0;
                for (double xi : x) nrm += xi * xi;
                nrm = std::sqrt(nrm * h);
                if (!(nrm > 0.0) || !std::isfinite(nrm)) break;
                for (double& xi : x) xi /= nrm;
                ok = true;
            }
        }
        if (!ok) throw std::runtime_error("eigen_lowest: inverse iteration failed");
        if (x[0] < 0.0 || (x[0] == 0.0 && x[1] < 0.0))
            for (double& xi : x) xi = -xi;
        spec.eigenvectors.push_back(std::move(x));
    }
    return spec;
}

OracleLevels oracle_levels(const PotentialSpec& spec, int l, int D, int count,
                           CentrifugalMode mode, const RadialGrid& grid) {
    const Tridiagonal T1 = build_hamiltonian(spec, l, D, grid, mode);
    RadialGrid g2 = grid;
    g2.n_points = 2 * grid.n_points + 1;  // halves h exactly
    const Tridiagonal T2 = build_hamiltonian(spec, l, D, g2, mode);

    OracleSpectrum s1 = eigen_lowest(T1, count, grid.h());
    OracleSpectrum s2 = eigen_lowest(T2, count, g2.h());

    OracleLevels out;
    for (int k = 0; k < count; ++k) {
        const double e = (4.0 * s2.eigenvalues[k] - s1.eigenvalues[k]) / 3.0;
        if (e >= 0.0) {
            out.truncated = true;
            break;
        }
        out.energies.push_back(e);
        out.est_error.push_back(std::fabs(s2.eigenvalues[k] - s1.eigenvalues[k]) / 3.0);
    }
    return out;
}

double overlap(const std::vector<double>& u, const std::vector<double>& v, double h) {
    if (u.size() != v.size())
        throw std::invalid_argument("overlap: grid size mismatch");
    double dot = 0.0;
    for (size_t i = 0; i < u.size(); ++i) dot += u[i] * v[i];
    return std::fabs(dot * h);
}

}  // namespace iqr
