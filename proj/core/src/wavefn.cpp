#include "iqr/wavefn.hpp"

#include <cmath>
#include <stdexcept>

namespace iqr {

namespace {

double plain_exponential(double r, const PotentialSpec& spec) {
    return spec.family == Family::WoodsSaxon ? std::exp(-(r - spec.R0) / spec.a)
                                             : std::exp(-r / spec.a);
}

bool nonpositive_integer(double x) {
    return x <= 0.0 && std::fabs(x - std::round(x)) < 1e-12;
}

}  // namespace

double decay_exponent(double E, const QuantumNumbers& qn, const PotentialSpec& spec) {
    const SpectrumContext ctx = SpectrumContext::make(spec, qn.l, qn.D);
    const double rad = (ctx.c.b * ctx.c.d0 - E) / spec.mass_term;
    if (!(rad > 0.0))
        throw std::domain_error("decay_exponent: not a bound state (radicand <= 0)");
    return spec.a * std::sqrt(rad);
}

std::pair<double, double> nu_zeta(const QuantumNumbers& qn, const PotentialSpec& spec) {
    const SpectrumContext ctx = SpectrumContext::make(spec, qn.l, qn.D);
    return {(1.0 - spec.q * ctx.zeta) / 2.0, ctx.zeta};
}

double gauss_2f1_terminating(int n, double B, double C, double y) {
    if (n < 0) throw std::invalid_argument("gauss_2f1_terminating: n must be >= 0");
    if (nonpositive_integer(C))
        throw std::domain_error("gauss_2f1_terminating: C is a non-positive integer");
    double sum = 1.0, comp = 0.0, term = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (-n + k) * (B + k) / ((C + k) * (k + 1.0)) * y;
        const double t = sum + term;
        if (std::fabs(sum) >= std::fabs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

RadialWavefunction make_wavefunction(const EnergyLevel& level,
                                     const PotentialSpec& spec) {
    RadialWavefunction wf;
    wf.qn = level.qn;
    wf.spec = spec;
    wf.E = level.E;
    wf.eps_tilde = decay_exponent(level.E, level.qn, spec);
    const auto nz = nu_zeta(level.qn, spec);
    wf.nu = nz.first;
    wf.zeta = nz.second;
    wf.hyp_B = level.qn.n + 2.0 * wf.eps_tilde + 2.0 * wf.nu;
    wf.hyp_C = 1.0 + 2.0 * wf.eps_tilde;
    const double base = spec.family == Family::WoodsSaxon ? spec.R0 : 0.0;
    wf.r_tail = base + spec.a * 30.0 * std::log(10.0) / (2.0 * wf.eps_tilde);
    wf.r_tail = std::max(wf.r_tail, base + 10.0 * spec.a);
    return wf;
}

double radial_u(double r, const RadialWavefunction& wf) {
    const double Y = plain_exponential(r, wf.spec);
    const double F = gauss_2f1_terminating(wf.qn.n, wf.hyp_B, wf.hyp_C, Y);
    return wf.norm * std::pow(Y, wf.eps_tilde) *
           std::pow(1.0 + wf.spec.q * Y, wf.nu) * F;
}

double total_radial_factor(double r, const RadialWavefunction& wf) {
    if (!(r > 0.0)) throw std::invalid_argument("total_radial_factor: r must be > 0");
    return std::pow(r, -(wf.qn.D - 1.0) / 2.0) * radial_u(r, wf);
}

double normalize(RadialWavefunction& wf) {
    if (!(wf.eps_tilde > 0.0))
        throw std::domain_error("normalize: non-normalizable (eps <= 0)");
    wf.norm = 1.0;
    auto f2 = [&wf](double r) {
        const double u = radial_u(r, wf);
        return u * u;
    };
    const GaussRule& g = gauss_legendre(24);
    double prev = 0.0;
    bool have_prev = false;
    for (int panels = 32; panels <= 4096; panels *= 2) {
        const double h = wf.r_tail / panels;
        double sum = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double lo = p * h;
            for (size_t i = 0; i < g.x.size(); ++i)
                sum += g.w[i] * h / 2.0 * f2(lo + (g.x[i] + 1.0) * h / 2.0);
        }
        if (have_prev && std::fabs(sum - prev) <= 1e-12 * (1.0 + sum)) {
            prev = sum;
            break;
        }
        prev = sum;
        have_prev = true;
    }
    if (!(prev > 0.0)) throw std::runtime_error("normalize: zero norm integral");
    wf.norm = 1.0 / std::sqrt(prev);
    return wf.norm;
}

int node_count(const RadialWavefunction& wf) {
    const int N = 4000;
    const double lo = wf.r_tail * 1e-6;
    const double h = (wf.r_tail - lo) / N;
    int count = 0;
    double r_prev = lo, u_prev = radial_u(lo, wf);
    for (int i = 1; i <= N; ++i) {
        const double r = lo + i * h;
        const double u = radial_u(r, wf);
        if (u_prev != 0.0 && u != 0.0 && std::signbit(u) != std::signbit(u_prev)) {
            // refine to reject double touches near zero
            double a = r_prev, b = r, ua = u_prev;
            while (b - a > 1e-10 * wf.spec.a) {
                const double mid = 0.5 * (a + b);
                const double um = radial_u(mid, wf);
                if (um == 0.0) break;
                if (std::signbit(um) == std::signbit(ua))
                    a = mid, ua = um;
                else
                    b = mid;
            }
            ++count;
        }
        r_prev = r;
        u_prev = u;
    }
    return count;
}

double ode_residual_max(const RadialWavefunction& wf, double r_lo, double r_hi,
                        int n_points) {
    if (n_points < 5) throw std::invalid_argument("ode_residual_max: grid too small");
    const double h = (r_hi - r_lo) / (n_points - 1);
    std::vector<double> u(n_points), veff(n_points);
    const SpectrumContext ctx = SpectrumContext::make(wf.spec, wf.qn.l, wf.qn.D);
    double umax = 0.0;
    for (int i = 0; i < n_points; ++i) {
        const double r = r_lo + i * h;
        u[i] = radial_u(r, wf);
        umax = std::max(umax, std::fabs(u[i]));
        const double yr = ratio_variable(r, wf.spec);
        veff[i] = -wf.spec.V0 * yr +
                  ctx.c.b * (ctx.c.d0 + ctx.c.d1 * yr + ctx.c.d2 * yr * yr);
    }
    double worst = 0.0;
    for (int i = 2; i < n_points - 2; ++i) {
        const double upp = (-u[i - 2] + 16.0 * u[i - 1] - 30.0 * u[i] +
                            16.0 * u[i + 1] - u[i + 2]) /
                           (12.0 * h * h);
        const double res = upp + (wf.E - veff[i]) * u[i] / wf.spec.mass_term;
        worst = std::max(worst, std::fabs(res));
    }
    return worst / (std::fabs(wf.E) * umax);
}

double jacobi_recurrence(int n, double A, double B, double x) {
    if (n == 0) return 1.0;
    double p0 = 1.0;
    double p1 = (A + 1.0) + (A + B + 2.0) * (x - 1.0) / 2.0;
    for (int k = 2; k <= n; ++k) {
        const double c = 2.0 * k + A + B;
        const double a1 = 2.0 * k * (k + A + B) * (c - 2.0);
        const double a2 = (c - 1.0) * (A * A - B * B);
        const double a3 = (c - 1.0) * c * (c - 2.0);
        const double a4 = 2.0 * (k + A - 1.0) * (k + B - 1.0) * c;
        const double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double jacobi_identity_gap(int n, double A, double B, double x) {
    const double lhs = jacobi_recurrence(n, A, B, 1.0 - 2.0 * x);
    // for x > 1/2 the alternating 2F1 sum cancels catastrophically; reflect
    // with P_n^{(A,B)}(-y) = (-1)^n P_n^{(B,A)}(y) to stay on x <= 1/2
    double a = A, xx = x, sign = 1.0;
    if (x > 0.5) {
        a = B;
        xx = 1.0 - x;
        sign = (n % 2 == 0) ? 1.0 : -1.0;
    }
    double pref = 1.0;  // (a+1)_n / n!
    for (int k = 0; k < n; ++k) pref *= (a + 1.0 + k) / (k + 1.0);
    const double rhs =
        sign * pref * gauss_2f1_terminating(n, n + A + B + 1.0, a + 1.0, xx);
    return std::fabs(lhs - rhs) / (1.0 + std::fabs(lhs));
}

}  // namespace iqr
