#include "iqr/spectrum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace iqr {

namespace {
constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}
}  // namespace

const char* route_name(Route r) {
    switch (r) {
        case Route::ClosedForm: return "closed-form";
        case Route::NumericIQR: return "numeric-iqr";
        case Route::Oracle: return "oracle";
    }
    return "?";
}

const char* status_name(LevelStatus s) {
    switch (s) {
        case LevelStatus::Valid: return "valid";
        case LevelStatus::TrustRegion: return "trust-region";
        case LevelStatus::FormalOnly: return "formal-only";
        case LevelStatus::NoBoundState: return "no-bound-state";
    }
    return "?";
}

SpectrumContext SpectrumContext::make(const PotentialSpec& spec, int l, int D) {
    spec.validate();
    QuantumNumbers qn{0, l, D};
    SpectrumContext ctx;
    ctx.spec = spec;
    ctx.delta2 = centrifugal_strength(qn, spec.mass_term).delta2;
    ctx.delta = std::sqrt(std::max(ctx.delta2, 0.0));
    ctx.c = coefficients_for(spec, ctx.delta2);
    const double al = spec.alpha();
    const double mt = spec.mass_term;
    ctx.zeta = std::sqrt(1.0 + 4.0 * spec.Q * spec.Q * ctx.delta2 * ctx.c.d2 /
                                   (mt * al * al * spec.q * spec.q));
    // m = -(q/2)(1 - zeta) for Woods-Saxon, -(q/2)(1 + zeta) for Hulthen
    ctx.m = spec.family == Family::WoodsSaxon ? (ctx.zeta - 1.0) / 2.0
                                              : (1.0 + ctx.zeta) / 2.0;
    ctx.kappa = spec.a / std::sqrt(mt);
    const double q = spec.q;
    ctx.X = ctx.c.b * (ctx.c.d0 + ctx.c.d1 / q + ctx.c.d2 / (q * q)) - spec.V0 / q;
    ctx.y_max = q > 0.0 ? std::exp(al) / (1.0 + std::exp(al))
                        : std::numeric_limits<double>::infinity();
    return ctx;
}

double effective_potential_y(double y, const PotentialSpec& spec,
                             const PekerisCoefficients& c) {
    return c.b * c.d2 * y * y + (c.b * c.d1 - spec.V0) * y + c.b * c.d0;
}

TurningPoints turning_points(double E, const PotentialSpec& spec,
                             const PekerisCoefficients& c) {
    const double A = c.b * c.d2;
    if (A == 0.0)
        throw std::domain_error("turning_points: b*d2 = 0, quadratic degenerates");
    const double B = c.b * c.d1 - spec.V0;
    const double C = c.b * c.d0 - E;
    const double disc = B * B - 4.0 * A * C;
    if (disc < 0.0)
        throw std::domain_error("turning_points: no classical region (discriminant " +
                                fmt(disc) + ")");
    const double s = std::sqrt(disc);
    const double qv = -(B + std::copysign(s, B)) / 2.0;
    double y1 = qv / A;
    double y2 = (qv != 0.0) ? C / qv : -B / (2.0 * A);
    if (y1 > y2) std::swap(y1, y2);
    return {y1, y2};
}

double momentum_y(double y, double E, const PotentialSpec& spec,
                  const PekerisCoefficients& c) {
    const TurningPoints tp = turning_points(E, spec, c);
    if (y < tp.yA || y > tp.yB)
        throw std::domain_error("momentum_y: y outside the classical region");
    const double arg = (E - effective_potential_y(y, spec, c)) / spec.mass_term;
    return std::sqrt(std::max(arg, 0.0));
}

GroundStateSolution ground_state(const SpectrumContext& ctx) {
    if (ctx.m == 0.0)
        throw std::domain_error(
            "ground_state: m = 0 (Woods-Saxon with delta = 0), phi0 branch singular");
    const PotentialSpec& sp = ctx.spec;
    const double al = sp.alpha();
    GroundStateSolution g;
    g.m = ctx.m;
    g.zeta = ctx.zeta;
    g.phi0_slope = al * ctx.m / sp.R0;
    g.phi0_intercept = al / (2.0 * sp.R0) -
                       (sp.V0 - ctx.c.b * ctx.c.d1) * sp.R0 /
                           (2.0 * ctx.m * al * sp.mass_term);
    g.E0_tilde = -sp.mass_term * g.phi0_intercept * g.phi0_intercept;
    g.E0 = ctx.c.b * ctx.c.d0 + g.E0_tilde;
    return g;
}

double quantum_correction_closed(const SpectrumContext& ctx) {
    const PotentialSpec& sp = ctx.spec;
    return -kPi * (std::sqrt(ctx.c.d2 / sp.mass_term) * ctx.delta * sp.Q /
                       (std::fabs(sp.q) * sp.alpha()) +
                   ctx.m / sp.q + 1.0);
}

namespace {

// Require a classical pocket inside the physical y-domain.
TurningPoints pocket_or_throw(double E, const SpectrumContext& ctx) {
    const TurningPoints tp = turning_points(E, ctx.spec, ctx.c);
    if (!(tp.yA > 0.0 && tp.yB < ctx.y_max))
        throw std::domain_error("no classical pocket inside the physical y-domain");
    return tp;
}

}  // namespace

QuadratureResult quantum_correction_numeric(const SpectrumContext& ctx) {
    const GroundStateSolution g = ground_state(ctx);
    const TurningPoints tp = pocket_or_throw(g.E0, ctx);
    const PotentialSpec& sp = ctx.spec;
    const double sb = std::sqrt(ctx.c.b * ctx.c.d2 / sp.mass_term);
    const double c1 = g.phi0_slope, c2 = g.phi0_intercept;
    const double q = sp.q;
    const double scale = sp.R0 / sp.alpha();
    // k0'(r) phi0/phi0' dr  ->  dk/dy * (phi0/c1) * dr/dy restricted to y:
    //   dk/dy = sb (yA + yB - 2y)/(2 rho),  dr = (R0/alpha) dy/(y(1-qy))
    auto f = [&](double y, double rho) {
        const double dk = sb * (tp.yA + tp.yB - 2.0 * y) / (2.0 * rho);
        return dk * (c1 * y + c2) / c1 * scale / (y * (1.0 - q * y));
    };
    QuadratureResult res = integrate_sqrt_kernel_rho(f, tp.yA, tp.yB);
    if (!res.converged)
        throw std::runtime_error("quantum_correction_numeric: quadrature did not "
                                 "converge; best estimate " + fmt(res.value));
    return res;
}

double momentum_integral_closed(double E, const SpectrumContext& ctx) {
    const PotentialSpec& sp = ctx.spec;
    const double q = sp.q;
    const double r1 = ctx.c.b * ctx.c.d2;
    const double r2 = ctx.c.b * ctx.c.d0 - E;
    const double r3 = ctx.X - E;
    for (double rad : {r1, r2, r3}) {
        if (rad < 0.0)
            throw std::domain_error("momentum_integral_closed: negative radicand " +
                                    fmt(rad));
    }
    return kPi * ctx.kappa *
           (q * std::sqrt(r1) - std::sqrt(r2) - q * std::sqrt(r3));
}

QuadratureResult momentum_integral_numeric(double E, const SpectrumContext& ctx) {
    const TurningPoints tp = pocket_or_throw(E, ctx);
    const PotentialSpec& sp = ctx.spec;
    const double sb = std::sqrt(ctx.c.b * ctx.c.d2 / sp.mass_term);
    const double q = sp.q;
    const double scale = sp.R0 / sp.alpha();
    auto f = [&](double y, double rho) {
        const double k = sb * rho;
        return k * scale / (y * (1.0 - q * y));
    };
    QuadratureResult res = integrate_sqrt_kernel_rho(f, tp.yA, tp.yB);
    if (!res.converged)
        throw std::runtime_error("momentum_integral_numeric: quadrature did not "
                                 "converge; best estimate " + fmt(res.value));
    return res;
}

EnergyLevel solve_energy(const QuantumNumbers& qn, const PotentialSpec& spec) {
    qn.validate();
    const SpectrumContext ctx = SpectrumContext::make(spec, qn.l, qn.D);
    const PotentialSpec& sp = ctx.spec;
    const double q = sp.q;
    const double mt = sp.mass_term;

    EnergyLevel lvl;
    lvl.qn = qn;
    lvl.route = Route::ClosedForm;

    const double G = std::sqrt(ctx.c.d2 / mt) * ctx.delta * sp.Q / (q * sp.alpha());
    const double C = (qn.n - G - ctx.m / q) / ctx.kappa - std::sqrt(ctx.c.b * ctx.c.d2);
    if (C == 0.0) {
        lvl.status = LevelStatus::NoBoundState;
        lvl.message = "degenerate quantization condition (C = 0)";
        return lvl;
    }
    const double S = (ctx.c.b * ctx.c.d0 - ctx.X) / C;
    const double P = -(C + S) / 2.0;
    const double Qp = q * (S - C) / 2.0;
    lvl.E = ctx.c.b * ctx.c.d0 - (C + S) * (C + S) / 4.0;
    lvl.quantum_correction = quantum_correction_closed(ctx);

    const double sign_tol = 1e-12 * (1.0 + std::fabs(C) + std::fabs(S));
    if (P < -sign_tol || Qp < -sign_tol) {
        lvl.status = LevelStatus::FormalOnly;
        lvl.message = "branch sign conditions violated (P = " + fmt(P) +
                      ", Q' = " + fmt(Qp) + ")";
        return lvl;
    }
    const double lower = sp.family == Family::WoodsSaxon
                             ? -sp.V0
                             : -std::numeric_limits<double>::infinity();
    if (!(lvl.E > lower && lvl.E < 0.0)) {
        lvl.status = LevelStatus::NoBoundState;
        lvl.message = "root outside the bound-state window";
        return lvl;
    }
    try {
        lvl.turning = turning_points(lvl.E, sp, ctx.c);
    } catch (const std::domain_error&) {
        // valid level with no pocket cannot happen for these quadratics;
        // keep the level, just without turning-point diagnostics
    }
    if (lvl.turning && q > 0.0 && lvl.turning->yB > ctx.y_max) {
        lvl.status = LevelStatus::TrustRegion;
        lvl.message = "outer turning point beyond the physical y-domain";
        return lvl;
    }
    // back-substitution into the quantization condition
    const double resid = momentum_integral_closed(lvl.E, ctx) -
                         ((qn.n + 1) * kPi + *lvl.quantum_correction);
    if (std::fabs(resid) > 1e-10 * (1.0 + qn.n)) {
        lvl.status = LevelStatus::FormalOnly;
        lvl.message = "quantization residual " + fmt(resid);
        return lvl;
    }
    lvl.status = LevelStatus::Valid;
    lvl.valid = true;
    return lvl;
}

EnergyLevel quantize_numeric(const QuantumNumbers& qn, const PotentialSpec& spec) {
    qn.validate();
    const SpectrumContext ctx = SpectrumContext::make(spec, qn.l, qn.D);
    const PotentialSpec& sp = ctx.spec;

    EnergyLevel lvl;
    lvl.qn = qn;
    lvl.route = Route::NumericIQR;

    double qc = 0.0;
    try {
        qc = quantum_correction_numeric(ctx).value;
    } catch (const std::exception& e) {
        lvl.status = LevelStatus::NoBoundState;
        lvl.message = std::string("quantum correction unavailable: ") + e.what();
        return lvl;
    }
    lvl.quantum_correction = qc;

    const double A = ctx.c.b * ctx.c.d2;
    const double ystar = (sp.V0 - ctx.c.b * ctx.c.d1) / (2.0 * A);
    if (!(ystar > 0.0 && ystar < ctx.y_max)) {
        lvl.status = LevelStatus::NoBoundState;
        lvl.message = "effective potential has no minimum in the physical domain";
        return lvl;
    }
    const double vmin = effective_potential_y(ystar, sp, ctx.c);
    double ehi = std::min(ctx.c.b * ctx.c.d0, 0.0);
    if (sp.q > 0.0)
        ehi = std::min(ehi, effective_potential_y(ctx.y_max, sp, ctx.c));
    const double pad = 1e-12 * (std::fabs(vmin) + 1.0);
    double lo = vmin + pad, hi = ehi - pad;
    if (!(hi > lo)) {
        lvl.status = LevelStatus::NoBoundState;
        lvl.message = "empty energy bracket";
        return lvl;
    }

    const double target = (qn.n + 1) * kPi + qc;
    auto f = [&](double E) { return momentum_integral_numeric(E, ctx).value - target; };
    double flo = f(lo), fhi = f(hi);
    if (flo > 0.0 || fhi < 0.0) {
        lvl.status = LevelStatus::NoBoundState;
        lvl.message = flo > 0.0 ? "quantization target below the pocket minimum"
                                : "no root in bracket (n exceeds the bound levels)";
        return lvl;
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-13 * (1.0 + std::fabs(lo))) break;
    }
    lvl.E = 0.5 * (lo + hi);
    lvl.turning = turning_points(lvl.E, sp, ctx.c);
    lvl.status = LevelStatus::Valid;
    lvl.valid = true;
    return lvl;
}

double energy_formula_ws(const QuantumNumbers& qn, const PotentialSpec& spec) {
    if (spec.family != Family::WoodsSaxon)
        throw std::invalid_argument("energy_formula_ws: Woods-Saxon family required");
    const SpectrumContext ctx = SpectrumContext::make(spec, qn.l, qn.D);
    const double mt = spec.mass_term, al = spec.alpha(), a = spec.a;
    const double W = std::sqrt(1.0 + 4.0 * ctx.delta2 * ctx.c.d2 / (mt * al * al));
    const double t = 2.0 * qn.n + 1.0 - W;
    if (t == 0.0)
        throw std::domain_error("energy_formula_ws: printed formula singular (2n+1 = W)");
    const double num = ctx.delta2 * (ctx.c.d1 + ctx.c.d2) / (mt * spec.R0 * spec.R0) -
                       spec.V0 / mt;
    const double br = t / (4.0 * a * a) - num / t;
    return ctx.delta2 * ctx.c.d0 / (spec.R0 * spec.R0) - mt * a * a * br * br;
}

double energy_formula_d3(const QuantumNumbers& qn, const PotentialSpec& spec) {
    if (spec.family != Family::WoodsSaxon || qn.D != 3)
        throw std::invalid_argument("energy_formula_d3: Woods-Saxon with D = 3 required");
    const SpectrumContext ctx = SpectrumContext::make(spec, qn.l, qn.D);
    const double mt = spec.mass_term, al = spec.alpha(), a = spec.a;
    const double ll = static_cast<double>(qn.l) * (qn.l + 1.0);
    const double W = std::sqrt(1.0 + 4.0 * ll * ctx.c.d2 / (al * al));
    const double t = 2.0 * qn.n + 1.0 - W;
    if (t == 0.0)
        throw std::domain_error("energy_formula_d3: printed formula singular (2n+1 = W)");
    const double num = ll * (ctx.c.d1 + ctx.c.d2) / (spec.R0 * spec.R0) - spec.V0 / mt;
    const double br = t / (4.0 * a * a) - num / t;
    return mt * ll * ctx.c.d0 / (spec.R0 * spec.R0) - mt * a * a * br * br;
}

double energy_formula_hulthen(const QuantumNumbers& qn, const PotentialSpec& spec) {
    if (spec.family != Family::Hulthen)
        throw std::invalid_argument("energy_formula_hulthen: Hulthen family required");
    const double mt = spec.mass_term, al = spec.alpha();
    const double Ze2 = spec.V0 / al;       // V0 = alpha Z e^2
    const double chi = Ze2 / (2.0 * mt);   // mu Z e^2 / hbar^2
    const double nl = qn.n + qn.l + (qn.D - 1.0) / 2.0;
    const double dl = (qn.l + (qn.D - 1.0) / 2.0) * (qn.l + (qn.D - 3.0) / 2.0);
    const double term = chi / (nl * al) - nl / 2.0;
    return mt * al * al * (dl / 12.0 - term * term);
}

}  // namespace iqr
