#include "iqr/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace iqr {

namespace {

GaussRule compute_rule(int n) {
    GaussRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    // Newton iteration on P_n, Chebyshev initial guess; roots come in +- pairs.
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.w[i] = w;
        rule.w[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

QuadratureResult integrate_sqrt_kernel(const std::function<double(double)>& f,
                                       double rA, double rB) {
    return integrate_sqrt_kernel_rho(
        [&f](double r, double) { return f(r); }, rA, rB);
}

QuadratureResult integrate_sqrt_kernel_rho(
    const std::function<double(double, double)>& f, double rA, double rB) {
    QuadratureResult res;
    if (rA == rB) {
        res.converged = true;
        return res;
    }
    if (rA > rB) throw std::invalid_argument("integrate_sqrt_kernel: rA > rB");
    const double L = rB - rA;
    double prev = 0.0;
    bool have_prev = false;
    for (int order = 16; order <= (1 << 14); order *= 2) {
        const GaussRule& g = gauss_legendre(order);
        double sum = 0.0;
        // theta in (0, pi/2), r = rA + L sin^2(theta), dr = 2 L sin cos dtheta
        for (int i = 0; i < order; ++i) {
            const double th = (g.x[i] + 1.0) * std::numbers::pi / 4.0;
            const double s = std::sin(th), c = std::cos(th);
            const double r = rA + L * s * s;
            const double rho = L * s * c;  // sqrt((r-rA)(rB-r)), cancellation-free
            sum += g.w[i] * (std::numbers::pi / 4.0) * f(r, rho) * 2.0 * L * s * c;
        }
        res.order = order;
        if (have_prev) {
            res.est_error = std::fabs(sum - prev);
            if (res.est_error <= 1e-12 * (1.0 + std::fabs(sum))) {
                res.value = sum;
                res.converged = true;
                return res;
            }
        }
        prev = sum;
        have_prev = true;
        res.value = sum;
    }
    return res;  // best estimate, converged = false
}

IntegralReport appendix_identity(const std::string& id, double rA, double rB,
                                 double a, double b) {
    if (!(rB > rA && rA > 0.0))
        throw std::invalid_argument("appendix_identity: need rB > rA > 0");
    IntegralReport rep;
    rep.identity_id = id;
    rep.rA = rA;
    rep.rB = rB;
    rep.a = a;
    rep.b = b;

    std::function<double(double, double)> f;
    if (id == "A1") {
        rep.closed_value = std::numbers::pi / 2.0 * (rA + rB);
        f = [](double r, double rho) { return r / rho; };
    } else if (id == "A2") {
        rep.closed_value = std::numbers::pi / std::sqrt(rA * rB);
        f = [](double r, double rho) { return 1.0 / (r * rho); };
    } else if (id == "A3") {
        rep.closed_value = std::numbers::pi;
        f = [](double r, double rho) { return 1.0 / rho; };
    } else if (id == "A4") {
        rep.closed_value =
            std::numbers::pi * ((rA + rB) / 2.0 - std::sqrt(rA * rB));
        f = [](double r, double rho) { return rho / r; };
    } else if (id == "A5") {
        const double fa = a + b * rA, fb = a + b * rB;
        if (!(fa > 0.0 && fb > 0.0))
            throw std::domain_error("appendix_identity: A5 needs a + b*r > 0 on [rA, rB]");
        rep.closed_value = std::numbers::pi / std::sqrt(fa * fb);
        f = [a, b](double r, double rho) { return 1.0 / ((a + b * r) * rho); };
    } else {
        throw std::invalid_argument("appendix_identity: unknown id " + id);
    }
    rep.numeric_value = integrate_sqrt_kernel_rho(f, rA, rB).value;
    rep.abs_diff = std::fabs(rep.numeric_value - rep.closed_value);
    return rep;
}

}  // namespace iqr
