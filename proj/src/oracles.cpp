#include "pbwave/oracles.hpp"

#include "pbwave/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace pbwave {

namespace {

// Positions on the oblate grid, frame built once per quadrature.
struct OblateEval {
    DiskFrame fr;
    double a;

    Vec3 point(double p, double q, double phi) const
    {
        const double rho =
            std::sqrt(std::max(0.0, (a * a + p * p) * (a * a - q * q))) / a;
        return rho * (std::cos(phi) * fr.e1 + std::sin(phi) * fr.e2)
             + (p * q / a) * fr.yhat;
    }
};

}  // namespace

Complex action_bruteforce_static(const TestFunction& f, const Vec3& y,
                                 const QuadratureSpec& spec)
{
    const OblateEval grid{disk_frame(y), y.norm()};

    QuadratureSpec budget = spec;
    budget.abs_tol += f.tail_bound;  // truncation tail of non-compact probes

    auto integrand = [&](double p, double q, double phi) {
        const Complex rt(p, q);
        // G3(x + iy) = -1/(4 pi rtilde); the volume element supplies the
        // factor that keeps this bounded near the branch sphere.
        return -f.laplacian(grid.point(p, q, phi)) / (4.0 * pi * rt);
    };
    return quad_oblate(integrand, f.support_radius, y, budget);
}

Complex action_bruteforce_spacetime(const TestFunction& f, const Vec3& y, Complex tau,
                                    const AnalyticSignal& g, KappaSign k,
                                    const QuadratureSpec& spec)
{
    const OblateEval grid{disk_frame(y), y.norm()};
    const double kap = kappa(k);

    QuadratureSpec budget = spec;
    budget.abs_tol += f.tail_bound;

    auto integrand = [&](double p, double q, double phi) {
        const Complex rt(p, q);
        const Complex arg = tau - kap * rt;
        const Vec3 x      = grid.point(p, q, phi);
        return (g.eval(arg) * f.laplacian(x) - g.deriv2(arg) * f.eval(x))
             / (4.0 * pi * rt);
    };
    return quad_oblate(integrand, f.support_radius, y, budget);
}

Complex fd_dalembertian(const SpacetimeField& field, const Vec3& x, double t, double h)
{
    const Complex center = field(x, t);
    Complex lap{0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
        const Vec3 e = Vec3::Unit(i);
        lap += field(x + h * e, t) + field(x - h * e, t) - 2.0 * center;
    }
    const Complex dtt = field(x, t + h) + field(x, t - h) - 2.0 * center;
    return (lap - dtt) / (h * h);
}

ConvergenceReport convergence_order(const std::vector<std::pair<double, double>>& h_residual,
                                    double target_order)
{
    if (h_residual.size() < 3)
        throw err::Error("convergence_order: need at least 3 (h, residual) pairs");

    ConvergenceReport rep;
    rep.target_order = target_order;

    std::vector<std::pair<double, double>> pts = h_residual;
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    rep.monotone = true;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].second >= pts[i - 1].second)
            rep.monotone = false;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(pts.size());
    for (const auto& [h, res] : pts) {
        rep.steps.push_back(h);
        rep.residuals.push_back(res);
        const double lx = std::log(h);
        const double ly = std::log(std::max(res, 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    rep.fitted_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    rep.pass         = rep.monotone && rep.fitted_order >= target_order - 0.1;
    return rep;
}

Complex richardson_extrapolate(const std::vector<double>& eps,
                               const std::vector<Complex>& values)
{
    if (eps.size() != values.size() || eps.size() < 2)
        throw err::Error("richardson_extrapolate: need matching lists, size >= 2");
    Complex out{0.0, 0.0};
    for (std::size_t i = 0; i < eps.size(); ++i) {
        double w = 1.0;
        for (std::size_t j = 0; j < eps.size(); ++j)
            if (j != i)
                w *= eps[j] / (eps[j] - eps[i]);
        out += w * values[i];
    }
    return out;
}

}  // namespace pbwave
