#ifndef PBWAVE_ORACLES_HPP
#define PBWAVE_ORACLES_HPP

#include "pbwave/quadrature.hpp"
#include "pbwave/signals.hpp"
#include "pbwave/testfunction.hpp"
#include "pbwave/types.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace pbwave {

using SpacetimeField = std::function<Complex(const Vec3&, double)>;

// Brute-force action of the static source: integral of G3(x + iy) Lap f dx,
// in oblate coordinates with both disk faces reached through the sign of q.
Complex action_bruteforce_static(const TestFunction& f, const Vec3& y,
                                 const QuadratureSpec& spec = {});

// Brute-force action of S = Box W at complex time tau = t + iu:
// integral of [W Lap f - (d_t^2 W) f] dx, with d_t^2 W taken from the
// signal's analytic second derivative.
Complex action_bruteforce_spacetime(const TestFunction& f, const Vec3& y, Complex tau,
                                    const AnalyticSignal& g, KappaSign k,
                                    const QuadratureSpec& spec = {});

// Centered 7-point Laplacian minus 3-point second time difference, O(h^2).
Complex fd_dalembertian(const SpacetimeField& field, const Vec3& x, double t, double h);

struct ConvergenceReport {
    std::vector<double> steps;
    std::vector<double> residuals;
    double fitted_order = 0.0;
    double target_order = 0.0;
    bool   monotone     = false;
    bool   pass         = false;
};

// Least-squares slope of log(residual) vs log(h); pass needs the slope
// within 0.1 of the target and monotone decrease.
ConvergenceReport convergence_order(const std::vector<std::pair<double, double>>& h_residual,
                                    double target_order);

// Polynomial extrapolation of I(eps) to eps = 0 (Neville at the origin).
Complex richardson_extrapolate(const std::vector<double>& eps,
                               const std::vector<Complex>& values);

}  // namespace pbwave

#endif
