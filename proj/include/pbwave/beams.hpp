#ifndef PBWAVE_BEAMS_HPP
#define PBWAVE_BEAMS_HPP

#include "pbwave/geometry.hpp"
#include "pbwave/quadrature.hpp"
#include "pbwave/signals.hpp"
#include "pbwave/types.hpp"

#include <functional>
#include <vector>

namespace pbwave {

// Evaluation point with the complex distance and oblate coordinates cached;
// grid sweeps re-use them across every closed form below.
struct BeamPoint {
    ComplexEvent z;
    OblateCoords oblate;
    Complex      rtilde{0.0, 0.0};
};

BeamPoint make_beam_point(const Vec3& x, double t, const Vec3& y, double u,
                          std::optional<Side> side = std::nullopt);
BeamPoint make_beam_point(const ComplexEvent& z, std::optional<Side> side = std::nullopt);

// G4(z) = -1/(4 pi^2 z^2), the complexified Euclidean fundamental solution.
Complex green_euclidean(const ComplexEvent& z, double tol = 1e-12);

// Partial fractions of G4: G+-(z) = 1/(8 pi^2 rtilde (tau -+ rtilde)).
Complex green_pm_from(Complex rtilde, Complex tau, KappaSign k);
Complex green_pm(const BeamPoint& bp, KappaSign k);

// W(z) = g(tau - kappa rtilde)/(4 pi rtilde). Cauchy signal reproduces
// green_pm; g = -1 reproduces the static G3 = -1/(4 pi rtilde).
Complex wavelet_from(Complex rtilde, Complex tau, const AnalyticSignal& g, KappaSign k);
Complex wavelet(const BeamPoint& bp, const AnalyticSignal& g, KappaSign k);

// Time-dependent radiation pattern R+- = i/(2 pi (tau -+ rtilde)).
Complex radiation_pattern(const BeamPoint& bp, KappaSign k);

struct PulseShape {
    double duration     = 0.0;  // |u -+ a cos(theta)|
    double eccentricity = 0.0;  // a/|u|
    bool   timelike     = false;
};

PulseShape pulse_duration(double theta, double u, double a, KappaSign k);

// Exact argmax over t of |G+-| at fixed space point: t* = +-p.
double peak_time(const Vec3& x, const Vec3& y, KappaSign k);

// Mother wavelet translated to the complex event (x, t) + i(y, u):
// W_z(x') = W(x' - x + iy).
Complex mother_translate(const Vec3& xprime, double tprime, const Vec3& x, double t,
                         const Vec3& y, double u, const AnalyticSignal& g, KappaSign k);

// Smooth compactly supported probe of one real variable.
struct Bump1D {
    std::function<double(double)> eval;
    double lo = 0.0, hi = 0.0;  // support interval
};

// exp(1 - 1/(1 - s^2)) on |s| < 1 with s = (t - center)/halfwidth; peak value 1.
Bump1D standard_bump(double center, double halfwidth);

// Smeared boundary-value probe of the Minkowskian limit: for each eps,
//   I_eps = integral dt phi(t) [G+-(x - i eps y) - G+-(x + i eps y)],
// converging to i phi(+-r)/(4 pi r) as eps -> 0.
std::vector<Complex> minkowski_limit_probe(const Vec3& x, const Vec3& y, double u,
                                           KappaSign k, const Bump1D& phi,
                                           const std::vector<double>& eps_list,
                                           const QuadratureSpec& spec = {});

}  // namespace pbwave

#endif
