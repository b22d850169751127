#ifndef PBWAVE_SOURCES_HPP
#define PBWAVE_SOURCES_HPP

#include "pbwave/geometry.hpp"
#include "pbwave/quadrature.hpp"
#include "pbwave/signals.hpp"
#include "pbwave/testfunction.hpp"
#include "pbwave/types.hpp"

#include <functional>

namespace pbwave {

// Azimuthal mean fbar(p, q) of f over the circle at fixed (p, q).
Complex phi_mean(const TestFunction& f, double p, double q, const Vec3& y,
                 int n_nodes = 32);

// fbar_rtilde = (d/dp - i d/dq) fbar / 2, by the analytic chain rule through
// the coordinate map. The axis rho -> 0 is handled by a symmetric-limit
// branch using the Hessian.
Complex f_rtilde(const TestFunction& f, double p, double q, const Vec3& y,
                 int n_nodes = 32);

// Continuous extension of f_rtilde(iq)/q on the cut p = 0; the explicit O(q)
// factor is divided out algebraically, so q -> 0 needs no special casing.
Complex f_rtilde_over_q(const TestFunction& f, double q, const Vec3& y,
                        int n_nodes = 32);

// Regularized action on the ellipsoid E_eps:
//   <S_eps, f> = (alpha conj(alpha)/2ia) [g fbar / rtilde] at the poles
//              - (alpha conj(alpha)/a) integral dq g fbar_rtilde / rtilde,
// with alpha = eps + ia and g evaluated at tau - kappa rtilde.
Complex action_regularized(const TestFunction& f, const Vec3& y, Complex tau,
                           const AnalyticSignal& g, KappaSign k, double eps,
                           const QuadratureSpec& spec = {});

// Limit action of the source S = Box W:
//   <S, f> = -gbar(tau, a) f(0) + 2ia integral_0^a dq/q gbar(tau, q) fbar_rtilde(iq).
Complex action_limit(const TestFunction& f, const Vec3& y, Complex tau,
                     const AnalyticSignal& g, const QuadratureSpec& spec = {});

// Action of the static complex point source delta(zvec) (the g = -1 case):
// point mass at the origin plus a sided layer on the branch disk.
Complex action_static_delta(const TestFunction& f, const Vec3& y,
                            const QuadratureSpec& spec = {});

// Action of the spacetime point source delta(z) (the Cauchy-signal case),
// with z^2 = rho^2 - a^2 - tau^2 evaluated pointwise inside the disk integral.
Complex action_spacetime_delta(const TestFunction& f, const Vec3& y, Complex tau,
                               const QuadratureSpec& spec = {});

// Structured unsmeared form of S_eps: two real sourcepoints at the poles of
// E_eps plus a d/drtilde layer over the ellipsoid, all modulated by g.
struct LayerRepresentation {
    double  eps = 0.0;
    Complex alpha{0.0, 0.0};      // eps + ia; poles sit at rtilde = alpha, conj(alpha)
    Complex pole_plus{0.0, 0.0};  // weight multiplying f(+eps yhat)
    Complex pole_minus{0.0, 0.0}; // weight multiplying f(-eps yhat)
    // Coefficient of (d/drtilde f) against delta(p - eps), as a function of
    // (q, phi); independent of phi for these axisymmetric sources.
    std::function<Complex(double, double)> double_layer;
    Vec3 y = Vec3::Zero();
};

LayerRepresentation unsmeared_layers(const Vec3& y, Complex tau, const AnalyticSignal& g,
                                     KappaSign k, double eps);

// Pairing of a LayerRepresentation with a test function; reproduces
// action_regularized.
Complex contract(const LayerRepresentation& layers, const TestFunction& f,
                 const QuadratureSpec& spec = {});

}  // namespace pbwave

#endif
