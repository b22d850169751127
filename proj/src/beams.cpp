#include "pbwave/beams.hpp"

#include <cmath>

namespace pbwave {

namespace {

bool finite(Complex v)
{
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace

BeamPoint make_beam_point(const Vec3& x, double t, const Vec3& y, double u,
                          std::optional<Side> side)
{
    BeamPoint bp;
    bp.z      = ComplexEvent::from_parts(x, t, y, u);
    bp.oblate = to_oblate(x, y, side);
    bp.rtilde = bp.oblate.rtilde();
    return bp;
}

BeamPoint make_beam_point(const ComplexEvent& z, std::optional<Side> side)
{
    BeamPoint bp;
    bp.z      = z;
    bp.oblate = to_oblate(z.space_re(), z.space_im(), side);
    bp.rtilde = bp.oblate.rtilde();
    return bp;
}

Complex green_euclidean(const ComplexEvent& z, double tol)
{
    const Complex zv2 = z.zvec_squared();
    const Complex t2  = z.tau * z.tau;
    const Complex z2  = zv2 - t2;
    if (std::abs(z2) < tol * (std::abs(zv2) + std::abs(t2)))
        throw err::LightConeSingular("green_euclidean: z^2 = 0");
    return -1.0 / (4.0 * pi * pi * z2);
}

Complex green_pm_from(Complex rtilde, Complex tau, KappaSign k)
{
    if (std::abs(rtilde) == 0.0)
        throw err::OnBranchSphere("green_pm: rtilde = 0");
    const Complex denom = tau - kappa(k) * rtilde;
    if (std::abs(denom) == 0.0)
        throw err::SingularDenominator("green_pm: tau = +-rtilde");
    const Complex v = 1.0 / (8.0 * pi * pi * rtilde * denom);
    if (!finite(v))
        throw err::SingularDenominator("green_pm: overflow at near-singular point");
    return v;
}

Complex green_pm(const BeamPoint& bp, KappaSign k)
{
    return green_pm_from(bp.rtilde, bp.z.tau, k);
}

Complex wavelet_from(Complex rtilde, Complex tau, const AnalyticSignal& g, KappaSign k)
{
    if (std::abs(rtilde) == 0.0)
        throw err::OnBranchSphere("wavelet: rtilde = 0");
    return g.eval(tau - kappa(k) * rtilde) / (4.0 * pi * rtilde);
}

Complex wavelet(const BeamPoint& bp, const AnalyticSignal& g, KappaSign k)
{
    return wavelet_from(bp.rtilde, bp.z.tau, g, k);
}

Complex radiation_pattern(const BeamPoint& bp, KappaSign k)
{
    const Complex denom = bp.z.tau - kappa(k) * bp.rtilde;
    if (std::abs(denom) == 0.0)
        throw err::SingularDenominator("radiation_pattern: tau = +-rtilde");
    return imag_unit / (2.0 * pi * denom);
}

PulseShape pulse_duration(double theta, double u, double a, KappaSign k)
{
    PulseShape s;
    s.duration     = std::abs(u - kappa(k) * a * std::cos(theta));
    s.eccentricity = (u != 0.0) ? a / std::abs(u) : std::numeric_limits<double>::infinity();
    s.timelike     = std::abs(u) > a;
    return s;
}

double peak_time(const Vec3& x, const Vec3& y, KappaSign k)
{
    return kappa(k) * to_oblate(x, y).p;
}

Complex mother_translate(const Vec3& xprime, double tprime, const Vec3& x, double t,
                         const Vec3& y, double u, const AnalyticSignal& g, KappaSign k)
{
    const BeamPoint bp = make_beam_point(xprime - x, tprime - t, y, u);
    return wavelet(bp, g, k);
}

Bump1D standard_bump(double center, double halfwidth)
{
    Bump1D b;
    b.lo   = center - halfwidth;
    b.hi   = center + halfwidth;
    b.eval = [center, halfwidth](double t) {
        const double s  = (t - center) / halfwidth;
        const double s2 = s * s;
        if (s2 >= 1.0)
            return 0.0;
        return std::exp(1.0 - 1.0 / (1.0 - s2));
    };
    return b;
}

std::vector<Complex> minkowski_limit_probe(const Vec3& x, const Vec3& y, double u,
                                           KappaSign k, const Bump1D& phi,
                                           const std::vector<double>& eps_list,
                                           const QuadratureSpec& spec)
{
    std::vector<Complex> out;
    out.reserve(eps_list.size());
    for (double eps : eps_list) {
        auto integrand = [&](double t) {
            const BeamPoint below = make_beam_point(x, t, -eps * y, -eps * u);
            const BeamPoint above = make_beam_point(x, t, eps * y, eps * u);
            return phi.eval(t) * (green_pm(below, k) - green_pm(above, k));
        };
        out.push_back(integrate_gk(integrand, phi.lo, phi.hi, spec));
    }
    return out;
}

}  // namespace pbwave
