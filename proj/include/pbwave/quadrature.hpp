#ifndef PBWAVE_QUADRATURE_HPP
#define PBWAVE_QUADRATURE_HPP

#include "pbwave/errors.hpp"
#include "pbwave/types.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace pbwave {

struct QuadratureSpec {
    double rel_tol   = 1e-9;
    double abs_tol   = 1e-12;
    int    max_depth = 12;  // interval budget is 2^max_depth
    int    n_phi     = 32;  // azimuthal trapezoid nodes

    QuadratureSpec tightened(double factor) const
    {
        QuadratureSpec s = *this;
        s.rel_tol *= factor;
        s.abs_tol *= factor;
        return s;
    }
};

namespace detail {

// Gauss-Kronrod 7-15 abscissae and weights on [-1, 1] (positive half).
inline constexpr double gk_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double  lo = 0.0, hi = 0.0;
    Complex integral{0.0, 0.0};
    double  error = 0.0;
};

// Heap comparator: worst error first, ties broken by position for
// deterministic refinement order.
inline bool better(const Segment& a, const Segment& b)
{
    if (a.error != b.error)
        return a.error < b.error;
    return a.lo > b.lo;
}

template <class F>
Segment gk15(F&& f, double lo, double hi)
{
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);

    Complex resk = gk_wk[7] * f(c);
    Complex resg = gk_wg[3] * f(c);
    for (int j = 0; j < 7; ++j) {
        const Complex fsum = f(c - h * gk_x[j]) + f(c + h * gk_x[j]);
        resk += gk_wk[j] * fsum;
        if (j % 2 == 1)
            resg += gk_wg[j / 2] * fsum;
    }
    Segment s;
    s.lo       = lo;
    s.hi       = hi;
    s.integral = h * resk;
    s.error    = std::abs(h * (resk - resg));
    return s;
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of a complex-valued integrand.
// Throws QuadratureFailure (carrying the best estimate) if the interval
// budget 2^max_depth is exhausted before the tolerances are met.
template <class F>
Complex integrate_gk(F&& f, double lo, double hi, const QuadratureSpec& spec)
{
    if (lo == hi)
        return Complex(0.0, 0.0);

    std::vector<detail::Segment> segs;
    segs.push_back(detail::gk15(f, lo, hi));

    const std::size_t budget = std::size_t(1) << std::min(spec.max_depth, 24);
    while (segs.size() < budget) {
        Complex total{0.0, 0.0};
        double  err_total = 0.0;
        for (const auto& s : segs) {
            total += s.integral;
            err_total += s.error;
        }
        if (err_total <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
            break;

        std::pop_heap(segs.begin(), segs.end(), detail::better);
        const detail::Segment worst = segs.back();
        segs.pop_back();

        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi)
            break;  // interval at rounding resolution
        segs.push_back(detail::gk15(f, worst.lo, mid));
        std::push_heap(segs.begin(), segs.end(), detail::better);
        segs.push_back(detail::gk15(f, mid, worst.hi));
        std::push_heap(segs.begin(), segs.end(), detail::better);
    }

    // Deterministic reduction: sum in position order.
    std::sort(segs.begin(), segs.end(),
              [](const detail::Segment& a, const detail::Segment& b) { return a.lo < b.lo; });
    Complex total{0.0, 0.0};
    double  err_total = 0.0;
    for (const auto& s : segs) {
        total += s.integral;
        err_total += s.error;
    }
    if (err_total > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
        throw err::QuadratureFailure("integrate_gk: tolerance not met", total, err_total);
    return total;
}

// Mean over the azimuth, (1/2pi) integral f(phi) dphi, by the trapezoid
// rule on n equispaced nodes (spectrally accurate for smooth periodic f).
template <class F>
Complex azimuthal_mean(F&& f, int n)
{
    Complex sum{0.0, 0.0};
    for (int k = 0; k < n; ++k)
        sum += f(2.0 * pi * k / n);
    return sum / double(n);
}

// Integral over the region p in [0, p_max] with the oblate volume element
// folded in: integral of f(p, q, phi) (p^2 + q^2)/a dp dq dphi. The q-domain
// is split at the cut plane q = 0 so sided integrands stay smooth per panel.
template <class F>
Complex quad_oblate(F&& integrand, double p_max, const Vec3& y, const QuadratureSpec& spec)
{
    const double a = y.norm();
    if (a <= 0.0)
        throw err::DegenerateDilation("quad_oblate: |y| = 0");

    const QuadratureSpec inner = spec.tightened(0.1);

    auto q_slice = [&](double p) {
        auto over_q = [&](double q) {
            auto over_phi = [&](double phi) { return integrand(p, q, phi); };
            return (2.0 * pi) * azimuthal_mean(over_phi, spec.n_phi)
                 * ((p * p + q * q) / a);
        };
        return integrate_gk(over_q, -a, 0.0, inner) + integrate_gk(over_q, 0.0, a, inner);
    };
    return integrate_gk(q_slice, 0.0, p_max, spec);
}

}  // namespace pbwave

#endif
