#include "pbwave/em.hpp"

#include <cmath>

namespace pbwave {

DerivativeKernel derivative_kernel(const BeamPoint& bp, KappaSign k)
{
    const Complex rt  = bp.rtilde;
    const Complex tau = bp.z.tau;
    if (std::abs(rt) == 0.0)
        throw err::OnBranchSphere("derivative_kernel: rtilde = 0");
    const double kap = kappa(k);

    const Complex den = rt * (tau - kap * rt);
    if (std::abs(den) == 0.0)
        throw err::SingularDenominator("derivative_kernel: tau = +-rtilde");

    // h = 1/(rtilde (tau - kappa rtilde)); derivatives in rtilde and tau.
    const Complex d1   = 1.0 / den;
    const Complex d2   = d1 * d1;
    const Complex d3   = d2 * d1;
    const Complex dr   = tau - 2.0 * kap * rt;  // d(den)/d rtilde
    const Complex h    = d1;
    const Complex h_r  = -dr * d2;
    const Complex h_rr = 2.0 * kap * d2 + 2.0 * dr * dr * d3;
    const Complex h_t  = -rt * d2;
    const Complex h_tt = 2.0 * rt * rt * d3;
    const Complex h_rt = -d2 + 2.0 * rt * dr * d3;

    const double c = 1.0 / (8.0 * pi * pi);
    const CVec3 w  = bp.z.zvec / rt;  // d_j rtilde
    const CMat3 ww = w * w.transpose();

    DerivativeKernel ker;
    ker.value   = c * h;
    ker.grad    = c * h_r * w;
    ker.hess    = c * (h_rr * ww + (h_r / rt) * (CMat3::Identity() - ww));
    ker.dt      = c * h_t;
    ker.dtt     = c * h_tt;
    ker.dt_grad = c * h_rt * w;
    return ker;
}

CVec3 hertz_potential(const BeamPoint& bp, const Polarization& pol, KappaSign k)
{
    return green_pm(bp, k) * pol.p;
}

EMField em_field_from_kernel(const DerivativeKernel& ker, const Polarization& pol)
{
    EMField out;
    out.F = ker.hess * pol.p                       // grad div Z
          - ker.hess.trace() * pol.p               // - (Hessian trace) Z
          + imag_unit * bcross(ker.dt_grad, pol.p);  // - d_{it} curl Z
    return out;
}

EMField em_field(const BeamPoint& bp, const Polarization& pol, KappaSign k)
{
    return em_field_from_kernel(derivative_kernel(bp, k), pol);
}

CMat3 dyadic_mother(const BeamPoint& bp, KappaSign k)
{
    const DerivativeKernel ker = derivative_kernel(bp, k);
    CMat3 out;
    for (int col = 0; col < 3; ++col) {
        Polarization unit;
        unit.p           = CVec3::Zero();
        unit.p(col)      = Complex(1.0, 0.0);
        out.col(col)     = em_field_from_kernel(ker, unit).F;
    }
    return out;
}

std::pair<Vec3, Vec3> split_real_fields(const EMField& f)
{
    return {f.E(), f.B()};
}

}  // namespace pbwave
