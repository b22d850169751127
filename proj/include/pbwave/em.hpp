#ifndef PBWAVE_EM_HPP
#define PBWAVE_EM_HPP

#include "pbwave/beams.hpp"
#include "pbwave/types.hpp"

#include <utility>

namespace pbwave {

// Complex dipole moment p = p_e + i p_m (electric + i magnetic).
struct Polarization {
    CVec3 p = CVec3::Zero();

    static Polarization electric(const Vec3& pe)
    {
        return {pe.cast<Complex>()};
    }
    static Polarization magnetic(const Vec3& pm)
    {
        return {imag_unit * pm.cast<Complex>()};
    }
};

// All analytic derivatives of G+- needed by the field construction. Spatial
// derivatives descend from d_j rtilde = z_j / rtilde and
// d_j d_k rtilde = delta_jk / rtilde - z_j z_k / rtilde^3.
struct DerivativeKernel {
    Complex value{0.0, 0.0};
    CVec3   grad = CVec3::Zero();       // d_j G
    CMat3   hess = CMat3::Zero();       // d_j d_k G
    Complex dt{0.0, 0.0};               // d_t G
    Complex dtt{0.0, 0.0};              // d_t^2 G
    CVec3   dt_grad = CVec3::Zero();    // d_t d_j G

    Complex laplacian() const { return hess.trace(); }
};

DerivativeKernel derivative_kernel(const BeamPoint& bp, KappaSign k);

// Self-dual field F = E + iB.
struct EMField {
    CVec3 F = CVec3::Zero();

    Vec3 E() const { return F.real(); }
    Vec3 B() const { return F.imag(); }
};

// Hertz potential Z+-(z) = p G+-(z).
CVec3 hertz_potential(const BeamPoint& bp, const Polarization& pol, KappaSign k);

// F = curl curl Z - d_{it} curl Z with d_{it} = -i d_t, expanded as
// grad div Z minus the Hessian trace (the wave equation is not assumed).
EMField em_field(const BeamPoint& bp, const Polarization& pol, KappaSign k);
EMField em_field_from_kernel(const DerivativeKernel& ker, const Polarization& pol);

// Dyadic mother pulsed beam: column k is em_field with p = e_k, so
// dyadic_mother(z) * p reproduces em_field(z, p).
CMat3 dyadic_mother(const BeamPoint& bp, KappaSign k);

std::pair<Vec3, Vec3> split_real_fields(const EMField& f);

// Global sign s in curl F = s i d_t F off the source tube, fixed by the
// d_{it} = -i d_t convention; the maxwell-sign probe re-derives it
// numerically.
inline constexpr int maxwell_curl_sign = 1;

}  // namespace pbwave

#endif
