#ifndef PBWAVE_GEOMETRY_HPP
#define PBWAVE_GEOMETRY_HPP

#include "pbwave/errors.hpp"
#include "pbwave/types.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace pbwave {

// Oblate spheroidal coordinates adapted to the disk of radius a = |y|:
// rtilde = p + i q, level sets of p are confocal ellipsoids E_p (wave
// fronts), level sets of q confocal hyperboloids H_q (flow lines).
struct OblateCoords {
    double p   = 0.0;  // >= 0
    double q   = 0.0;  // in [-a, a]
    double phi = 0.0;  // azimuth about yhat, in [0, 2pi)
    double a   = 0.0;  // disk radius, > 0

    Complex rtilde() const { return Complex(p, q); }
};

// Right-handed orthonormal frame (e1, e2, yhat) used for the azimuth.
// e1 is the unit projection of the coordinate axis least aligned with yhat,
// ties broken toward the smaller index, so y along e3 reproduces the
// standard (x1, x2) azimuth.
struct DiskFrame {
    Vec3 e1, e2, yhat;
};

DiskFrame disk_frame(const Vec3& y);

// Scale-aware default tolerance for classification decisions.
inline double default_tol(double a) { return 1e-9 * std::max(1.0, a); }

// Complex distance rtilde = sqrt(r^2 - a^2 + 2i x.y) with branch Re >= 0.
// |y| = 0 falls back to the plain Euclidean distance. Throws OnCutAmbiguous
// on the open branch disk, where the two boundary values differ.
Complex complex_distance(const Vec3& x, const Vec3& y);

// Boundary value of rtilde on the closed disk: +/- i sqrt(a^2 - r^2).
Complex complex_distance_sided(const Vec3& x, const Vec3& y, Side side,
                               double tol = -1.0);

OblateCoords to_oblate(const Vec3& x, const Vec3& y,
                       std::optional<Side> side = std::nullopt);

Vec3 from_oblate(const OblateCoords& c, const Vec3& y);

// dx = (p^2 + q^2)/a dp dq dphi.
inline double volume_jacobian(const OblateCoords& c)
{
    return (c.p * c.p + c.q * c.q) / c.a;
}

BranchLocus classify_branch_locus(const Vec3& x, const Vec3& y, double tol);

CausalClass classify_causal(const Vec3& y, double u, double tol);

// Far-zone approximation rtilde ~ r + i a cos(theta), valid for r >> a.
inline Complex farzone_complex_distance(double r, double theta, double a)
{
    return Complex(r, a * std::cos(theta));
}

}  // namespace pbwave

#endif
