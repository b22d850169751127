#include "pbwave/geometry.hpp"

#include <cmath>

namespace pbwave {

DiskFrame disk_frame(const Vec3& y)
{
    const double a = y.norm();
    if (a == 0.0)
        throw err::DegenerateDilation("disk_frame: |y| = 0");
    DiskFrame f;
    f.yhat = y / a;

    int least = 0;
    double best = std::abs(f.yhat(0));
    for (int k = 1; k < 3; ++k) {
        if (std::abs(f.yhat(k)) < best) {
            best  = std::abs(f.yhat(k));
            least = k;
        }
    }
    Vec3 axis = Vec3::Unit(least);
    f.e1 = (axis - axis.dot(f.yhat) * f.yhat).normalized();
    f.e2 = f.yhat.cross(f.e1);
    return f;
}

Complex complex_distance(const Vec3& x, const Vec3& y)
{
    const double a = y.norm();
    if (a == 0.0)
        return x.norm();
    const double b  = x.squaredNorm() - a * a;
    const double xy = x.dot(y);
    if (xy == 0.0 && b < 0.0)
        throw err::OnCutAmbiguous(
            "complex_distance: point on the open branch disk; use complex_distance_sided");
    return std::sqrt(Complex(b, 2.0 * xy));  // principal branch, Re >= 0
}

Complex complex_distance_sided(const Vec3& x, const Vec3& y, Side side, double tol)
{
    const double a = y.norm();
    if (a == 0.0)
        throw err::DegenerateDilation("complex_distance_sided: |y| = 0");
    if (tol < 0.0)
        tol = default_tol(a);
    const double r  = x.norm();
    const double x3 = x.dot(y) / a;
    if (r > a + tol || std::abs(x3) > tol)
        throw err::NotOnCut("complex_distance_sided: point not on the branch cut");
    const double q = std::sqrt(std::max(0.0, a * a - r * r));
    return side == Side::Plus ? Complex(0.0, q) : Complex(0.0, -q);
}

OblateCoords to_oblate(const Vec3& x, const Vec3& y, std::optional<Side> side)
{
    const double a = y.norm();
    if (a == 0.0)
        throw err::DegenerateDilation("to_oblate: |y| = 0");
    const DiskFrame f = disk_frame(y);

    const double x3 = x.dot(f.yhat);
    const double r2 = x.squaredNorm();
    const double b  = r2 - a * a;
    const double d  = std::hypot(b, 2.0 * a * x3);

    // Cancellation-stable solve of p^2 - q^2 = b, p q = a x3: pick whichever
    // of the paired quadratic roots adds instead of subtracts.
    const double p = (b >= 0.0) ? std::sqrt(0.5 * (d + b))
                                : (d - b > 0.0 ? std::sqrt(2.0 * a * a * x3 * x3 / (d - b)) : 0.0);
    double qmag    = (b <= 0.0) ? std::sqrt(0.5 * (d - b))
                                : (d + b > 0.0 ? std::sqrt(2.0 * a * a * x3 * x3 / (d + b)) : 0.0);
    qmag = std::min(qmag, a);

    double q;
    if (x3 != 0.0) {
        q = std::copysign(qmag, x3);
    } else if (qmag == 0.0) {
        q = 0.0;  // branch sphere or exterior plane
    } else {
        // open disk: the sign of q is the side of the cut
        if (!side)
            throw err::OnCutAmbiguous("to_oblate: point on the open branch disk without a side");
        q = (*side == Side::Plus) ? qmag : -qmag;
    }

    const Vec3 rho_vec = x - x3 * f.yhat;
    double phi = 0.0;
    if (rho_vec.norm() > 1e-15 * std::max(a, x.norm())) {
        phi = std::atan2(x.dot(f.e2), x.dot(f.e1));
        if (phi < 0.0)
            phi += 2.0 * pi;
    }
    return OblateCoords{p, q, phi, a};
}

Vec3 from_oblate(const OblateCoords& c, const Vec3& y)
{
    const DiskFrame f = disk_frame(y);
    const double a    = c.a;
    const double rho2 = (a * a + c.p * c.p) * (1.0 - c.q * c.q / (a * a));
    const double rho  = std::sqrt(std::max(0.0, rho2));
    const double x3   = c.p * c.q / a;
    return rho * (std::cos(c.phi) * f.e1 + std::sin(c.phi) * f.e2) + x3 * f.yhat;
}

BranchLocus classify_branch_locus(const Vec3& x, const Vec3& y, double tol)
{
    const double a = y.norm();
    if (a == 0.0)
        throw err::DegenerateDilation("classify_branch_locus: |y| = 0");
    const double x3 = x.dot(y) / a;
    const double r  = x.norm();
    if (std::abs(x3) <= tol) {
        if (std::abs(r - a) <= tol)
            return {BranchLocus::Kind::OnBranchSphere, Side::Plus};
        if (r < a)
            return {BranchLocus::Kind::OnDisk, x3 >= 0.0 ? Side::Plus : Side::Minus};
    }
    return {BranchLocus::Kind::Regular, Side::Plus};
}

CausalClass classify_causal(const Vec3& y, double u, double tol)
{
    const double a = y.norm();
    if (std::abs(std::abs(u) - a) <= tol)
        return CausalClass::Lightlike;
    if (std::abs(u) > a)
        return u > 0.0 ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
    return CausalClass::Spacelike;
}

}  // namespace pbwave
