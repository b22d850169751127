#ifndef PBWAVE_TYPES_HPP
#define PBWAVE_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <numbers>

namespace pbwave {

using Real    = double;
using Complex = std::complex<double>;
using Vec3    = Eigen::Vector3d;
using CVec3   = Eigen::Vector3cd;
using Mat3    = Eigen::Matrix3d;
using CMat3   = Eigen::Matrix3cd;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex imag_unit{0.0, 1.0};

// Bilinear (non-conjugating) products. Eigen's dot() conjugates its first
// argument, which is wrong for the complexified metric z.z = sum z_k^2.
inline Complex bdot(const CVec3& u, const CVec3& v)
{
    return u(0) * v(0) + u(1) * v(1) + u(2) * v(2);
}

inline Complex bdot(const CVec3& u, const Vec3& v)
{
    return u(0) * v(0) + u(1) * v(1) + u(2) * v(2);
}

inline CVec3 bcross(const CVec3& u, const CVec3& v)
{
    return CVec3(u(1) * v(2) - u(2) * v(1),
                 u(2) * v(0) - u(0) * v(2),
                 u(0) * v(1) - u(1) * v(0));
}

// Retarded/advanced selector in W(z) = g(tau - kappa*rtilde)/(4 pi rtilde).
enum class KappaSign { Plus, Minus };

inline double kappa(KappaSign k) { return k == KappaSign::Plus ? 1.0 : -1.0; }

// Which face of the branch disk a boundary value is taken from
// (side of the plane x.yhat = 0).
enum class Side { Plus, Minus };

// Causal character of the imaginary part y = (yvec, iu).
enum class CausalClass { TimelikeFuture, TimelikePast, Spacelike, Lightlike };

struct BranchLocus {
    enum class Kind { Regular, OnBranchSphere, OnDisk };
    Kind kind = Kind::Regular;
    Side side = Side::Plus;  // meaningful only when kind == OnDisk
};

// A point z = (zvec, i tau) of complex spacetime with zvec = xvec + i yvec
// and tau = t + i u (units with c = 1).
struct ComplexEvent {
    CVec3   zvec;
    Complex tau;

    static ComplexEvent from_parts(const Vec3& xvec, double t, const Vec3& yvec, double u)
    {
        ComplexEvent z;
        z.zvec = xvec.cast<Complex>() + imag_unit * yvec.cast<Complex>();
        z.tau  = Complex(t, u);
        return z;
    }

    Vec3 space_re() const { return zvec.real(); }
    Vec3 space_im() const { return zvec.imag(); }
    double time_re() const { return tau.real(); }
    double time_im() const { return tau.imag(); }

    Complex zvec_squared() const { return bdot(zvec, zvec); }
    // Minkowski square z^2 = zvec^2 - tau^2.
    Complex z_squared() const { return zvec_squared() - tau * tau; }
};

}  // namespace pbwave

#endif
