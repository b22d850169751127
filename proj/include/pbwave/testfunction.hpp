#ifndef PBWAVE_TESTFUNCTION_HPP
#define PBWAVE_TESTFUNCTION_HPP

#include "pbwave/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace pbwave {

// Smooth probe f on R^3 bundled with its analytic first and second
// derivatives; complex values are allowed, the built-ins are real.
struct TestFunction {
    std::string name;

    std::function<Complex(const Vec3&)> eval;
    std::function<CVec3(const Vec3&)>   grad;
    std::function<CMat3(const Vec3&)>   hess;

    double support_radius = 0.0;  // |f| <= tail_bound beyond this radius
    double tail_bound     = 0.0;  // 0 for compact support

    Complex laplacian(const Vec3& x) const { return hess(x).trace(); }
};

// Radial profile s(r) with derivatives; lifted to R^3 below.
struct RadialProfile {
    std::function<double(double)> s, ds, d2s;
};

RadialProfile poly_bump_profile(double R);           // (1 - (r/R)^2)^4 cutoff
RadialProfile gaussian_profile(double sigma);        // exp(-r^2 / 2 sigma^2)
RadialProfile plateau_profile(double r1, double r2); // 1 on [0,r1], 0 beyond r2, C-infinity

TestFunction tf_radial(const std::string& name, const RadialProfile& pr,
                       double support_radius, double tail_bound,
                       const Vec3& center = Vec3::Zero());

// f(x) = (x - center)_axis * s(|x - center|).
TestFunction tf_monomial(const std::string& name, int axis, const RadialProfile& pr,
                         double support_radius, double tail_bound,
                         const Vec3& center = Vec3::Zero());

// The built-in probe suite, scaled to the disk radius a.
std::vector<TestFunction> builtin_test_functions(double a);

const TestFunction& find_test_function(const std::vector<TestFunction>& suite,
                                       const std::string& name);

}  // namespace pbwave

#endif
