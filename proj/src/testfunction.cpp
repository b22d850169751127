#include "pbwave/testfunction.hpp"

#include "pbwave/errors.hpp"

#include <cmath>

namespace pbwave {

namespace {

// C-infinity step sigma(t): 0 for t <= 0, 1 for t >= 1, built from
// B(t) = exp(-1/t). Returns {sigma, sigma', sigma''}.
struct Step {
    double v = 0.0, d1 = 0.0, d2 = 0.0;
};

Step smooth_step(double t)
{
    if (t <= 0.0)
        return {0.0, 0.0, 0.0};
    if (t >= 1.0)
        return {1.0, 0.0, 0.0};
    const double s  = 1.0 - t;
    const double bt = std::exp(-1.0 / t);
    const double bs = std::exp(-1.0 / s);
    const double bt1 = bt / (t * t);
    const double bs1 = bs / (s * s);
    const double bt2 = bt * (1.0 - 2.0 * t) / (t * t * t * t);
    const double bs2 = bs * (1.0 - 2.0 * s) / (s * s * s * s);

    const double N = bt, N1 = bt1, N2 = bt2;
    const double D = bt + bs;
    const double D1 = bt1 - bs1;
    const double D2 = bt2 + bs2;

    Step out;
    out.v  = N / D;
    out.d1 = N1 / D - N * D1 / (D * D);
    out.d2 = N2 / D - 2.0 * N1 * D1 / (D * D) - N * D2 / (D * D)
           + 2.0 * N * D1 * D1 / (D * D * D);
    return out;
}

}  // namespace

RadialProfile poly_bump_profile(double R)
{
    RadialProfile p;
    p.s = [R](double r) {
        const double t2 = (r / R) * (r / R);
        if (t2 >= 1.0)
            return 0.0;
        const double w = 1.0 - t2;
        return w * w * w * w;
    };
    p.ds = [R](double r) {
        const double t = r / R;
        if (t >= 1.0)
            return 0.0;
        const double w = 1.0 - t * t;
        return -8.0 * t * w * w * w / R;
    };
    p.d2s = [R](double r) {
        const double t = r / R;
        if (t >= 1.0)
            return 0.0;
        const double w = 1.0 - t * t;
        return (-8.0 * w * w * w + 48.0 * t * t * w * w) / (R * R);
    };
    return p;
}

RadialProfile gaussian_profile(double sigma)
{
    const double s2 = sigma * sigma;
    RadialProfile p;
    p.s   = [s2](double r) { return std::exp(-0.5 * r * r / s2); };
    p.ds  = [s2](double r) { return -(r / s2) * std::exp(-0.5 * r * r / s2); };
    p.d2s = [s2](double r) {
        return (r * r / (s2 * s2) - 1.0 / s2) * std::exp(-0.5 * r * r / s2);
    };
    return p;
}

RadialProfile plateau_profile(double r1, double r2)
{
    if (!(0.0 < r1 && r1 < r2))
        throw err::Error("plateau_profile: need 0 < r1 < r2");
    const double w = r2 - r1;
    RadialProfile p;
    p.s = [r2, w](double r) { return smooth_step((r2 - r) / w).v; };
    p.ds = [r2, w](double r) { return -smooth_step((r2 - r) / w).d1 / w; };
    p.d2s = [r2, w](double r) { return smooth_step((r2 - r) / w).d2 / (w * w); };
    return p;
}

TestFunction tf_radial(const std::string& name, const RadialProfile& pr,
                       double support_radius, double tail_bound, const Vec3& center)
{
    TestFunction f;
    f.name           = name;
    f.support_radius = support_radius + center.norm();
    f.tail_bound     = tail_bound;
    f.eval = [pr, center](const Vec3& x) { return Complex(pr.s((x - center).norm()), 0.0); };
    f.grad = [pr, center](const Vec3& x) {
        const Vec3 v  = x - center;
        const double r = v.norm();
        if (r == 0.0)
            return CVec3(CVec3::Zero());
        return CVec3(((pr.ds(r) / r) * v).cast<Complex>());
    };
    f.hess = [pr, center](const Vec3& x) {
        const Vec3 v  = x - center;
        const double r = v.norm();
        if (r == 0.0)
            return CMat3((pr.d2s(0.0) * Mat3::Identity()).cast<Complex>());
        const Vec3 n = v / r;
        const Mat3 outer = n * n.transpose();
        const Mat3 h = pr.d2s(r) * outer + (pr.ds(r) / r) * (Mat3::Identity() - outer);
        return CMat3(h.cast<Complex>());
    };
    return f;
}

TestFunction tf_monomial(const std::string& name, int axis, const RadialProfile& pr,
                         double support_radius, double tail_bound, const Vec3& center)
{
    TestFunction f;
    f.name           = name;
    f.support_radius = support_radius + center.norm();
    f.tail_bound     = tail_bound * support_radius;
    f.eval = [pr, center, axis](const Vec3& x) {
        const Vec3 v = x - center;
        return Complex(v(axis) * pr.s(v.norm()), 0.0);
    };
    f.grad = [pr, center, axis](const Vec3& x) {
        const Vec3 v  = x - center;
        const double r = v.norm();
        Vec3 g = Vec3::Zero();
        g(axis) = pr.s(r);
        if (r > 0.0)
            g += v(axis) * (pr.ds(r) / r) * v;
        return CVec3(g.cast<Complex>());
    };
    f.hess = [pr, center, axis](const Vec3& x) {
        const Vec3 v  = x - center;
        const double r = v.norm();
        if (r == 0.0)
            return CMat3(CMat3::Zero());
        const double ds_r = pr.ds(r) / r;
        Mat3 h = Mat3::Zero();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double hij = 0.0;
                if (i == axis)
                    hij += ds_r * v(j);
                if (j == axis)
                    hij += ds_r * v(i);
                if (i == j)
                    hij += ds_r * v(axis);
                hij += v(axis) * v(i) * v(j) * (pr.d2s(r) - ds_r) / (r * r);
                h(i, j) = hij;
            }
        return CMat3(h.cast<Complex>());
    };
    return f;
}

std::vector<TestFunction> builtin_test_functions(double a)
{
    std::vector<TestFunction> out;
    out.push_back(tf_radial("unit", plateau_profile(1.5 * a, 3.0 * a), 3.0 * a, 0.0));
    out.push_back(tf_radial("unit-tight", plateau_profile(1.2 * a, 2.4 * a), 2.4 * a, 0.0));
    out.push_back(tf_radial("poly", poly_bump_profile(4.0 * a), 4.0 * a, 0.0));
    out.push_back(tf_radial("gauss", gaussian_profile(1.5 * a), 12.0 * a,
                            std::exp(-32.0)));
    out.push_back(tf_monomial("x3", 2, plateau_profile(1.5 * a, 3.0 * a), 3.0 * a, 0.0));
    out.push_back(tf_monomial("x1", 0, plateau_profile(1.5 * a, 3.0 * a), 3.0 * a, 0.0));
    out.push_back(tf_monomial("x3-poly", 2, poly_bump_profile(4.0 * a), 4.0 * a, 0.0));
    out.push_back(tf_radial("offset", plateau_profile(0.5 * a, 1.0 * a), 1.0 * a, 0.0,
                            Vec3(3.0 * a, 0.0, 0.0)));
    out.push_back(tf_radial("gauss-narrow", gaussian_profile(0.8 * a), 8.0 * a,
                            std::exp(-50.0)));
    out.push_back(tf_radial("poly-offset", poly_bump_profile(2.5 * a), 2.5 * a, 0.0,
                            Vec3(0.3 * a, 0.2 * a, 0.5 * a)));
    return out;
}

const TestFunction& find_test_function(const std::vector<TestFunction>& suite,
                                       const std::string& name)
{
    for (const auto& f : suite)
        if (f.name == name)
            return f;
    throw err::UnsupportedKind("unknown test function '" + name + "'");
}

}  // namespace pbwave
