#include "pbwave/sources.hpp"

#include <cmath>

namespace pbwave {

namespace {

Complex cdot(const CVec3& g, const Vec3& e)
{
    return g(0) * e(0) + g(1) * e(1) + g(2) * e(2);
}

Vec3 oblate_point(const DiskFrame& fr, double a, double p, double q, double phi)
{
    const double rho = std::sqrt(std::max(0.0, (a * a + p * p) * (a * a - q * q))) / a;
    return rho * (std::cos(phi) * fr.e1 + std::sin(phi) * fr.e2) + (p * q / a) * fr.yhat;
}

// Perpendicular trace of the Hessian, trace(H) - yhat.H.yhat.
Complex perp_trace(const CMat3& h, const Vec3& yhat)
{
    Complex hyy{0.0, 0.0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            hyy += yhat(i) * h(i, j) * yhat(j);
    return h.trace() - hyy;
}

struct FbarDerivs {
    Complex fp{0.0, 0.0}, fq{0.0, 0.0};
};

// d/dp and d/dq of the azimuthal mean, by the chain rule through the
// coordinate map. Near the symmetry axis (rho -> 0, i.e. q -> +-a) the
// rho-derivative factor degenerates; the mean of grad f . e_rho is O(rho)
// there, and the symmetric limit uses the Hessian instead.
FbarDerivs fbar_derivs(const TestFunction& f, double p, double q, const DiskFrame& fr,
                       double a, int n)
{
    const double rho2 = std::max(0.0, (a * a + p * p) * (a * a - q * q)) / (a * a);
    const double rho  = std::sqrt(rho2);

    FbarDerivs d;
    if (rho > 1e-5 * std::max(a, p)) {
        Complex m_rho{0.0, 0.0}, m_y{0.0, 0.0};
        for (int kphi = 0; kphi < n; ++kphi) {
            const double phi = 2.0 * pi * kphi / n;
            const Vec3 e_rho = std::cos(phi) * fr.e1 + std::sin(phi) * fr.e2;
            const Vec3 x     = rho * e_rho + (p * q / a) * fr.yhat;
            const CVec3 g    = f.grad(x);
            m_rho += cdot(g, e_rho);
            m_y += cdot(g, fr.yhat);
        }
        m_rho /= double(n);
        m_y /= double(n);
        const double rho_p = p * (a * a - q * q) / (a * a * rho);
        const double rho_q = -q * (a * a + p * p) / (a * a * rho);
        d.fp = rho_p * m_rho + (q / a) * m_y;
        d.fq = rho_q * m_rho + (p / a) * m_y;
    } else {
        const Vec3 x0     = (p * q / a) * fr.yhat;
        const Complex gy  = cdot(f.grad(x0), fr.yhat);
        const Complex t2  = 0.5 * perp_trace(f.hess(x0), fr.yhat);
        d.fp = (p * (a * a - q * q) / (a * a)) * t2 + (q / a) * gy;
        d.fq = -(q * (a * a + p * p) / (a * a)) * t2 + (p / a) * gy;
    }
    return d;
}

// Azimuthal mean of (a/rho) d_rho f - i d_3 f on the disk at radius rho,
// with the rho -> 0 limit a * perp_trace/2 - i grad.yhat at the center.
Complex disk_layer_mean(const TestFunction& f, double rho, const DiskFrame& fr,
                        double a, int n)
{
    if (rho > 1e-5 * a) {
        Complex m_rho{0.0, 0.0}, m_y{0.0, 0.0};
        for (int kphi = 0; kphi < n; ++kphi) {
            const double phi = 2.0 * pi * kphi / n;
            const Vec3 e_rho = std::cos(phi) * fr.e1 + std::sin(phi) * fr.e2;
            const CVec3 g    = f.grad(rho * e_rho);
            m_rho += cdot(g, e_rho);
            m_y += cdot(g, fr.yhat);
        }
        m_rho /= double(n);
        m_y /= double(n);
        return (a / rho) * m_rho - imag_unit * m_y;
    }
    const Vec3 x0 = Vec3::Zero();
    return a * 0.5 * perp_trace(f.hess(x0), fr.yhat) - imag_unit * cdot(f.grad(x0), fr.yhat);
}

double disk_radius(const Vec3& y)
{
    const double a = y.norm();
    if (a == 0.0)
        throw err::DegenerateDilation("source action: |y| = 0");
    return a;
}

}  // namespace

Complex phi_mean(const TestFunction& f, double p, double q, const Vec3& y, int n_nodes)
{
    const double a     = disk_radius(y);
    const DiskFrame fr = disk_frame(y);
    Complex sum{0.0, 0.0};
    for (int k = 0; k < n_nodes; ++k)
        sum += f.eval(oblate_point(fr, a, p, q, 2.0 * pi * k / n_nodes));
    return sum / double(n_nodes);
}

Complex f_rtilde(const TestFunction& f, double p, double q, const Vec3& y, int n_nodes)
{
    const double a     = disk_radius(y);
    const DiskFrame fr = disk_frame(y);
    const FbarDerivs d = fbar_derivs(f, p, q, fr, a, n_nodes);
    return 0.5 * (d.fp - imag_unit * d.fq);
}

Complex f_rtilde_over_q(const TestFunction& f, double q, const Vec3& y, int n_nodes)
{
    const double a     = disk_radius(y);
    const DiskFrame fr = disk_frame(y);
    const double rho2  = std::max(0.0, (a * a - q * q));
    const double rho   = std::sqrt(rho2);

    // At p = 0 both fbar_p and fbar_q carry an explicit factor of q:
    //   fbar_p = (q/a) mean(grad f . yhat),  fbar_q = -(q/rho) mean(grad f . e_rho),
    // so fbar_rtilde(iq)/q = [mean(grad f . yhat)/a + i mean(grad f . e_rho)/rho] / 2.
    if (rho > 1e-5 * a) {
        Complex m_rho{0.0, 0.0}, m_y{0.0, 0.0};
        for (int kphi = 0; kphi < n_nodes; ++kphi) {
            const double phi = 2.0 * pi * kphi / n_nodes;
            const Vec3 e_rho = std::cos(phi) * fr.e1 + std::sin(phi) * fr.e2;
            const CVec3 g    = f.grad(rho * e_rho);
            m_rho += cdot(g, e_rho);
            m_y += cdot(g, fr.yhat);
        }
        m_rho /= double(n_nodes);
        m_y /= double(n_nodes);
        return 0.5 * (m_y / a + imag_unit * m_rho / rho);
    }
    const Vec3 x0 = Vec3::Zero();
    return 0.5 * (cdot(f.grad(x0), fr.yhat) / a
                  + imag_unit * 0.5 * perp_trace(f.hess(x0), fr.yhat));
}

Complex action_regularized(const TestFunction& f, const Vec3& y, Complex tau,
                           const AnalyticSignal& g, KappaSign k, double eps,
                           const QuadratureSpec& spec)
{
    if (eps <= 0.0)
        throw err::Error("action_regularized: eps must be positive");
    const double a     = disk_radius(y);
    const DiskFrame fr = disk_frame(y);
    const double kap   = kappa(k);

    const Complex alpha(eps, a);
    const Complex alpha_bar = std::conj(alpha);
    const double  aa        = eps * eps + a * a;  // alpha * conj(alpha)

    const Complex north = f.eval(eps * fr.yhat);
    const Complex south = f.eval(-eps * fr.yhat);
    const Complex boundary =
        (aa / (2.0 * imag_unit * a))
        * (g.eval(tau - kap * alpha) * north / alpha
           - g.eval(tau - kap * alpha_bar) * south / alpha_bar);

    auto integrand = [&](double q) {
        const Complex rt(eps, q);
        const FbarDerivs d = fbar_derivs(f, eps, q, fr, a, spec.n_phi);
        const Complex frt  = 0.5 * (d.fp - imag_unit * d.fq);
        return g.eval(tau - kap * rt) * frt / rt;
    };
    const Complex integral = integrate_gk(integrand, -a, a, spec);

    return boundary - (aa / a) * integral;
}

Complex action_limit(const TestFunction& f, const Vec3& y, Complex tau,
                     const AnalyticSignal& g, const QuadratureSpec& spec)
{
    const double a     = disk_radius(y);
    const DiskFrame fr = disk_frame(y);

    auto integrand = [&](double q) {
        // gbar(tau, q) * fbar_rtilde(iq)/q, with the O(q) factor divided out.
        const double rho = std::sqrt(std::max(0.0, a * a - q * q));
        Complex over_q;
        if (rho > 1e-5 * a) {
            Complex m_rho{0.0, 0.0}, m_y{0.0, 0.0};
            for (int kphi = 0; kphi < spec.n_phi; ++kphi) {
                const double phi = 2.0 * pi * kphi / spec.n_phi;
                const Vec3 e_rho = std::cos(phi) * fr.e1 + std::sin(phi) * fr.e2;
                const CVec3 gr   = f.grad(rho * e_rho);
                m_rho += cdot(gr, e_rho);
                m_y += cdot(gr, fr.yhat);
            }
            m_rho /= double(spec.n_phi);
            m_y /= double(spec.n_phi);
            over_q = 0.5 * (m_y / a + imag_unit * m_rho / rho);
        } else {
            const Vec3 x0 = Vec3::Zero();
            over_q = 0.5 * (cdot(f.grad(x0), fr.yhat) / a
                            + imag_unit * 0.5 * perp_trace(f.hess(x0), fr.yhat));
        }
        return jump_average(g, tau, q) * over_q;
    };

    const Complex point_term = -jump_average(g, tau, a) * f.eval(Vec3::Zero());
    const Complex layer_term =
        2.0 * imag_unit * a * integrate_gk(integrand, 0.0, a, spec);
    return point_term + layer_term;
}

Complex action_static_delta(const TestFunction& f, const Vec3& y,
                            const QuadratureSpec& spec)
{
    const double a     = disk_radius(y);
    const DiskFrame fr = disk_frame(y);

    // rho = a sin(psi) removes the integrable rim singularity 1/sqrt(a^2-rho^2).
    auto integrand = [&](double psi) {
        const double rho = a * std::sin(psi);
        return a * std::sin(psi) * disk_layer_mean(f, rho, fr, a, spec.n_phi);
    };
    return f.eval(Vec3::Zero()) + integrate_gk(integrand, 0.0, 0.5 * pi, spec);
}

Complex action_spacetime_delta(const TestFunction& f, const Vec3& y, Complex tau,
                               const QuadratureSpec& spec)
{
    const double a     = disk_radius(y);
    const DiskFrame fr = disk_frame(y);

    auto z2 = [&](double rho) { return Complex(rho * rho - a * a, 0.0) - tau * tau; };
    if (std::abs(z2(0.0)) == 0.0)
        throw err::SingularDenominator("action_spacetime_delta: z^2 = 0 on the world tube");

    const Complex point_term = tau * f.eval(Vec3::Zero()) / (2.0 * pi * z2(0.0));
    auto integrand = [&](double psi) {
        const double rho = a * std::sin(psi);
        return a * std::sin(psi) * (tau / (2.0 * pi * z2(rho)))
             * disk_layer_mean(f, rho, fr, a, spec.n_phi);
    };
    return point_term + integrate_gk(integrand, 0.0, 0.5 * pi, spec);
}

LayerRepresentation unsmeared_layers(const Vec3& y, Complex tau, const AnalyticSignal& g,
                                     KappaSign k, double eps)
{
    if (eps <= 0.0)
        throw err::Error("unsmeared_layers: eps must be positive");
    const double a   = disk_radius(y);
    const double kap = kappa(k);

    LayerRepresentation rep;
    rep.eps   = eps;
    rep.alpha = Complex(eps, a);
    rep.y     = y;

    const Complex alpha_bar = std::conj(rep.alpha);
    const double  aa        = eps * eps + a * a;

    rep.pole_plus  = -imag_unit * (aa / (2.0 * a)) * g.eval(tau - kap * rep.alpha) / rep.alpha;
    rep.pole_minus = imag_unit * (aa / (2.0 * a)) * g.eval(tau - kap * alpha_bar) / alpha_bar;
    rep.double_layer = [aa, a, kap, tau, g, eps](double q, double /*phi*/) {
        const Complex rt(eps, q);
        return -(aa / a) * g.eval(tau - kap * rt) / rt;
    };
    return rep;
}

Complex contract(const LayerRepresentation& layers, const TestFunction& f,
                 const QuadratureSpec& spec)
{
    const double a     = disk_radius(layers.y);
    const DiskFrame fr = disk_frame(layers.y);

    const Complex poles = layers.pole_plus * f.eval(layers.eps * fr.yhat)
                        + layers.pole_minus * f.eval(-layers.eps * fr.yhat);

    auto integrand = [&](double q) {
        const FbarDerivs d = fbar_derivs(f, layers.eps, q, fr, a, spec.n_phi);
        const Complex frt  = 0.5 * (d.fp - imag_unit * d.fq);
        return layers.double_layer(q, 0.0) * frt;
    };
    return poles + integrate_gk(integrand, -a, a, spec);
}

}  // namespace pbwave
