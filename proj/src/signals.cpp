#include "pbwave/signals.hpp"

#include <cmath>
#include <stdexcept>

namespace pbwave {

namespace {

bool finite(Complex v)
{
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

double factorial(int n)
{
    double f = 1.0;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

// m-th derivative of 1/(2 pi tau): (-1)^m m! / (2 pi tau^(m+1)).
Complex cauchy_family(Complex tau, int m)
{
    Complex denom = tau;
    for (int k = 0; k < m; ++k)
        denom *= tau;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * factorial(m) / (2.0 * pi * denom);
}

}  // namespace

Complex AnalyticSignal::eval(Complex tau) const
{
    const Complex v = eval_fn(tau);
    if (!finite(v))
        throw err::PoleOnEvaluation("signal " + name() + " evaluated at a pole");
    return v;
}

Complex AnalyticSignal::deriv(Complex tau) const
{
    if (!deriv_fn)
        throw err::UnsupportedKind("signal " + name() + " has no derivative");
    const Complex v = deriv_fn(tau);
    if (!finite(v))
        throw err::PoleOnEvaluation("signal derivative " + name() + " evaluated at a pole");
    return v;
}

Complex AnalyticSignal::deriv2(Complex tau) const
{
    if (!deriv2_fn)
        throw err::UnsupportedKind("signal " + name() + " has no second derivative");
    const Complex v = deriv2_fn(tau);
    if (!finite(v))
        throw err::PoleOnEvaluation("signal 2nd derivative " + name() + " evaluated at a pole");
    return v;
}

std::string AnalyticSignal::name() const
{
    switch (kind) {
        case SignalKind::Cauchy: return "cauchy";
        case SignalKind::ConstNegOne: return "const";
        case SignalKind::CauchyDeriv: return "dcauchy:" + std::to_string(order);
        case SignalKind::Custom: return "custom";
    }
    return "?";
}

AnalyticSignal make_signal(SignalKind kind, int m)
{
    AnalyticSignal s;
    s.kind = kind;
    switch (kind) {
        case SignalKind::Cauchy:
            s.eval_fn   = [](Complex tau) { return cauchy_family(tau, 0); };
            s.deriv_fn  = [](Complex tau) { return cauchy_family(tau, 1); };
            s.deriv2_fn = [](Complex tau) { return cauchy_family(tau, 2); };
            break;
        case SignalKind::ConstNegOne:
            s.eval_fn   = [](Complex) { return Complex(-1.0, 0.0); };
            s.deriv_fn  = [](Complex) { return Complex(0.0, 0.0); };
            s.deriv2_fn = [](Complex) { return Complex(0.0, 0.0); };
            break;
        case SignalKind::CauchyDeriv:
            if (m < 1)
                throw err::UnsupportedKind("dcauchy requires order m >= 1");
            s.order     = m;
            s.eval_fn   = [m](Complex tau) { return cauchy_family(tau, m); };
            s.deriv_fn  = [m](Complex tau) { return cauchy_family(tau, m + 1); };
            s.deriv2_fn = [m](Complex tau) { return cauchy_family(tau, m + 2); };
            break;
        case SignalKind::Custom:
            throw err::UnsupportedKind("custom signals must supply eval and deriv directly");
    }
    return s;
}

AnalyticSignal make_signal(const std::string& spec)
{
    if (spec == "cauchy")
        return make_signal(SignalKind::Cauchy);
    if (spec == "const")
        return make_signal(SignalKind::ConstNegOne);
    if (spec.rfind("dcauchy:", 0) == 0) {
        int m = 0;
        try {
            m = std::stoi(spec.substr(8));
        } catch (const std::exception&) {
            throw err::UnsupportedKind("bad signal spec '" + spec + "'");
        }
        return make_signal(SignalKind::CauchyDeriv, m);
    }
    throw err::UnsupportedKind("unknown signal '" + spec + "' (want cauchy|const|dcauchy:m)");
}

Complex jump_average(const AnalyticSignal& g, Complex tau, double q)
{
    return 0.5 * (g.eval(tau - Complex(0.0, q)) + g.eval(tau + Complex(0.0, q)));
}

Complex gtilde_rho(const AnalyticSignal& g, Complex tau, double rho, double a)
{
    if (rho < 0.0 || rho > a)
        throw err::OutOfDisk("gtilde_rho: rho outside [0, a]");
    return jump_average(g, tau, std::sqrt(a * a - rho * rho));
}

}  // namespace pbwave
