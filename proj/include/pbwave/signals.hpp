#ifndef PBWAVE_SIGNALS_HPP
#define PBWAVE_SIGNALS_HPP

#include "pbwave/errors.hpp"
#include "pbwave/types.hpp"

#include <functional>
#include <string>

namespace pbwave {

enum class SignalKind { Cauchy, ConstNegOne, CauchyDeriv, Custom };

// Analytic driving signal g(tau), holomorphic for Im tau != 0. Custom
// signals must supply eval and deriv (deriv2 only if an oracle needs it);
// no automatic differentiation is assumed.
struct AnalyticSignal {
    SignalKind kind = SignalKind::Custom;
    int order = 0;  // CauchyDeriv order m

    std::function<Complex(Complex)> eval_fn;
    std::function<Complex(Complex)> deriv_fn;
    std::function<Complex(Complex)> deriv2_fn;

    Complex eval(Complex tau) const;
    Complex deriv(Complex tau) const;
    Complex deriv2(Complex tau) const;
    std::string name() const;
};

// Built-ins: Cauchy g = 1/(2 pi tau), ConstNegOne g = -1, and
// CauchyDeriv(m) g = (-1)^m m!/(2 pi tau^(m+1)), m >= 1.
AnalyticSignal make_signal(SignalKind kind, int m = 0);

// CLI string form: "cauchy" | "const" | "dcauchy:m".
AnalyticSignal make_signal(const std::string& spec);

// Average of g over the jump at rtilde = +/- i q:
// gbar(tau, q) = [g(tau - iq) + g(tau + iq)]/2.
Complex jump_average(const AnalyticSignal& g, Complex tau, double q);

// Cylindrical form gtilde(tau, rho) = gbar(tau, sqrt(a^2 - rho^2)), 0 <= rho <= a.
Complex gtilde_rho(const AnalyticSignal& g, Complex tau, double rho, double a);

}  // namespace pbwave

#endif
