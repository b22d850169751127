#ifndef PBWAVE_ERRORS_HPP
#define PBWAVE_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace pbwave::err {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |y| = 0 where complexified branch data was requested.
struct DegenerateDilation : Error { using Error::Error; };

// Evaluation on the open branch disk without a declared side.
struct OnCutAmbiguous : Error { using Error::Error; };

// Sided evaluation requested off the branch cut.
struct NotOnCut : Error { using Error::Error; };

struct UnsupportedKind : Error { using Error::Error; };

// A signal was evaluated at one of its poles.
struct PoleOnEvaluation : Error { using Error::Error; };

struct OutOfDisk : Error { using Error::Error; };

struct LightConeSingular : Error { using Error::Error; };

// rtilde = 0: the evaluation point sits on the branch sphere.
struct OnBranchSphere : Error { using Error::Error; };

struct SingularDenominator : Error { using Error::Error; };

struct QuadratureFailure : Error {
    QuadratureFailure(const std::string& what, std::complex<double> best, double err)
        : Error(what), best_estimate(best), error_estimate(err)
    {
    }
    std::complex<double> best_estimate{0.0, 0.0};
    double error_estimate = 0.0;
};

}  // namespace pbwave::err

#endif
