#pragma once

#include <functional>
#include <string_view>

namespace primeweb::numeric {

enum class QuadratureMethod { gauss_kronrod_15, gauss_kronrod_21, gauss_kronrod_31, gauss_kronrod_61 };

// How the integrand's interior singularity (if any) is treated.
//   none            - integrand is regular on the closed interval
//   pv_log_s        - 1/ln s at s = 1, symmetric principal value
//   pv_log_log_s    - 1/(s ln ln s) at s = e; arguments must stay above e
enum class SingularityMode { none, pv_log_s, pv_log_log_s };

struct QuadratureSpec {
    QuadratureMethod method = QuadratureMethod::gauss_kronrod_21;
    double abs_tolerance = 1e-12;
    double rel_tolerance = 1e-13;
    unsigned max_subintervals = 2000;
    SingularityMode singularity = SingularityMode::none;
};

struct IntegralEstimate {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
};

std::string_view method_name(QuadratureMethod m);

// Globally adaptive Gauss-Kronrod integration of f over [a, b] (QUADPACK
// QAG). Throws NumericalError when the error estimate exceeds
// max(abs_tolerance, rel_tolerance*|value|).
IntegralEstimate integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

// Cauchy principal value PV ∫_a^b f(s)/(s - c) ds for a < c < b (QUADPACK
// QAWC). f must be regular at c.
IntegralEstimate integrate_cauchy_pv(const std::function<double(double)>& f, double a, double b, double c,
                                     const QuadratureSpec& spec = {});

// Acceptance bound used by integrate() for a given value.
double accepted_error(const QuadratureSpec& spec, double value);

}  // namespace primeweb::numeric
