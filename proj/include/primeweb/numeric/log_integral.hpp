#pragma once

#include "primeweb/numeric/quadrature.hpp"

namespace primeweb::numeric {

// Default spec for L(x): principal value at s = 1.
QuadratureSpec log_integral_spec();

// L(x) = PV ∫_0^x ds / ln s for x > 0, x != 1.
//
// Below 2 the singular part 1/(s-1) is subtracted analytically, leaving a
// regular integrand plus ln|x-1|. Above 2 the substitution s = e^t turns the
// remainder into ∫ e^t/t dt, which is smooth. Throws DomainError at x = 1 and
// for x <= 0.
IntegralEstimate log_integral(double x, const QuadratureSpec& spec = log_integral_spec());

struct RiemannR {
    double value = 0.0;
    double error = 0.0;   // accumulated quadrature error of the kept terms
    unsigned terms = 0;   // largest k kept (x^{1/k} >= 2)
};

// R(x) = Σ μ(k)/k L(x^{1/k}), truncated at the first k with x^{1/k} < 2.
// Requires x >= 2.
RiemannR riemann_r(double x, const QuadratureSpec& spec = log_integral_spec());

// Möbius function for small arguments (trial division). Used by riemann_r;
// the prime engine has its own for the full range.
int small_mobius(unsigned long long k);

}  // namespace primeweb::numeric
