#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace primeweb::numeric {

using ScalarFunction = std::function<double(double)>;

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

// Grid scan of [lo, hi] with the given step; returns every cell where f
// changes sign (a zero exactly on a grid point yields a cell ending there).
// Non-finite samples break the chain of comparisons.
std::vector<Bracket> sign_change_brackets(const ScalarFunction& f, double lo, double hi, double step);

// Pure bisection on a sign-changing bracket until the bracket is narrower
// than x_tolerance. Throws NumericalError when f(lo), f(hi) share a sign.
double bisect_root(const ScalarFunction& f, Bracket b, double x_tolerance);

// Bracketed root finder (TOMS 748) for monotone problems; same contract as
// bisect_root but converges superlinearly.
double solve_bracketed(const ScalarFunction& f, Bracket b, double x_tolerance, unsigned max_iterations = 200);

// Golden-section minimisation of f on [lo, hi]; returns argmin.
double golden_minimize(const ScalarFunction& f, double lo, double hi, double x_tolerance);

}  // namespace primeweb::numeric
