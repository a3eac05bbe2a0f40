#include "primeweb/numeric/log_integral.hpp"

#include <cmath>

#include "primeweb/errors.hpp"

namespace primeweb::numeric {

QuadratureSpec log_integral_spec() {
    QuadratureSpec spec;
    spec.abs_tolerance = 1e-12;
    spec.rel_tolerance = 1e-13;
    spec.singularity = SingularityMode::pv_log_s;
    return spec;
}

namespace {

// (s-1)/ln s, the regular numerator of 1/ln s = [(s-1)/ln s] / (s-1).
// Near s = 1 use the series in h = s-1 (value 1 at h = 0).
double log_quotient(double s) {
    const double h = s - 1.0;
    if (std::abs(h) < 1e-5) return 1.0 + h / 2.0 - h * h / 12.0 + h * h * h / 24.0;
    return h / std::log(s);
}

// 1/ln s - 1/(s-1), bounded on (0, 1]; used below 1 where the integral is
// ordinary but the endpoint can sit arbitrarily close to the pole.
double regularized_inverse_log(double s) {
    const double h = s - 1.0;
    if (std::abs(h) < 1e-5) return 0.5 - h / 12.0 + h * h / 24.0;
    return 1.0 / std::log(s) - 1.0 / h;
}

// L on (0, 2]. For x > 1 the integral through s = 1 is a Cauchy principal
// value with weight 1/(s-1).
IntegralEstimate log_integral_low(double x, const QuadratureSpec& spec) {
    if (x < 1.0) {
        auto r = integrate(regularized_inverse_log, 0.0, x, spec);
        r.value += std::log1p(-x);
        return r;
    }
    return integrate_cauchy_pv(log_quotient, 0.0, x, 1.0, spec);
}

}  // namespace

IntegralEstimate log_integral(double x, const QuadratureSpec& spec) {
    if (!(x > 0.0)) throw DomainError("log_integral: x must be positive");
    if (x == 1.0) throw DomainError("log_integral: singular at x = 1");
    if (x <= 2.0) return log_integral_low(x, spec);

    // The constant L(2) and the smooth tail each get half of the budget so
    // that the combined estimate honours the requested tolerance.
    QuadratureSpec half = spec;
    half.abs_tolerance /= 2;
    half.rel_tolerance /= 2;
    static const IntegralEstimate at_two = [] {
        QuadratureSpec s = log_integral_spec();
        s.abs_tolerance /= 2;
        return log_integral_low(2.0, s);
    }();
    const auto tail = integrate([](double t) { return std::exp(t) / t; }, std::log(2.0), std::log(x), half);
    return {at_two.value + tail.value, at_two.error + tail.error};
}

int small_mobius(unsigned long long k) {
    if (k == 0) throw DomainError("mobius: k must be positive");
    int sign = 1;
    for (unsigned long long p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        sign = -sign;
    }
    if (k > 1) sign = -sign;
    return sign;
}

RiemannR riemann_r(double x, const QuadratureSpec& spec) {
    if (!(x >= 2.0)) throw DomainError("riemann_r: x must be at least 2");
    RiemannR r;
    for (unsigned k = 1;; ++k) {
        const double root = std::pow(x, 1.0 / k);
        if (root < 2.0) break;
        r.terms = k;
        const int mu = small_mobius(k);
        if (mu == 0) continue;
        const auto l = log_integral(root, spec);
        r.value += mu * l.value / k;
        r.error += l.error / k;
    }
    return r;
}

}  // namespace primeweb::numeric
