#include "primeweb/laws/logint_laws.hpp"

#include <cmath>
#include <string>

#include "primeweb/errors.hpp"
#include "primeweb/numeric/log_integral.hpp"
#include "primeweb/numeric/roots.hpp"

namespace primeweb::laws {

namespace {

double eval(Predictor p, double x) {
    return p == Predictor::L ? numeric::log_integral(x).value : numeric::riemann_r(x).value;
}

double solve(Predictor p, double target) {
    const double lo = 2.0;
    if (!(eval(p, lo) < target)) throw NumericalError("no root bracket: target " + std::to_string(target) + " too small");
    double hi = std::max(4.0, 2.0 * target * std::log(std::max(target, 2.0)));
    for (int i = 0; eval(p, hi) <= target; ++i) {
        if (i > 200 || !std::isfinite(hi)) throw NumericalError("no root bracket for target " + std::to_string(target));
        hi *= 2.0;
    }
    const auto f = [&](double x) { return eval(p, x) - target; };
    // L is strictly increasing above 1; the truncated R jumps at powers of
    // two, so it is solved by plain bisection.
    const double tol = 1e-13 * hi;
    return p == Predictor::L ? numeric::solve_bracketed(f, {lo, hi}, tol) : numeric::bisect_root(f, {lo, hi}, tol);
}

}  // namespace

std::string_view predictor_name(Predictor p) { return p == Predictor::L ? "L" : "R"; }

Predictor parse_predictor(std::string_view tag) {
    if (tag == "L") return Predictor::L;
    if (tag == "R") return Predictor::R;
    throw DomainError("unknown predictor '" + std::string(tag) + "' (expected L or R)");
}

double solve_log_integral(double target) { return solve(Predictor::L, target); }
double solve_riemann_r(double target) { return solve(Predictor::R, target); }

Prediction predict_next(const seq::Ray& ray, std::uint32_t n, Predictor method) {
    if (n == 0 || n > ray.depth())
        throw RangeError("depth " + std::to_string(n) + " not on the ray of " + std::to_string(ray.generator));
    Prediction p;
    p.m = ray.generator;
    p.n = n;
    p.method = method;
    p.target = ray.elements[n - 1];
    p.root = solve(method, static_cast<double>(p.target));
    p.residual = eval(method, p.root) - static_cast<double>(p.target);
    if (n < ray.depth()) {
        p.actual = ray.elements[n];
        p.relative_error = (p.root - static_cast<double>(*p.actual)) / static_cast<double>(*p.actual);
    }
    return p;
}

ColumnLaw column_distribution_law(const engine::PrimeIndexer& engine, std::uint64_t m) {
    if (m == 0 || engine.is_prime(m)) throw NotAMemberError(std::to_string(m) + " is not a generator of P");
    ColumnLaw c;
    c.m = m;
    c.mu = m - engine.prime_pi(m);
    if (m >= 2) {
        const double x = static_cast<double>(m);
        const double integral = m == 2 ? 0.0 : numeric::log_integral(x).value - numeric::log_integral(2.0).value;
        c.mu_asymptotic = x - integral;
        c.relative_deviation = (*c.mu_asymptotic - static_cast<double>(c.mu)) / static_cast<double>(c.mu);
    }
    return c;
}

ScanReport conjecture3_scan(const std::vector<seq::Ray>& rays) {
    ScanReport r;
    for (const auto& ray : rays) {
        for (std::uint32_t n = 1; n < ray.depth(); ++n) {
            ScanPoint p;
            p.m = ray.generator;
            p.n = n;
            p.value = ray.elements[n - 1];
            p.next = ray.elements[n];
            const double x = static_cast<double>(p.next);
            p.log_integral = numeric::log_integral(x).value;
            p.ratio = std::abs(p.log_integral - static_cast<double>(p.value)) / (std::sqrt(x) * std::log(x));
            if (p.ratio > r.max_ratio) {
                r.max_ratio = p.ratio;
                r.argmax_m = p.m;
                r.argmax_n = p.n;
            }
            r.points.push_back(p);
        }
    }
    return r;
}

}  // namespace primeweb::laws
