#include "primeweb/numeric/roots.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>

#include "primeweb/errors.hpp"

namespace primeweb::numeric {

std::vector<Bracket> sign_change_brackets(const ScalarFunction& f, double lo, double hi, double step) {
    std::vector<Bracket> out;
    if (!(step > 0.0) || !(hi > lo)) return out;
    const auto cells = static_cast<std::int64_t>(std::ceil((hi - lo) / step));
    double x0 = lo;
    double f0 = f(x0);
    for (std::int64_t i = 1; i <= cells; ++i) {
        const double x1 = (i == cells) ? hi : lo + static_cast<double>(i) * step;
        const double f1 = f(x1);
        if (std::isfinite(f0) && std::isfinite(f1)) {
            if (f0 == 0.0 && i == 1) out.push_back({x0, x0});
            if (f1 == 0.0 || (f0 < 0.0) != (f1 < 0.0)) {
                if (f0 != 0.0) out.push_back({x0, x1});
            }
        }
        x0 = x1;
        f0 = f1;
    }
    return out;
}

double bisect_root(const ScalarFunction& f, Bracket b, double x_tolerance) {
    if (b.lo == b.hi) return b.lo;
    double flo = f(b.lo);
    const double fhi = f(b.hi);
    if (flo == 0.0) return b.lo;
    if (fhi == 0.0) return b.hi;
    if ((flo < 0.0) == (fhi < 0.0)) throw NumericalError("bisect_root: bracket has no sign change");
    double lo = b.lo;
    double hi = b.hi;
    while (hi - lo > x_tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double solve_bracketed(const ScalarFunction& f, Bracket b, double x_tolerance, unsigned max_iterations) {
    const double flo = f(b.lo);
    const double fhi = f(b.hi);
    if (flo == 0.0) return b.lo;
    if (fhi == 0.0) return b.hi;
    if ((flo < 0.0) == (fhi < 0.0)) throw NumericalError("solve_bracketed: bracket has no sign change");
    std::uintmax_t iters = max_iterations;
    auto tol = [x_tolerance](double a, double c) { return std::abs(c - a) <= x_tolerance; };
    const auto r = boost::math::tools::toms748_solve(f, b.lo, b.hi, flo, fhi, tol, iters);
    if (iters >= max_iterations) throw NumericalError("solve_bracketed: iteration limit reached");
    return 0.5 * (r.first + r.second);
}

double golden_minimize(const ScalarFunction& f, double lo, double hi, double x_tolerance) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > x_tolerance) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace primeweb::numeric
