#include "primeweb/laws/distribution.hpp"

#include <cmath>

#include <fmt/format.h>

#include "primeweb/errors.hpp"
#include "primeweb/numeric/quadrature.hpp"

namespace primeweb::laws {

std::uint64_t ray_law_alpha(std::uint64_t m) {
    if (m == 1) return 11;
    if (m == 4) return 7;
    return m;
}

double ray_law_integral(double a, double b) {
    if (!(a > std::exp(1.0))) throw DomainError("ray law integral needs a lower limit above e");
    if (b < a) throw DomainError("ray law integral needs b >= a");
    if (b == a) return 0.0;
    numeric::QuadratureSpec spec;
    spec.abs_tolerance = 1e-11;
    spec.rel_tolerance = 1e-12;
    return numeric::integrate([](double t) { return 1.0 / std::log(t); }, std::log(a), std::log(b), spec).value;
}

RayLawPoint ray_distribution_law(const seq::Ray& ray, std::uint32_t n) {
    if (n == 0 || n > ray.depth())
        throw RangeError(fmt::format("depth {} not on the ray of {}", n, ray.generator));
    RayLawPoint p;
    p.m = ray.generator;
    p.n = n;
    p.value = ray.elements[n - 1];
    p.alpha = ray_law_alpha(p.m);
    if (p.value <= p.alpha)
        throw DomainError(fmt::format("ray {} depth {}: value {} does not exceed alpha {}", p.m, n, p.value, p.alpha));
    for (std::uint32_t k = 0; k < n; ++k) p.count += ray.elements[k] > p.alpha;
    p.integral = ray_law_integral(static_cast<double>(p.alpha), static_cast<double>(p.value));
    p.epsilon = static_cast<double>(p.count) - p.integral;
    return p;
}

LawReport ray_law_report(const std::vector<seq::Ray>& rays, RayLawThresholds thresholds) {
    LawReport r;
    r.law = "ray distribution law";
    r.note = fmt::format(
        "epsilon = #(ray elements in (alpha, p_n]) - integral; alpha = 11 (ray 1), 7 (ray 4), m otherwise; "
        "threshold {} for depth <= {}, {} beyond",
        thresholds.small_threshold, thresholds.small_depth_max, thresholds.large_threshold);
    for (const auto& ray : rays) {
        const auto alpha = ray_law_alpha(ray.generator);
        for (std::uint32_t n = 1; n <= ray.depth(); ++n) {
            if (ray.elements[n - 1] <= alpha) continue;
            const auto p = ray_distribution_law(ray, n);
            LawPoint lp;
            lp.m = p.m;
            lp.n = p.n;
            lp.value = p.value;
            lp.predicted = p.integral;
            lp.residual = p.epsilon;
            lp.threshold = n <= thresholds.small_depth_max ? thresholds.small_threshold : thresholds.large_threshold;
            r.points.push_back(lp);
        }
    }
    return r;
}

std::string ray_law_csv(const seq::Ray& ray) {
    std::string out = "n,value,integral,count,epsilon\r\n";
    const auto alpha = ray_law_alpha(ray.generator);
    for (std::uint32_t n = 1; n <= ray.depth(); ++n) {
        if (ray.elements[n - 1] <= alpha) continue;
        const auto p = ray_distribution_law(ray, n);
        out += fmt::format("{},{},{:.12g},{},{:.12g}\r\n", p.n, p.value, p.integral, p.count, p.epsilon);
    }
    return out;
}

}  // namespace primeweb::laws
