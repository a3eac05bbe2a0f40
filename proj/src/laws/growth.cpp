#include "primeweb/laws/growth.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "primeweb/errors.hpp"

namespace primeweb::laws {

GapCheck gap_bound_check(const seq::Ray& ray, std::uint32_t n) {
    if (n == 0 || n + 1 > ray.depth())
        throw RangeError("gap check needs depths " + std::to_string(n) + " and " + std::to_string(n + 1) +
                         " on the ray of " + std::to_string(ray.generator));
    GapCheck g;
    g.m = ray.generator;
    g.n = n;
    g.value = ray.elements[n - 1];
    g.next = ray.elements[n];
    const double p = static_cast<double>(g.value);
    g.gap = static_cast<double>(g.next - g.value);
    g.estimate = p * (std::log(p) - 1.0);
    return g;
}

std::vector<GapCheck> gap_bound_scan(const seq::Ray& ray) {
    std::vector<GapCheck> out;
    for (std::uint32_t n = 1; n + 1 <= ray.depth(); ++n) out.push_back(gap_bound_check(ray, n));
    return out;
}

double ray_tail_bound(double last_value, double s) {
    const double lambda = std::log(last_value);
    if (last_value < 3.0 || !(lambda > 1.0)) return std::numeric_limits<double>::infinity();
    return std::pow(last_value, -s) / (std::pow(lambda, s) - 1.0);
}

EtaPartial eta_partial(const seq::Ray& ray, double s, std::size_t terms) {
    if (!(s >= 1.0)) throw DomainError("eta_partial needs s >= 1");
    if (terms == 0 || terms > ray.depth())
        throw RangeError("eta_partial: " + std::to_string(terms) + " terms requested, ray has " +
                         std::to_string(ray.depth()));
    EtaPartial e;
    e.terms = terms;
    double prev = 0.0;
    for (std::size_t k = 0; k < terms; ++k) {
        const double term = std::pow(static_cast<double>(ray.elements[k]), -s);
        e.value += term;
        e.partial_sums.push_back(e.value);
        if (k > 0) e.term_ratios.push_back(term / prev);
        prev = term;
    }
    e.tail_bound = ray_tail_bound(static_cast<double>(ray.elements[terms - 1]), s);
    return e;
}

}  // namespace primeweb::laws
