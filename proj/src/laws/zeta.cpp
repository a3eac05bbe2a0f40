#include "primeweb/laws/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "primeweb/errors.hpp"
#include "primeweb/laws/growth.hpp"
#include "primeweb/numeric/exact_sum.hpp"
#include "primeweb/sequences/progressions.hpp"
#include "primeweb/sequences/ray.hpp"

namespace primeweb::laws {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Bound on Σ over all ray elements from `first` on (first included).
double tail_from(double first, double s) {
    const double rest = ray_tail_bound(first, s);
    return std::isfinite(rest) ? std::pow(first, -s) + rest : kInf;
}

// −ln(1 − p^{-s}), the logarithm of one Euler factor.
double log_factor(std::uint64_t p, double s) { return -std::log1p(-std::pow(static_cast<double>(p), -s)); }

std::size_t max_depth() { return 64; }

}  // namespace

bool ZetaRay::consistent() const { return std::abs(sum - product) <= std::max(sum_tail, product_tail) * (1 + 1e-12) + 1e-15; }

ZetaRay zeta_ray(const seq::FilterSet& primes, double s, std::uint64_t m, std::uint64_t bound) {
    if (primes.id() != seq::FamilyId::P) throw DomainError("zeta_ray is defined on the prime family");
    if (!(s > 1.0)) throw DomainError("zeta_ray needs s > 1");
    ZetaRay z;
    z.m = m;
    z.s = s;
    z.bound = bound;

    const auto ray = seq::extend_ray(primes, m, max_depth(), bound);
    z.primes = ray.depth();
    double log_product = 0.0, log_product_1 = 0.0;
    for (auto p : ray.elements) {
        log_product += log_factor(p, s);
        log_product_1 += log_factor(p, 1.0);
    }
    z.product = std::exp(log_product);

    const auto n_m = seq::multiplicative_set(primes, m, bound);
    z.sum_terms = n_m.size();
    double sum = 0.0;
    for (auto it = n_m.rbegin(); it != n_m.rend(); ++it) sum += std::pow(static_cast<double>(*it), -s);
    z.sum = 1.0 + sum;

    // first ray element beyond the bound
    double first_out = kInf;
    try {
        first_out = static_cast<double>(primes.nth(ray.depth() == 0 ? m : ray.elements.back()));
    } catch (const CapacityError&) {
        first_out = ray.depth() == 0 ? kInf : static_cast<double>(ray.elements.back()) * std::log(ray.elements.back());
    }
    if (std::isinf(first_out)) {
        z.sum_tail = z.product_tail = kInf;
        return z;
    }
    // ln(1/(1−u)) <= u/(1−u) with u <= first_out^{-s}
    const double tail_s = tail_from(first_out, s);
    const double tail_1 = tail_from(first_out, 1.0);
    z.product_tail = z.product * std::expm1(tail_s / (1.0 - std::pow(first_out, -s)));
    // Rankin: Σ_{n>B} n^{-s} <= B^{1−s} Σ_n n^{-1}, and the σ = 1 series is
    // the (convergent) ray product at s = 1.
    const double full_product_1 = std::exp(log_product_1 + tail_1 / (1.0 - 1.0 / first_out));
    z.sum_tail = std::pow(static_cast<double>(std::max<std::uint64_t>(bound, 1)), 1.0 - s) * full_product_1;
    return z;
}

ZetaGlobal zeta_global(const seq::FilterSet& primes, double s, std::uint64_t generator_bound,
                       std::uint64_t prime_bound) {
    if (primes.id() != seq::FamilyId::P) throw DomainError("zeta_global is defined on the prime family");
    if (!(s > 1.0)) throw DomainError("zeta_global needs s > 1");
    ZetaGlobal g;
    g.s = s;
    const auto& engine = primes.engine();

    // only generators m <= π(prime_bound) have a first element <= prime_bound
    const std::uint64_t last_gen = std::min(generator_bound, engine.prime_pi(prime_bound));
    numeric::ExactSum grouped;
    for (std::uint64_t m = 1; m <= last_gen; ++m) {
        if (!primes.is_generator(m)) continue;
        const auto ray = seq::extend_ray(primes, m, max_depth(), prime_bound);
        ++g.rays;
        for (auto p : ray.elements) grouped.add(log_factor(p, s));
    }
    g.primes = grouped.count();
    g.value = std::exp(grouped.value());

    numeric::ExactSum plain;
    engine.for_each_prime(2, prime_bound + 1, [&](std::uint64_t p) { plain.add(log_factor(p, s)); });
    g.euler_value = std::exp(plain.value());
    g.covers_all_primes = plain.count() == grouped.count();
    g.bit_equal = g.value == g.euler_value;

    if (g.covers_all_primes) {
        const double b = static_cast<double>(prime_bound);
        const double t = std::pow(b, 1.0 - s) / ((s - 1.0) * (1.0 - std::pow(b, -s)));
        g.truncation_bound = g.value * std::expm1(t);
    } else {
        g.truncation_bound = kInf;
    }
    return g;
}

}  // namespace primeweb::laws
