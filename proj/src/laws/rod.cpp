#include "primeweb/laws/rod.hpp"

#include <cmath>
#include <string>

// Boost 1.74 pchip calls isnan unqualified; <math.h> puts it in the global namespace.
#include <math.h>

#include <boost/math/interpolators/pchip.hpp>

#include "primeweb/errors.hpp"

namespace primeweb::laws {

namespace {

using Pchip = boost::math::interpolators::pchip<std::vector<double>>;

void check_domain(double x) {
    if (!(x > std::exp(1.0))) throw DomainError("pbar needs x > e, got " + std::to_string(x));
}

}  // namespace

double pbar(double x) {
    check_domain(x);
    const double l = std::log(x), ll = std::log(l);
    return x * (l + ll + (ll - 2.0) / l - (ll * ll / 2.0 - 3.0 * ll + 5.5) / (l * l) - 1.0);
}

double pbar_derivative(double x) {
    check_domain(x);
    const double l = std::log(x), ll = std::log(l);
    const double h = ll * ll / 2.0 - 3.0 * ll + 5.5;
    const double g = l + ll + (ll - 2.0) / l - h / (l * l) - 1.0;
    const double x_dg = 1.0 + 1.0 / l + (3.0 - ll) / (l * l) - (ll - 3.0) / (l * l * l) + 2.0 * h / (l * l * l);
    return g + x_dg;
}

struct RodSpline::Impl {
    Pchip low;    // p(n) on [1, n0]
    Pchip ratio;  // p(n)/p̄(n) on [n0, limit]
};

RodSpline::RodSpline(const engine::PrimeIndexer& engine, std::uint32_t limit, std::uint32_t junction)
    : limit_(limit), junction_(junction) {
    if (junction < 8) throw DomainError("rod junction must be at least 8 (p̄ is not positive below)");
    if (limit < junction + 3) throw DomainError("rod limit must exceed the junction by at least 3");
    std::vector<std::uint64_t> idx(limit);
    for (std::uint32_t k = 0; k < limit; ++k) idx[k] = k + 1;
    const auto primes = engine.nth_primes(idx);

    std::vector<double> xs, ys;
    for (std::uint32_t n = junction; n <= limit; ++n) {
        xs.push_back(n);
        ys.push_back(static_cast<double>(primes[n - 1]) / pbar(n));
    }
    Pchip ratio(std::move(xs), std::move(ys));
    const double n0 = junction;
    const double slope = ratio.prime(n0) * pbar(n0) + ratio(n0) * pbar_derivative(n0);

    std::vector<double> lx, ly;
    for (std::uint32_t n = 1; n <= junction; ++n) {
        lx.push_back(n);
        ly.push_back(static_cast<double>(primes[n - 1]));
    }
    Pchip low(std::move(lx), std::move(ly), std::numeric_limits<double>::quiet_NaN(), slope);
    impl_ = std::make_shared<const Impl>(Impl{std::move(low), std::move(ratio)});
}

double RodSpline::operator()(double x) const {
    if (!(x >= 1.0 && x <= limit_)) throw DomainError("rod spline evaluated outside [1, limit]");
    if (x <= junction_) return impl_->low(x);
    return impl_->ratio(x) * pbar(x);
}

double RodSpline::derivative(double x) const {
    if (!(x >= 1.0 && x <= limit_)) throw DomainError("rod spline evaluated outside [1, limit]");
    if (x <= junction_) return impl_->low.prime(x);
    return impl_->ratio.prime(x) * pbar(x) + impl_->ratio(x) * pbar_derivative(x);
}

}  // namespace primeweb::laws
