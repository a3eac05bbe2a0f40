#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "primeweb/engine/prime_indexer.hpp"

namespace primeweb::laws {

// Asymptotic nth-prime approximation used as the rod:
//   p̄(x) = x (ln x + ln ln x + (ln ln x − 2)/ln x
//             − ((ln ln x)²/2 − 3 ln ln x + 5.5)/(ln x)² − 1)
// Defined for x > e; throws DomainError otherwise. Negative below x ≈ 7.1.
double pbar(double x);
double pbar_derivative(double x);

// C¹ interpolant p̃ with p̃(n) = p(n) at n = 1..limit (up to rounding).
// Above the junction n0 it is s₂(x)·p̄(x), s₂ a monotone-preserving cubic
// Hermite interpolant of p(n)/p̄(n); at and below n0, where p̄ is small or
// negative, p(n) itself is interpolated, with the junction slope matched so
// the derivative is continuous.
class RodSpline {
public:
    RodSpline(const engine::PrimeIndexer& engine, std::uint32_t limit = 1229, std::uint32_t junction = 10);

    double operator()(double x) const;  // domain [1, limit]
    double derivative(double x) const;
    std::uint32_t limit() const { return limit_; }
    std::uint32_t junction() const { return junction_; }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    std::uint32_t limit_;
    std::uint32_t junction_;
};

}  // namespace primeweb::laws
