#pragma once

#include <cstdint>
#include <vector>

#include "primeweb/sequences/ray.hpp"

namespace primeweb::laws {

// d_m(n) = p_{n+1}(m) − p_n(m) against the lower estimate p_n(m)(ln p_n(m) − 1).
struct GapCheck {
    std::uint64_t m = 0;
    std::uint32_t n = 0;
    std::uint64_t value = 0;  // p_n(m)
    std::uint64_t next = 0;   // p_{n+1}(m)
    double gap = 0.0;
    double estimate = 0.0;
    double margin() const { return gap - estimate; }
    bool holds() const { return gap > estimate; }
};

// Needs depths n and n+1 on the ray; throws RangeError otherwise.
GapCheck gap_bound_check(const seq::Ray& ray, std::uint32_t n);
std::vector<GapCheck> gap_bound_scan(const seq::Ray& ray);

// Partial sum Σ_{k<=terms} p_k(m)^{-s} with a rigorous bound on the rest.
// Since p(a) > a ln a for every a >= 1, each further ray element exceeds the
// previous one by a factor of at least λ = ln p_K, so the tail is at most
// p_K^{-s} / (λ^s − 1) once λ > 1.
struct EtaPartial {
    double value = 0.0;
    double tail_bound = 0.0;  // +inf when the last term is too small for the bound
    std::size_t terms = 0;
    std::vector<double> partial_sums;
    std::vector<double> term_ratios;  // term(k+1)/term(k)
};

EtaPartial eta_partial(const seq::Ray& ray, double s, std::size_t terms);

// Geometric tail bound Σ_{j>=1} (p λ^j)^{-s}, λ = ln p; +inf for p < 3.
double ray_tail_bound(double last_value, double s);

}  // namespace primeweb::laws
