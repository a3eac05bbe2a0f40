#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primeweb/laws/law_report.hpp"
#include "primeweb/sequences/ray.hpp"

namespace primeweb::laws {

// Ray distribution law: I = ∫_α^{p_n(m)} ds/(s ln ln s) approximates the
// number of ray elements in (α, p_n(m)], with α = 11 on the ray of 1, α = 7 on
// the ray of 4 and α = m otherwise. ε = count − I. (Read as "n = I + ε" the
// law would miss by the number of elements <= α on rays 1 and 4.)
struct RayLawPoint {
    std::uint64_t m = 0;
    std::uint32_t n = 0;
    std::uint64_t value = 0;
    std::uint64_t alpha = 0;
    std::uint32_t count = 0;  // ray elements at depths 1..n exceeding α
    double integral = 0.0;
    double epsilon = 0.0;
};

std::uint64_t ray_law_alpha(std::uint64_t m);

// ∫_a^b ds/(s ln ln s) = ∫_{ln a}^{ln b} dt/ln t, for e < a <= b.
double ray_law_integral(double a, double b);

// Throws RangeError when depth n is not on the ray and DomainError when
// p_n(m) <= α (the law only speaks about elements beyond α).
RayLawPoint ray_distribution_law(const seq::Ray& ray, std::uint32_t n);

// Every point of every ray with p_n(m) > α. Depths <= small_depth_max use
// small_threshold, deeper points use large_threshold.
struct RayLawThresholds {
    double small_threshold = 0.2;
    double large_threshold = 0.06;
    std::uint32_t small_depth_max = 3;
};

LawReport ray_law_report(const std::vector<seq::Ray>& rays, RayLawThresholds thresholds = {});

// CSV of the law along one ray: header "n,value,integral,count,epsilon".
std::string ray_law_csv(const seq::Ray& ray);

}  // namespace primeweb::laws
