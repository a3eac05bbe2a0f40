#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "primeweb/engine/prime_indexer.hpp"
#include "primeweb/sequences/ray.hpp"

namespace primeweb::laws {

enum class Predictor { L, R };
std::string_view predictor_name(Predictor p);
Predictor parse_predictor(std::string_view tag);  // throws DomainError

// The next ray element estimated as the root x of L(x) = p_n(m) (or
// R(x) = p_n(m)), compared with the true p_{n+1}(m) when it is materialized.
struct Prediction {
    std::uint64_t m = 0;
    std::uint32_t n = 0;
    Predictor method = Predictor::L;
    std::uint64_t target = 0;  // p_n(m)
    double root = 0.0;
    double residual = 0.0;     // method(root) − target
    std::optional<std::uint64_t> actual;
    std::optional<double> relative_error;  // (root − actual)/actual
};

// Throws NumericalError when no bracket is found, RangeError when depth n is
// not on the ray.
Prediction predict_next(const seq::Ray& ray, std::uint32_t n, Predictor method);

// Root of L(x) = target (target >= 2) or R(x) = target.
double solve_log_integral(double target);
double solve_riemann_r(double target);

// Row index of generator m: exact μ = m − π(m) and the asymptotic
// μ̃ = m − ∫_2^m ds/ln s (defined for m >= 2).
struct ColumnLaw {
    std::uint64_t m = 0;
    std::uint64_t mu = 0;
    std::optional<double> mu_asymptotic;
    std::optional<double> relative_deviation;  // (μ̃ − μ)/μ
};

ColumnLaw column_distribution_law(const engine::PrimeIndexer& engine, std::uint64_t m);  // m prime → NotAMemberError

// |L(p_{n+1}(m)) − p_n(m)| / (√p_{n+1}(m) ln p_{n+1}(m)). Because
// π(p_{n+1}(m)) = p_n(m), this is |L − π| normalized at ray points.
struct ScanPoint {
    std::uint64_t m = 0;
    std::uint32_t n = 0;
    std::uint64_t value = 0;  // p_n(m)
    std::uint64_t next = 0;   // p_{n+1}(m)
    double log_integral = 0.0;
    double ratio = 0.0;
};

struct ScanReport {
    std::vector<ScanPoint> points;
    double max_ratio = 0.0;
    std::uint64_t argmax_m = 0;
    std::uint32_t argmax_n = 0;
};

ScanReport conjecture3_scan(const std::vector<seq::Ray>& rays);

}  // namespace primeweb::laws
