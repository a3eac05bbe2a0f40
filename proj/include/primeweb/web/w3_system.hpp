#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "primeweb/sequences/filter_set.hpp"
#include "primeweb/web/web.hpp"

namespace primeweb::web {

// Segment i of the unknown spline spiral ends at prime q_i (i = 1..n):
// unknowns αᵢ, θᵢ, βᵢ with θ₀ = 0.
struct W3Segment {
    std::size_t index = 0;  // 1-based
    std::uint64_t prime = 0;
    std::uint64_t generator = 0;
    std::uint32_t depth = 0;  // depth on the full ray
    friend bool operator==(const W3Segment&, const W3Segment&) = default;
};

// Prescribed ray line a·u + b·v = c with (a, b) a unit normal.
struct RayLine {
    std::uint64_t generator = 0;
    double a = 0.0, b = 0.0, c = 0.0;
    friend bool operator==(const RayLine&, const RayLine&) = default;
};

enum class EquationKind { start_exponent, continuity, arc_length, on_ray };
std::string_view equation_kind_name(EquationKind k);

// start_exponent: β₁ = 0
// continuity i:   αᵢθᵢ + βᵢ − αᵢ₊₁θᵢ − βᵢ₊₁ = 0
// arc_length i:   √(1 + 1/αᵢ²) e^{βᵢ} (e^{αᵢθᵢ} − e^{αᵢθᵢ₋₁}) = rhs (= qᵢ − qᵢ₋₁)
// on_ray i:       e^{αᵢθᵢ+βᵢ} (a cos θᵢ + b sin θᵢ) = c for the line of its ray
struct W3Equation {
    EquationKind kind = EquationKind::start_exponent;
    std::size_t segment = 0;
    double rhs = 0.0;
    std::uint64_t generator = 0;  // on_ray only
    friend bool operator==(const W3Equation&, const W3Equation&) = default;
};

// Ray separation: the start of ray `other` stays on the side `sign` of the
// line of ray `ray`: sign·(a u + b v − c) >= margin, with (u, v) the point of
// segment `segment`.
struct W3Inequality {
    std::uint64_t ray = 0, other = 0;
    std::size_t segment = 0;
    int sign = 1;
    double margin = 0.0;
    friend bool operator==(const W3Inequality&, const W3Inequality&) = default;
};

struct W3Unknowns {
    std::vector<double> alpha, theta, beta;  // 1-based data stored at [i − 1]
    friend bool operator==(const W3Unknowns&, const W3Unknowns&) = default;
};

struct W3System {
    std::uint32_t k0 = 0;
    std::vector<W3Segment> segments;
    std::vector<RayLine> lines;
    std::vector<W3Equation> equations;
    std::vector<W3Inequality> inequalities;
    W3Unknowns initial;  // guess taken from the initial-approximation web

    std::size_t unknowns() const { return 3 * segments.size(); }
    const RayLine& line(std::uint64_t generator) const;  // throws RangeError

    std::vector<double> equation_residuals(const W3Unknowns& x) const;
    std::vector<double> inequality_values(const W3Unknowns& x) const;  // >= 0 when satisfied

    friend bool operator==(const W3System&, const W3System&) = default;
};

// Segments end at the first three truncated elements of the first 25 rays
// plus the fourth element of the initial ray r_{k⁰+1} (76 for k⁰ = 11).
// Lines are prescribed by the first two points of every ray on `approx`
// (normally Ŵ₃); inequalities separate every pair of the 25 rays; the
// initial guess interpolates ln ρ between the points of `approx`.
W3System assemble_w3_system(const seq::FilterSet& primes, const Web& approx, std::uint32_t k0 = 11,
                            double margin = 1e-6);
W3System assemble_w3_system(const seq::FilterSet& primes, std::uint32_t k0 = 11);

// Text optimisation model (AMPL syntax) and its reader; the reader accepts
// exactly what the writer produces and rebuilds an identical system.
std::string export_model(const W3System& system);
W3System parse_model(std::string_view text);  // throws DomainError on malformed input

}  // namespace primeweb::web
