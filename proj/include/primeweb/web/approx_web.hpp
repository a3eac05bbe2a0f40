#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primeweb/sequences/filter_set.hpp"
#include "primeweb/web/web.hpp"

namespace primeweb::web {

// `count` elements (from the truncated start) of every generator in
// [first, last].
struct RayQuota {
    std::uint64_t first = 1;
    std::uint64_t last = 1;
    std::size_t count = 0;
};

struct SolverSettings {
    double damping = 0.5;
    unsigned max_iterations = 100;
    double exact_tolerance = 1e-9;  // |angle residual| for an exact segment
    double alpha_min = 1e-3;  // fallback scan range for α
    double alpha_max = 50.0;
    std::size_t scan_points = 4000;
    double max_turn = 4 * 6.283185307179586;  // no segment winds more than this
};

struct ApproxWebSpec {
    std::string name;
    double phi_degrees = 74.18896;
    double pure_turns = 2.0;  // the spiral is pure logarithmic up to θ = 2π·pure_turns
    std::uint32_t k0 = 11;
    std::uint32_t rotations = 3;
    int orientation = 1;
    std::vector<RayQuota> quotas;
    SolverSettings solver;
};

// Preset compositions: W̃₃ (3·20 + 2·5 + 2·71 ray elements), W̃₄ (one more
// element on every W̃₃ ray), Ŵ₃ (3·25 + 2·90) and the degenerate web (W̃₃'s
// primes, consecutive ray chords alternating direction).
ApproxWebSpec w3_tilde_spec();
ApproxWebSpec w4_tilde_spec();
ApproxWebSpec w3_hat_spec();
ApproxWebSpec degenerate_spec();

// Places the selected ray elements (plus the k⁰ skipped primes) on a spiral
// that is pure logarithmic for the first turns and then grows one LSS
// segment per ray-constrained prime. A prime is constrained when two earlier
// elements of its ray are already placed; its segment (α, θ, β) solves
//   exponent continuity at the previous knot,
//   arc length over the segment = gap to the previous knot value,
//   signed angle between the new chord and the ray direction = 0,
// by damped Newton from the previous segment, falling back to a scan over α
// with bisection and finally golden-section least squares. A segment is
// exact when its angle residual is <= exact_tolerance, approximate when only
// the least-squares fallback produced it (the residual is recorded), and
// failed when no admissible slope exists at all.
Web build_web(const seq::FilterSet& primes, const ApproxWebSpec& spec);

// target_rotations ∈ {3, 4}; throws DomainError otherwise.
Web build_approx_web(const seq::FilterSet& primes, std::uint32_t target_rotations);
Web build_degenerate_web(const seq::FilterSet& primes);

// Number of primes on rays (the composition size) of a spec.
std::size_t composition_size(const seq::FilterSet& primes, const ApproxWebSpec& spec);

}  // namespace primeweb::web
