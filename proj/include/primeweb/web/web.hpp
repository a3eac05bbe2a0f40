#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primeweb/geometry/spline_spiral.hpp"
#include "primeweb/sequences/filter_set.hpp"

namespace primeweb::web {

// How a placed prime got its position: on a spiral part with no ray
// constraint, at the end of a segment whose ray condition was solved exactly
// or only approximately, or at the end of a segment the solver gave up on.
enum class Placement { spiral, exact, approximate, failed };

std::string_view placement_name(Placement p);

struct WebPoint {
    std::uint64_t prime = 0;
    std::uint64_t generator = 0;  // 0 for primes on no drawn ray
    std::uint32_t depth = 0;      // depth on the full (untruncated) ray
    geo::PlanePoint point;
    Placement placement = Placement::spiral;
    double residual = 0.0;  // signed angle residual of its ray condition (rad)
};

struct WebRay {
    std::uint64_t generator = 0;
    std::vector<std::uint64_t> primes;  // placed elements, ascending
};

// One LSS segment e^{αθ+β} on [θ_prev, θ] ending at a ray-constrained prime.
struct SegmentSolve {
    std::uint64_t prime = 0;
    std::uint64_t generator = 0;
    std::uint32_t depth = 0;
    double alpha = 0.0, theta = 0.0, beta = 0.0;
    double residual = 0.0;  // signed angle residual of the ray condition (rad)
    unsigned newton_iterations = 0;
    bool newton_converged = false;
    Placement status = Placement::failed;
};

// A prime spider web: a spiral carrying primes at arc length = value and the
// rays drawn through same-generator primes.
struct Web {
    explicit Web(geo::SplineSpiral s) : spiral(std::move(s)) {}

    std::string name;
    geo::SplineSpiral spiral;
    double phi = 0.0;            // pitch of the initial pure logarithmic part (rad)
    std::uint32_t skipped = 0;   // k⁰: primes p(1..k⁰) are on no ray condition
    std::uint32_t rotations = 0; // nominal rotation count
    int orientation = 1;         // +1 straight rays, −1 alternating directions
    std::map<std::uint64_t, WebPoint> points;
    std::map<std::uint64_t, WebRay> rays;
    std::vector<SegmentSolve> solves;

    std::size_t count(Placement p) const;  // solves with this status
    std::vector<std::uint64_t> ray_primes() const;  // every ray element, ascending
    bool on_ray(std::uint64_t prime) const;
    const WebPoint& at(std::uint64_t prime) const;  // throws RangeError
    std::uint64_t max_prime() const;  // 0 for an empty web
};

// Rays of the first `count` generators with their elements among the first
// k⁰ primes dropped: generator → first remaining element.
std::map<std::uint64_t, std::uint64_t> truncated_rays(const seq::FilterSet& primes, std::uint32_t k0,
                                                      std::size_t count = 25);

// Pure logarithmic web: every prime up to the end of `rotations` turns of
// ρ = e^{θ cot φ} placed by arc length, rays drawn through the untruncated
// elements of the given generators (generally bent polylines).
Web build_pure_log_web(const seq::FilterSet& primes, double phi, std::uint32_t rotations,
                       const std::vector<std::uint64_t>& generators);

// ---- verification passes over a finished web -------------------------------

struct IsometryReport {
    std::size_t points = 0;
    double max_relative_error = 0.0;  // |λ(0, θ_p) − p| / p
    std::uint64_t worst_prime = 0;
    bool holds(double tolerance = 1e-9) const { return max_relative_error <= tolerance; }
};
IsometryReport check_isometry(const Web& web);

// Chord deviations of a ray: the angle between each chord p_{k−1}→p_k and
// the first chord (reversed on alternate chords when orientation is −1).
struct RayStraightness {
    std::uint64_t generator = 0;
    std::size_t points = 0;
    double exact_spread = 0.0;   // over chords ending at spiral/exact placements
    double worst_residual = 0.0; // over every chord
    std::size_t approximate = 0;
    std::size_t failed = 0;
};

struct StraightnessReport {
    std::vector<RayStraightness> rays;
    double max_exact_spread = 0.0;
    double max_approximate_residual = 0.0;
    std::size_t approximate_points = 0;
    std::size_t failed_points = 0;
    bool holds(double exact_tolerance = 1e-9, double approximate_tolerance = 1e-3) const;
};
StraightnessReport check_straightness(const Web& web);

// Rays as directed lines: smallest angular separation of the first-chord
// directions between two rays, modulo π (parallel lines count as equal).
struct InjectivityReport {
    std::size_t rays = 0;
    double min_separation = 0.0;
    std::pair<std::uint64_t, std::uint64_t> closest{0, 0};
    bool holds(double tolerance = 1e-6) const { return rays < 2 || min_separation > tolerance; }
};
InjectivityReport check_angular_injectivity(const Web& web);

// Segment-vs-segment intersections between distinct ray polylines within the
// drawn range.
struct CrossingReport {
    std::size_t pairs_checked = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> crossing_pairs;
    std::size_t crossings() const { return crossing_pairs.size(); }
};
CrossingReport check_crossings(const Web& web);

// Signed angle (rad, in (−π, π]) turning direction a into direction b.
double signed_angle(double ax, double ay, double bx, double by);

}  // namespace primeweb::web
