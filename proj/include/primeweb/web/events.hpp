#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "primeweb/engine/prime_indexer.hpp"
#include "primeweb/sequences/filter_set.hpp"
#include "primeweb/sequences/twins.hpp"
#include "primeweb/web/trapezoid.hpp"
#include "primeweb/web/web.hpp"

namespace primeweb::web {

// New ray starts on rotation `rotation`. For rotation 1 they are the initial
// starts; otherwise they are the primes p(j), a < j < b, between the images
// of two consecutive primes a < b of the previous rotation (a cluster), and
// their number is α = b − a − 1.
struct RayStartEvent {
    std::uint32_t rotation = 0;
    std::uint64_t source_lo = 0, source_hi = 0;  // (a, b); zero for rotation 1
    std::vector<std::uint64_t> starts;
    std::size_t placed = 0;  // starts that begin a drawn ray of the web
};

RayStartEvent ray_starts_between(const engine::PrimeIndexer& engine, std::uint64_t a, std::uint64_t b);

// Events for every pair of consecutive ray primes of the web whose images are
// within the web's range, preceded by the rotation-1 event.
std::vector<RayStartEvent> ray_start_events(const Web& web, const engine::PrimeIndexer& engine);

// A twin pair seen on the web. u-twins start two rays and cause the mid ray
// ℓ_{p(t1+1)} on the next rotation; b-twins sew the trapezoid
// [(t1, t2), (p(t1), p(t2))] to the right (t1 on an existing ray) or left
// (t2 on an existing ray) of the anchor ray.
struct TwinEvent {
    std::uint64_t t1 = 0, t2 = 0;
    seq::TwinClass cls = seq::TwinClass::uncovered;
    std::uint32_t rotation = 0;
    std::uint64_t mid_ray = 0;
    std::optional<std::uint64_t> anchor;  // b-twins: start of the existing ray
    std::uint32_t anchor_depth = 0;       // q with the on-ray twin = p_q(anchor)
    std::array<std::uint64_t, 2> images{0, 0};  // (p(t1), p(t2))

    std::string_view side() const;  // "right", "left" or ""
};

// One event per twin pair with both members on drawn rays of the web.
std::vector<TwinEvent> twin_events(const Web& web, const engine::PrimeIndexer& engine);

// The event of a single twin pair (t1, t1 + 2), independent of any web.
TwinEvent twin_event(const engine::PrimeIndexer& engine, std::uint32_t k0, std::uint64_t t1);

// π(p_ν(m)) = p_{ν−1}(m), and when a web is given, the arc length at the
// point of p_{ν−1}(m) equals p_{ν−1}(m).
struct PiCheck {
    std::uint64_t m = 0;
    std::uint32_t nu = 0;
    std::uint64_t value = 0;     // p_ν(m)
    std::uint64_t previous = 0;  // p_{ν−1}(m) (m itself for ν = 1)
    std::uint64_t pi_value = 0;  // π(p_ν(m))
    std::optional<double> arc;   // λ(0, θ) at the previous element's point
    bool holds = false;
};

PiCheck pi_geometric_check(const seq::FilterSet& primes, std::uint64_t m, std::uint32_t nu,
                           const Web* web = nullptr);

}  // namespace primeweb::web
