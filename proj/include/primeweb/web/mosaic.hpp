#pragma once

#include <cstdint>
#include <vector>

#include "primeweb/engine/prime_indexer.hpp"
#include "primeweb/geometry/log_spiral.hpp"
#include "primeweb/web/trapezoid.hpp"
#include "primeweb/web/web.hpp"

namespace primeweb::web {

// The closed region between the spiral arc (p(k⁰+1), p₁(k⁰+1)) and the chord
// of the initial ray joining its ends. `contained` lists the placed primes
// strictly inside (primes on the arc are boundary points).
struct MitosRegion {
    std::uint64_t arc_start = 0, arc_end = 0;
    std::vector<geo::PlanePoint> boundary;  // arc samples; the chord closes the polygon
    std::vector<std::uint64_t> skipped;     // p(1..k⁰)
    std::vector<std::uint64_t> contained;

    bool exact() const { return contained == skipped; }
};

MitosRegion mitos_region(const Web& web, const engine::PrimeIndexer& engine, std::size_t samples = 4000);

// Mosaic structure of a web in index space. For every rotation strip ν the
// elementary trapezoids z(ν, μ, 1, 1) whose four corners are ray primes of
// the web are "complete"; an incomplete trapezoid followed by a complete one
// in the same strip is a gap. Every ray prime must be a corner of a complete
// trapezoid (rotations that are only partly drawn therefore show up as
// uncovered primes), and every complete 3RET z(1, μ, 1, 2) must decompose
// into elementary trapezoids that tile it exactly.
struct MosaicReport {
    std::size_t strips = 0;
    std::size_t elementary = 0;  // complete elementary trapezoids
    std::vector<std::uint64_t> uncovered;
    std::vector<Trapezoid> gaps;
    bool tiling_exact = true;  // consecutive, non-overlapping inner and outer index intervals
    std::size_t three_ret_checked = 0;
    bool three_ret_exact = true;
    bool mitos_exact = true;

    bool passed() const { return uncovered.empty() && gaps.empty() && tiling_exact && three_ret_exact && mitos_exact; }
};

MosaicReport mosaic_check(const Web& web, const engine::PrimeIndexer& engine);

}  // namespace primeweb::web
