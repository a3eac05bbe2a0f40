#include "primeweb/web/mosaic.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace primeweb::web {

namespace {

// Even–odd rule on a closed polygon.
bool inside(const std::vector<geo::PlanePoint>& poly, double x, double y) {
    bool in = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const auto& a = poly[i];
        const auto& b = poly[j];
        if ((a.v > y) != (b.v > y)) {
            const double cross = a.u + (y - a.v) * (b.u - a.u) / (b.v - a.v);
            if (x < cross) in = !in;
        }
    }
    return in;
}

}  // namespace

MitosRegion mitos_region(const Web& web, const engine::PrimeIndexer& engine, std::size_t samples) {
    MitosRegion r;
    const std::uint64_t m = std::uint64_t{web.skipped} + 1;
    r.arc_start = engine.nth_prime(m);
    r.arc_end = engine.nth_prime(r.arc_start);
    for (std::uint32_t i = 1; i <= web.skipped; ++i) r.skipped.push_back(engine.nth_prime(i));
    const double a = static_cast<double>(r.arc_start), b = static_cast<double>(r.arc_end);
    if (b > web.spiral.max_value()) return r;
    samples = std::max<std::size_t>(samples, 2);
    for (std::size_t i = 0; i <= samples; ++i)
        r.boundary.push_back(web.spiral.map(a + (b - a) * static_cast<double>(i) / static_cast<double>(samples)));
    for (const auto& [p, pt] : web.points) {
        if (p >= r.arc_start && p <= r.arc_end) continue;
        if (inside(r.boundary, pt.point.u, pt.point.v)) r.contained.push_back(p);
    }
    return r;
}

MosaicReport mosaic_check(const Web& web, const engine::PrimeIndexer& engine) {
    MosaicReport r;
    const auto primes = web.ray_primes();
    if (primes.empty()) return r;
    const std::set<std::uint64_t> on_ray(primes.begin(), primes.end());
    const auto placed = [&](std::uint64_t p) { return on_ray.count(p) != 0; };
    const RotationIndex index(engine, web.skipped);
    const std::uint64_t top = primes.back();

    std::set<std::uint64_t> covered;
    for (std::uint32_t nu = 1;; ++nu) {
        const std::uint64_t first = index.first_index(nu);
        if (engine.nth_prime(first) > top) break;
        ++r.strips;
        std::vector<Trapezoid> incomplete;
        std::uint64_t previous_outer = 0;  // prime index where the last complete outer edge ended
        std::uint64_t previous_inner = 0;
        for (std::uint64_t j = first; j < index.first_index(nu + 1); ++j) {
            Trapezoid t;
            t.nu = nu;
            t.mu = j - first + 1;
            t.k = 1;
            t.q = 1;
            t.inner = {engine.nth_prime(j), engine.nth_prime(j + 1)};
            if (t.inner[0] > top) break;
            t.outer = {engine.nth_prime(t.inner[0]), engine.nth_prime(t.inner[1])};
            const bool complete = placed(t.inner[0]) && placed(t.inner[1]) && placed(t.outer[0]) && placed(t.outer[1]);
            if (!complete) {
                incomplete.push_back(t);
                continue;
            }
            r.gaps.insert(r.gaps.end(), incomplete.begin(), incomplete.end());
            incomplete.clear();
            ++r.elementary;
            for (std::uint64_t c : {t.inner[0], t.inner[1], t.outer[0], t.outer[1]}) covered.insert(c);
            // inner edge [j, j+1] and outer edge [π(p(a)), π(p(b))] = [a, b]
            const std::uint64_t oa = engine.prime_index(t.outer[0]), ob = engine.prime_index(t.outer[1]);
            if (oa != t.inner[0] || ob != t.inner[1] || oa >= ob) r.tiling_exact = false;
            if (previous_inner != 0 && previous_inner == j && previous_outer != oa) r.tiling_exact = false;
            previous_inner = j + 1;
            previous_outer = ob;
        }
    }
    for (std::uint64_t p : primes)
        if (engine.prime_index(p) > web.skipped && covered.count(p) == 0) r.uncovered.push_back(p);

    for (std::uint64_t mu = 1; mu <= index.size(1); ++mu) {
        const Trapezoid t = trapezoid(index, 1, mu, 1, 2);
        if (!(placed(t.inner[0]) && placed(t.inner[1]) && placed(t.outer[0]) && placed(t.outer[1]))) continue;
        const auto pieces = decompose(index, t);
        bool all_placed = true;
        for (const auto& z : pieces)
            for (std::uint64_t c : {z.inner[0], z.inner[1], z.outer[0], z.outer[1]}) all_placed = all_placed && placed(c);
        ++r.three_ret_checked;
        if (!all_placed || !check_tiling(index, t, pieces).holds()) r.three_ret_exact = false;
    }
    if (web.skipped > 0) r.mitos_exact = mitos_region(web, engine).exact();
    return r;
}

}  // namespace primeweb::web
