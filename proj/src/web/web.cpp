#include "primeweb/web/web.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "primeweb/errors.hpp"

namespace primeweb::web {

std::string_view placement_name(Placement p) {
    switch (p) {
        case Placement::spiral: return "spiral";
        case Placement::exact: return "exact";
        case Placement::approximate: return "approximate";
        case Placement::failed: return "failed";
    }
    return "unknown";
}

std::size_t Web::count(Placement p) const {
    return static_cast<std::size_t>(
        std::count_if(solves.begin(), solves.end(), [p](const SegmentSolve& s) { return s.status == p; }));
}

std::vector<std::uint64_t> Web::ray_primes() const {
    std::vector<std::uint64_t> out;
    for (const auto& [g, ray] : rays) out.insert(out.end(), ray.primes.begin(), ray.primes.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool Web::on_ray(std::uint64_t prime) const {
    const auto it = points.find(prime);
    return it != points.end() && it->second.generator != 0;
}

const WebPoint& Web::at(std::uint64_t prime) const {
    const auto it = points.find(prime);
    if (it == points.end()) throw RangeError("prime " + std::to_string(prime) + " is not placed on the web");
    return it->second;
}

std::uint64_t Web::max_prime() const { return points.empty() ? 0 : points.rbegin()->first; }

std::map<std::uint64_t, std::uint64_t> truncated_rays(const seq::FilterSet& primes, std::uint32_t k0,
                                                      std::size_t count) {
    const std::uint64_t cut = k0 == 0 ? 0 : primes.nth(k0);
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::uint64_t m : primes.generators(count)) {
        std::uint64_t e = primes.nth(m);
        while (e <= cut) e = primes.nth(e);
        out[m] = e;
    }
    return out;
}

Web build_pure_log_web(const seq::FilterSet& primes, double phi, std::uint32_t rotations,
                       const std::vector<std::uint64_t>& generators) {
    if (rotations == 0) throw DomainError("a pure logarithmic web needs at least one rotation");
    const geo::LogSpiral log(phi);
    Web web(geo::SplineSpiral::from_knots({2.0 * std::numbers::pi * rotations}, {log.cot_phi()}));
    web.name = "pure-log";
    web.phi = phi;
    web.rotations = rotations;
    const auto limit = static_cast<std::uint64_t>(std::floor(web.spiral.max_value()));
    for (std::uint64_t p : primes.engine().primes_in_range(2, limit + 1)) {
        WebPoint pt;
        pt.prime = p;
        pt.point = web.spiral.map(static_cast<double>(p));
        web.points[p] = pt;
    }
    for (std::uint64_t m : generators) {
        if (!primes.is_generator(m)) throw NotAMemberError(std::to_string(m) + " is not a ray generator");
        WebRay ray{m, {}};
        std::uint32_t depth = 1;
        for (std::uint64_t e = primes.nth(m); e <= limit; e = primes.nth(e), ++depth) {
            auto& pt = web.points.at(e);
            pt.generator = m;
            pt.depth = depth;
            ray.primes.push_back(e);
        }
        web.rays[m] = std::move(ray);
    }
    return web;
}

double signed_angle(double ax, double ay, double bx, double by) {
    return std::atan2(ax * by - ay * bx, ax * bx + ay * by);
}

IsometryReport check_isometry(const Web& web) {
    IsometryReport r;
    for (const auto& [p, pt] : web.points) {
        const double x = static_cast<double>(p);
        const double err = std::abs(web.spiral.arc_length(pt.point.theta) - x) / x;
        ++r.points;
        if (r.worst_prime == 0 || err > r.max_relative_error) {
            r.max_relative_error = err;
            r.worst_prime = p;
        }
    }
    return r;
}

bool StraightnessReport::holds(double exact_tolerance, double approximate_tolerance) const {
    return max_exact_spread <= exact_tolerance && max_approximate_residual <= approximate_tolerance &&
           failed_points == 0;
}

StraightnessReport check_straightness(const Web& web) {
    StraightnessReport r;
    for (const auto& [g, ray] : web.rays) {
        RayStraightness s;
        s.generator = g;
        s.points = ray.primes.size();
        if (ray.primes.size() >= 3) {
            const auto& p0 = web.at(ray.primes[0]).point;
            const auto& p1 = web.at(ray.primes[1]).point;
            const double dx = p1.u - p0.u, dy = p1.v - p0.v;
            double sign = 1.0;
            for (std::size_t k = 2; k < ray.primes.size(); ++k) {
                sign *= web.orientation;
                const auto& a = web.at(ray.primes[k - 1]).point;
                const auto& wp = web.at(ray.primes[k]);
                const double dev = std::abs(signed_angle(sign * dx, sign * dy, wp.point.u - a.u, wp.point.v - a.v));
                s.worst_residual = std::max(s.worst_residual, dev);
                switch (wp.placement) {
                    case Placement::spiral:
                    case Placement::exact: s.exact_spread = std::max(s.exact_spread, dev); break;
                    case Placement::approximate:
                        ++s.approximate;
                        r.max_approximate_residual = std::max(r.max_approximate_residual, dev);
                        break;
                    case Placement::failed: ++s.failed; break;
                }
            }
        }
        r.max_exact_spread = std::max(r.max_exact_spread, s.exact_spread);
        r.approximate_points += s.approximate;
        r.failed_points += s.failed;
        r.rays.push_back(s);
    }
    return r;
}

InjectivityReport check_angular_injectivity(const Web& web) {
    std::vector<std::pair<double, std::uint64_t>> dirs;
    for (const auto& [g, ray] : web.rays) {
        if (ray.primes.size() < 2) continue;
        const auto& a = web.at(ray.primes[0]).point;
        const auto& b = web.at(ray.primes[1]).point;
        double t = std::atan2(b.v - a.v, b.u - a.u);
        t = std::fmod(t + std::numbers::pi, std::numbers::pi);
        dirs.emplace_back(t, g);
    }
    InjectivityReport r;
    r.rays = dirs.size();
    if (dirs.size() < 2) return r;
    std::sort(dirs.begin(), dirs.end());
    r.min_separation = dirs.front().first + std::numbers::pi - dirs.back().first;
    r.closest = {dirs.back().second, dirs.front().second};
    for (std::size_t i = 1; i < dirs.size(); ++i) {
        const double gap = dirs[i].first - dirs[i - 1].first;
        if (gap < r.min_separation) {
            r.min_separation = gap;
            r.closest = {dirs[i - 1].second, dirs[i].second};
        }
    }
    return r;
}

namespace {

struct Chord {
    double ax, ay, bx, by;
    std::uint64_t generator;
};

double orient(double ax, double ay, double bx, double by, double cx, double cy) {
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

bool proper_intersection(const Chord& s, const Chord& t) {
    const double d1 = orient(s.ax, s.ay, s.bx, s.by, t.ax, t.ay);
    const double d2 = orient(s.ax, s.ay, s.bx, s.by, t.bx, t.by);
    const double d3 = orient(t.ax, t.ay, t.bx, t.by, s.ax, s.ay);
    const double d4 = orient(t.ax, t.ay, t.bx, t.by, s.bx, s.by);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

}  // namespace

CrossingReport check_crossings(const Web& web) {
    std::vector<Chord> chords;
    for (const auto& [g, ray] : web.rays)
        for (std::size_t k = 1; k < ray.primes.size(); ++k) {
            const auto& a = web.at(ray.primes[k - 1]).point;
            const auto& b = web.at(ray.primes[k]).point;
            chords.push_back({a.u, a.v, b.u, b.v, g});
        }
    CrossingReport r;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            if (chords[i].generator == chords[j].generator) continue;
            ++r.pairs_checked;
            if (proper_intersection(chords[i], chords[j]))
                pairs.emplace_back(std::min(chords[i].generator, chords[j].generator),
                                   std::max(chords[i].generator, chords[j].generator));
        }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    r.crossing_pairs = std::move(pairs);
    return r;
}

}  // namespace primeweb::web
