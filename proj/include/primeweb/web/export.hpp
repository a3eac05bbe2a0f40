#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "primeweb/web/trapezoid.hpp"
#include "primeweb/web/web.hpp"

namespace primeweb::web {

struct SvgOptions {
    double size = 1000.0;          // width = height in px
    std::size_t spiral_samples = 4000;
    bool draw_spiral = true;
    bool label_rays = false;
    std::uint64_t highlight_ray = 0;  // stroked thick black; 0 = the initial ray r_{k⁰+1}
    std::vector<Trapezoid> trapezoids;  // shaded by their four corner points
    std::string title;
};

// Static SVG: spiral polyline, ray polylines (approximate segments dashed),
// placed primes as dots and the highlighted initial ray.
std::string to_svg(const Web& web, const SvgOptions& options = {});

// JSON with stable key order: spiral knots, rays with their points and
// placement flags, segment solves and the given trapezoids.
nlohmann::ordered_json to_json(const Web& web, const std::vector<Trapezoid>& trapezoids = {});

}  // namespace primeweb::web
