#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "primeweb/web/export.hpp"

namespace primeweb::web {

namespace {

struct Frame {
    double scale = 1.0, cx = 0.0, cy = 0.0, half = 0.0;
    double x(double u) const { return half + (u - cx) * scale; }
    double y(double v) const { return half - (v - cy) * scale; }  // SVG y grows downwards
};

std::string polyline(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
    std::string s = "<polyline fill=\"none\" " + style + " points=\"";
    for (const auto& [x, y] : pts) s += fmt::format("{:.2f},{:.2f} ", x, y);
    s += "\"/>\n";
    return s;
}

}  // namespace

std::string to_svg(const Web& web, const SvgOptions& opt) {
    Frame f;
    f.half = opt.size / 2;
    double extent = 1.0;
    for (const auto& [p, pt] : web.points) extent = std::max({extent, std::abs(pt.point.u), std::abs(pt.point.v)});
    f.scale = 0.95 * f.half / extent;

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        opt.size);
    if (!opt.title.empty()) out += fmt::format("<title>{}</title>\n", opt.title);

    for (const auto& t : opt.trapezoids) {
        std::vector<std::uint64_t> corners{t.inner[0], t.inner[1], t.outer[1], t.outer[0]};
        if (!std::all_of(corners.begin(), corners.end(), [&](std::uint64_t c) { return web.points.count(c) != 0; }))
            continue;
        std::string pts;
        for (std::uint64_t c : corners) {
            const auto& q = web.at(c).point;
            pts += fmt::format("{:.2f},{:.2f} ", f.x(q.u), f.y(q.v));
        }
        out += fmt::format("<polygon points=\"{}\" fill=\"#f2c94c\" fill-opacity=\"0.35\" stroke=\"none\"/>\n", pts);
    }

    if (opt.draw_spiral) {
        std::vector<std::pair<double, double>> pts;
        const std::size_t n = std::max<std::size_t>(opt.spiral_samples, 2);
        const double top = web.spiral.max_value();
        for (std::size_t i = 0; i <= n; ++i) {
            const auto q = web.spiral.map(top * static_cast<double>(i) / static_cast<double>(n));
            pts.emplace_back(f.x(q.u), f.y(q.v));
        }
        out += polyline(pts, "stroke=\"#9aa5b1\" stroke-width=\"0.6\"");
    }

    const std::uint64_t highlight = opt.highlight_ray != 0 ? opt.highlight_ray : std::uint64_t{web.skipped} + 1;
    for (const auto& [g, ray] : web.rays) {
        if (ray.primes.size() < 2) continue;
        for (std::size_t k = 1; k < ray.primes.size(); ++k) {
            const auto& a = web.at(ray.primes[k - 1]).point;
            const auto& b = web.at(ray.primes[k]);
            std::string style = g == highlight ? "stroke=\"black\" stroke-width=\"3\""
                                               : "stroke=\"#2f6fb0\" stroke-width=\"0.8\"";
            if (b.placement == Placement::approximate || b.placement == Placement::failed)
                style += " stroke-dasharray=\"4,3\"";
            out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" {}/>\n", f.x(a.u),
                               f.y(a.v), f.x(b.point.u), f.y(b.point.v), style);
        }
        if (opt.label_rays) {
            const auto& a = web.at(ray.primes.front()).point;
            out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"8\">{}</text>\n", f.x(a.u), f.y(a.v), g);
        }
    }
    for (const auto& [p, pt] : web.points) {
        const char* colour = pt.generator == 0 ? "#c0392b" : "#1b2631";
        out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"1.6\" fill=\"{}\"><title>{}</title></circle>\n",
                           f.x(pt.point.u), f.y(pt.point.v), colour, p);
    }
    out += "</svg>\n";
    return out;
}

nlohmann::ordered_json to_json(const Web& web, const std::vector<Trapezoid>& trapezoids) {
    nlohmann::ordered_json j;
    j["name"] = web.name;
    j["phi"] = web.phi;
    j["skipped"] = web.skipped;
    j["rotations"] = web.rotations;
    j["orientation"] = web.orientation;
    auto& sp = j["spiral"];
    sp["knots"] = web.spiral.knots();
    sp["alphas"] = web.spiral.alphas();
    sp["betas"] = web.spiral.betas();
    sp["values"] = web.spiral.knot_values();
    j["rays"] = nlohmann::ordered_json::array();
    for (const auto& [g, ray] : web.rays) {
        nlohmann::ordered_json r;
        r["generator"] = g;
        r["points"] = nlohmann::ordered_json::array();
        for (std::uint64_t p : ray.primes) {
            const auto& pt = web.at(p);
            r["points"].push_back({{"prime", p},
                                   {"depth", pt.depth},
                                   {"theta", pt.point.theta},
                                   {"rho", pt.point.rho},
                                   {"u", pt.point.u},
                                   {"v", pt.point.v},
                                   {"placement", std::string(placement_name(pt.placement))},
                                   {"residual", pt.residual}});
        }
        j["rays"].push_back(std::move(r));
    }
    j["loose"] = nlohmann::ordered_json::array();
    for (const auto& [p, pt] : web.points)
        if (pt.generator == 0) j["loose"].push_back({{"prime", p}, {"u", pt.point.u}, {"v", pt.point.v}});
    j["segments"] = nlohmann::ordered_json::array();
    for (const auto& s : web.solves)
        j["segments"].push_back({{"prime", s.prime},
                                 {"ray", s.generator},
                                 {"alpha", s.alpha},
                                 {"theta", s.theta},
                                 {"beta", s.beta},
                                 {"residual", s.residual},
                                 {"newton_iterations", s.newton_iterations},
                                 {"status", std::string(placement_name(s.status))}});
    j["trapezoids"] = nlohmann::ordered_json::array();
    for (const auto& t : trapezoids)
        j["trapezoids"].push_back({{"nu", t.nu}, {"mu", t.mu}, {"k", t.k}, {"q", t.q}, {"inner", t.inner}, {"outer", t.outer}});
    return j;
}

}  // namespace primeweb::web
