#include "primeweb/geometry/triplet.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "primeweb/errors.hpp"
#include "primeweb/geometry/log_spiral.hpp"
#include "primeweb/numeric/roots.hpp"

namespace primeweb::geo {

namespace {

std::array<PlanePoint, 3> points(double x, const std::array<double, 3>& p) {
    const auto spiral = LogSpiral::from_cos(x);
    return {spiral.point_for_value(p[0]), spiral.point_for_value(p[1]), spiral.point_for_value(p[2])};
}

}  // namespace

double triplet_function(double x, const std::array<double, 3>& p) {
    const double t = std::sqrt(1.0 / (x * x) - 1.0);
    const auto s = [&](double a, double b) {
        const double ra = a * x + 1.0, rb = b * x + 1.0;
        return ra * rb * std::sin(t * std::log(ra / rb));
    };
    return s(p[0], p[1]) + s(p[1], p[2]) + s(p[2], p[0]);
}

double collinearity_residual(double x, const std::array<double, 3>& p) {
    const auto q = points(x, p);
    const double ax = q[1].u - q[0].u, ay = q[1].v - q[0].v;
    const double bx = q[2].u - q[0].u, by = q[2].v - q[0].v;
    return std::abs(ax * by - ay * bx) / (std::hypot(ax, ay) * std::hypot(bx, by));
}

bool ordered_on_line(double x, const std::array<double, 3>& p) {
    const auto q = points(x, p);
    return (q[1].u - q[0].u) * (q[2].u - q[1].u) + (q[1].v - q[0].v) * (q[2].v - q[1].v) > 0.0;
}

std::optional<double> TripletRoots::smallest_in(double a, double b) const {
    for (double r : roots)
        if (r > a && r < b) return r;
    return std::nullopt;
}

TripletRoots triplet_roots(const std::array<double, 3>& p, const TripletSearch& search) {
    if (!(p[0] > 0.0 && p[0] < p[1] && p[1] < p[2])) throw DomainError("triplet needs 0 < p1 < p2 < p3");
    if (!(search.lo > 0.0 && search.hi < 1.0 && search.lo < search.hi))
        throw DomainError("triplet search window must lie inside (0, 1)");
    TripletRoots out;
    out.p = p;
    const auto f = [&](double x) { return triplet_function(x, p); };
    for (const auto& b : numeric::sign_change_brackets(f, search.lo, search.hi, search.step)) {
        const double r = f(b.hi) == 0.0 ? b.hi : numeric::bisect_root(f, b, search.x_tolerance);
        if (!out.roots.empty() && std::abs(out.roots.back() - r) <= search.x_tolerance) continue;
        out.roots.push_back(r);
    }
    for (double r : out.roots) {
        const bool ok = ordered_on_line(r, p);
        out.ordered.push_back(ok);
        if (ok) out.primary = r;  // roots ascend, so the last ordered one is the largest
    }
    return out;
}

double pitch_degrees(double x) { return std::acos(x) * 180.0 / std::numbers::pi; }

std::string triplet_survey_csv(const std::vector<TripletRoots>& survey) {
    std::string out = "p1,p2,p3,x,phi_deg\r\n";
    for (const auto& t : survey) {
        out += fmt::format("{},{},{},", t.p[0], t.p[1], t.p[2]);
        if (t.primary)
            out += fmt::format("{:.12f},{:.9f}\r\n", *t.primary, pitch_degrees(*t.primary));
        else
            out += ",\r\n";
    }
    return out;
}

}  // namespace primeweb::geo
