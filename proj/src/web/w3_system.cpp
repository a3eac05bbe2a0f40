#include "primeweb/web/w3_system.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "primeweb/errors.hpp"
#include "primeweb/web/approx_web.hpp"

namespace primeweb::web {

std::string_view equation_kind_name(EquationKind k) {
    switch (k) {
        case EquationKind::start_exponent: return "start_exponent";
        case EquationKind::continuity: return "continuity";
        case EquationKind::arc_length: return "arc";
        case EquationKind::on_ray: return "on_ray";
    }
    return "unknown";
}

const RayLine& W3System::line(std::uint64_t generator) const {
    for (const auto& l : lines)
        if (l.generator == generator) return l;
    throw RangeError("no prescribed line for ray " + std::to_string(generator));
}

namespace {

double line_value(const RayLine& l, double alpha, double theta, double beta) {
    const double rho = std::exp(alpha * theta + beta);
    return rho * (l.a * std::cos(theta) + l.b * std::sin(theta)) - l.c;
}

}  // namespace

std::vector<double> W3System::equation_residuals(const W3Unknowns& x) const {
    const std::size_t n = segments.size();
    if (x.alpha.size() != n || x.theta.size() != n || x.beta.size() != n)
        throw DomainError("unknown vector does not match the system size");
    std::vector<double> out;
    out.reserve(equations.size());
    for (const auto& e : equations) {
        const std::size_t i = e.segment - 1;
        switch (e.kind) {
            case EquationKind::start_exponent: out.push_back(x.beta[0]); break;
            case EquationKind::continuity:
                out.push_back(x.alpha[i] * x.theta[i] + x.beta[i] - x.alpha[i + 1] * x.theta[i] - x.beta[i + 1]);
                break;
            case EquationKind::arc_length: {
                const double a = x.alpha[i];
                const double start = i == 0 ? 0.0 : x.theta[i - 1];
                out.push_back(std::sqrt(1.0 + 1.0 / (a * a)) * std::exp(x.beta[i]) *
                                  (std::exp(a * x.theta[i]) - std::exp(a * start)) -
                              e.rhs);
                break;
            }
            case EquationKind::on_ray:
                out.push_back(line_value(line(e.generator), x.alpha[i], x.theta[i], x.beta[i]));
                break;
        }
    }
    return out;
}

std::vector<double> W3System::inequality_values(const W3Unknowns& x) const {
    std::vector<double> out;
    out.reserve(inequalities.size());
    for (const auto& q : inequalities) {
        const std::size_t i = q.segment - 1;
        out.push_back(q.sign * line_value(line(q.ray), x.alpha[i], x.theta[i], x.beta[i]) - q.margin);
    }
    return out;
}

W3System assemble_w3_system(const seq::FilterSet& primes, const Web& approx, std::uint32_t k0, double margin) {
    W3System sys;
    sys.k0 = k0;
    const auto starts = truncated_rays(primes, k0, 25);
    const std::uint64_t initial_ray = std::uint64_t{k0} + 1;
    if (!primes.is_generator(initial_ray))
        throw DomainError("the initial ray r_{k0+1} needs a composite generator");
    if (starts.count(initial_ray) == 0) throw DomainError("the initial ray is not among the first 25 rays");

    // segment end points: first three elements of each ray, fourth of the initial ray
    std::vector<W3Segment> ends;
    for (const auto& [g, start] : starts) {
        std::uint32_t depth = 1;
        for (std::uint64_t e = primes.nth(g); e < start; e = primes.nth(e)) ++depth;
        std::uint64_t e = start;
        const std::size_t count = g == initial_ray ? 4 : 3;
        for (std::size_t k = 0; k < count; ++k, ++depth) {
            ends.push_back({0, e, g, depth});
            if (k + 1 < count) e = primes.nth(e);
        }
    }
    std::sort(ends.begin(), ends.end(), [](const W3Segment& a, const W3Segment& b) { return a.prime < b.prime; });
    for (std::size_t i = 0; i < ends.size(); ++i) ends[i].index = i + 1;
    sys.segments = ends;

    // ray lines from the first two points on the approximation web
    std::map<std::uint64_t, geo::PlanePoint> first_point;
    for (const auto& [g, start] : starts) {
        const auto& ray = approx.rays.at(g);
        if (ray.primes.size() < 2 || ray.primes.front() != start)
            throw DomainError("the approximation web lacks the first two elements of ray " + std::to_string(g));
        const auto& p0 = approx.at(ray.primes[0]).point;
        const auto& p1 = approx.at(ray.primes[1]).point;
        const double dx = p1.u - p0.u, dy = p1.v - p0.v, len = std::hypot(dx, dy);
        RayLine l{g, -dy / len, dx / len, 0.0};
        l.c = l.a * p0.u + l.b * p0.v;
        sys.lines.push_back(l);
        first_point[g] = p0;
    }

    const std::size_t n = ends.size();
    sys.equations.push_back({EquationKind::start_exponent, 1, 0.0, 0});
    for (std::size_t i = 1; i < n; ++i) sys.equations.push_back({EquationKind::continuity, i, 0.0, 0});
    for (std::size_t i = 1; i <= n; ++i) {
        const double prev = i == 1 ? 0.0 : static_cast<double>(ends[i - 2].prime);
        sys.equations.push_back({EquationKind::arc_length, i, static_cast<double>(ends[i - 1].prime) - prev, 0});
    }
    for (std::size_t i = 1; i <= n; ++i)
        sys.equations.push_back({EquationKind::on_ray, i, 0.0, ends[i - 1].generator});

    std::map<std::uint64_t, std::size_t> start_segment;
    for (const auto& s : ends)
        if (s.prime == starts.at(s.generator)) start_segment[s.generator] = s.index;
    for (const auto& r : sys.lines)
        for (const auto& s : sys.lines) {
            if (r.generator >= s.generator) continue;
            const auto& p = first_point.at(s.generator);
            const double side = r.a * p.u + r.b * p.v - r.c;
            sys.inequalities.push_back({r.generator, s.generator, start_segment.at(s.generator), side < 0 ? -1 : 1, margin});
        }

    // initial guess: ln ρ interpolated linearly in θ between the web's points
    const auto& sp = approx.spiral;
    const auto locate = [&](double x) {
        if (x <= sp.max_value()) return sp.map(x);
        const std::size_t k = sp.segments();
        const double a = sp.alphas()[k - 1], b = sp.betas()[k - 1];
        const double rho_end = std::exp(a * sp.max_theta() + b);
        const double rho = rho_end + a / std::sqrt(1.0 + a * a) * (x - sp.max_value());
        return geo::PlanePoint::polar(rho, (std::log(rho) - b) / a);
    };
    double theta_prev = 0.0, s_prev = 0.0;
    for (const auto& s : ends) {
        const auto p = locate(static_cast<double>(s.prime));
        const double lr = std::log(p.rho);
        const double a = (lr - s_prev) / (p.theta - theta_prev);
        sys.initial.alpha.push_back(a);
        sys.initial.theta.push_back(p.theta);
        sys.initial.beta.push_back(lr - a * p.theta);
        theta_prev = p.theta;
        s_prev = lr;
    }
    return sys;
}

W3System assemble_w3_system(const seq::FilterSet& primes, std::uint32_t k0) {
    auto spec = w3_hat_spec();
    spec.k0 = k0;
    return assemble_w3_system(primes, build_web(primes, spec), k0);
}

}  // namespace primeweb::web
