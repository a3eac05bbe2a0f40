#include "primeweb/web/approx_web.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "primeweb/errors.hpp"
#include "primeweb/numeric/roots.hpp"

namespace primeweb::web {

namespace {

constexpr double kMaxExponent = 600.0;  // keeps e^{αθ} finite in the spline

ApproxWebSpec tilde_base(std::string name) {
    ApproxWebSpec s;
    s.name = std::move(name);
    return s;
}

struct RayPlan {
    std::uint64_t generator = 0;
    std::uint32_t first_depth = 1;
    std::vector<std::uint64_t> elements;
};

std::vector<RayPlan> plan_rays(const seq::FilterSet& primes, const ApproxWebSpec& spec) {
    const std::uint64_t cut = spec.k0 == 0 ? 0 : primes.nth(spec.k0);
    std::vector<RayPlan> plans;
    for (const auto& q : spec.quotas) {
        for (std::uint64_t m = q.first; m <= q.last; ++m) {
            if (!primes.is_generator(m) || q.count == 0) continue;
            RayPlan plan;
            plan.generator = m;
            std::uint64_t e = primes.nth(m);
            while (e <= cut) {
                e = primes.nth(e);
                ++plan.first_depth;
            }
            for (std::size_t k = 0; k < q.count; ++k) {
                plan.elements.push_back(e);
                if (k + 1 < q.count) e = primes.nth(e);
            }
            plans.push_back(std::move(plan));
        }
    }
    return plans;
}

struct Constraint {
    std::uint64_t prime = 0;
    std::uint64_t generator = 0;
    std::uint32_t depth = 0;
    std::uint64_t first = 0, second = 0, previous = 0;  // ray elements defining the condition
    double sign = 1.0;  // expected chord direction relative to the first chord
};

// The candidate segment appended after the current spiral: continuity fixes
// β = s_prev − αθ_prev and the arc-length condition fixes where each value
// lands for a given α.
class SegmentModel {
public:
    SegmentModel(const geo::SplineSpiral& spiral, const Constraint& c)
        : spiral_(spiral), c_(c), theta_prev_(spiral.max_theta()), value_prev_(spiral.max_value()) {
        const std::size_t k = spiral.segments();
        s_prev_ = spiral.alphas()[k - 1] * theta_prev_ + spiral.betas()[k - 1];
        rho_prev_ = std::exp(s_prev_);
        gap_ = static_cast<double>(c.prime) - value_prev_;
    }

    double theta_prev() const { return theta_prev_; }
    double s_prev() const { return s_prev_; }
    double gap() const { return gap_; }

    // Position of value x when the new segment has slope α.
    geo::PlanePoint at(double x, double alpha) const {
        if (x <= value_prev_) return spiral_.map(x);
        const double growth = alpha / std::sqrt(1.0 + alpha * alpha) * (x - value_prev_) / rho_prev_;
        const double theta = theta_prev_ + std::log1p(growth) / alpha;
        return geo::PlanePoint::polar(rho_prev_ * (1.0 + growth), theta);
    }

    double turn(double alpha) const { return at(static_cast<double>(c_.prime), alpha).theta - theta_prev_; }

    // Signed angle residual of the ray condition for a target point.
    double angle_residual(const geo::PlanePoint& target, double alpha) const {
        const auto p0 = at(static_cast<double>(c_.first), alpha);
        const auto p1 = at(static_cast<double>(c_.second), alpha);
        const auto pp = at(static_cast<double>(c_.previous), alpha);
        return signed_angle(c_.sign * (p1.u - p0.u), c_.sign * (p1.v - p0.v), target.u - pp.u, target.v - pp.v);
    }

    double residual(double alpha) const { return angle_residual(at(static_cast<double>(c_.prime), alpha), alpha); }

    // Full 3×3 system in (α, θ, β).
    Eigen::Vector3d system(const Eigen::Vector3d& z) const {
        const double alpha = z[0], theta = z[1], beta = z[2];
        Eigen::Vector3d f;
        f[0] = s_prev_ - (alpha * theta_prev_ + beta);
        const double scale = std::sqrt(1.0 + 1.0 / (alpha * alpha));
        f[1] = scale * (std::exp(alpha * theta + beta) - std::exp(alpha * theta_prev_ + beta)) / gap_ - 1.0;
        f[2] = angle_residual(geo::PlanePoint::polar(std::exp(alpha * theta + beta), theta), alpha);
        return f;
    }

    bool admissible(double alpha, double max_turn) const {
        if (!(alpha > 0.0) || !std::isfinite(alpha)) return false;
        const double t = turn(alpha);
        return t > 0.0 && t <= max_turn && alpha * (theta_prev_ + t) < kMaxExponent;
    }

private:
    const geo::SplineSpiral& spiral_;
    Constraint c_;
    double theta_prev_, value_prev_, s_prev_, rho_prev_, gap_;
};

struct Newton {
    std::optional<double> alpha;
    unsigned iterations = 0;
};

Newton damped_newton(const SegmentModel& model, double alpha0, const SolverSettings& cfg) {
    Newton out;
    const double theta0 = model.theta_prev() + model.turn(alpha0);
    Eigen::Vector3d z(alpha0, theta0, model.s_prev() - alpha0 * model.theta_prev());
    for (unsigned it = 0; it < cfg.max_iterations; ++it) {
        out.iterations = it + 1;
        const Eigen::Vector3d f = model.system(z);
        if (!f.allFinite()) return out;
        if (f.cwiseAbs().maxCoeff() <= 1e-13) {
            if (model.admissible(z[0], cfg.max_turn)) out.alpha = z[0];
            return out;
        }
        Eigen::Matrix3d jac;
        for (int j = 0; j < 3; ++j) {
            Eigen::Vector3d zh = z;
            const double h = 1e-7 * std::max(1.0, std::abs(z[j]));
            zh[j] += h;
            jac.col(j) = (model.system(zh) - f) / h;
        }
        const Eigen::Vector3d step = jac.colPivHouseholderQr().solve(f);
        if (!step.allFinite()) return out;
        z -= cfg.damping * step;
        if (!(z[0] > 0.0) || !(z[1] > model.theta_prev())) return out;
    }
    return out;
}

struct Fallback {
    double alpha = 0.0;
    bool root = false;
};

// Scan ln α, bisect every genuine sign change (not an angle wrap), keep the
// admissible root nearest the previous slope; otherwise minimise |residual|.
std::optional<Fallback> scan_fallback(const SegmentModel& model, double alpha_prev, const SolverSettings& cfg) {
    const double lo = std::log(cfg.alpha_min), hi = std::log(cfg.alpha_max);
    const std::size_t n = std::max<std::size_t>(cfg.scan_points, 2);
    std::vector<double> xs(n), fs(n);
    std::vector<bool> ok(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        const double a = std::exp(xs[i]);
        ok[i] = model.admissible(a, cfg.max_turn);
        fs[i] = ok[i] ? model.residual(a) : 0.0;
    }
    const auto f = [&](double x) { return model.residual(std::exp(x)); };
    const double target = std::log(alpha_prev);
    std::optional<Fallback> best;
    for (std::size_t i = 1; i < n; ++i) {
        if (!ok[i - 1] || !ok[i]) continue;
        if ((fs[i - 1] < 0.0) == (fs[i] < 0.0)) continue;
        if (std::abs(fs[i] - fs[i - 1]) > std::numbers::pi) continue;  // the angle wrapped
        const double x = numeric::bisect_root(f, {xs[i - 1], xs[i]}, 0.0);
        if (!model.admissible(std::exp(x), cfg.max_turn)) continue;
        if (!best || std::abs(x - target) < std::abs(std::log(best->alpha) - target))
            best = Fallback{std::exp(x), true};
    }
    if (best) return best;
    std::optional<std::size_t> arg;
    for (std::size_t i = 0; i < n; ++i)
        if (ok[i] && (!arg || std::abs(fs[i]) < std::abs(fs[*arg]))) arg = i;
    if (!arg) return std::nullopt;
    double a = xs[*arg > 0 ? *arg - 1 : 0], b = xs[std::min(*arg + 1, n - 1)];
    if (!ok[*arg > 0 ? *arg - 1 : 0]) a = xs[*arg];
    if (!ok[std::min(*arg + 1, n - 1)]) b = xs[*arg];
    double x = xs[*arg];
    if (b > a) {
        const double y = numeric::golden_minimize([&](double t) { return std::abs(f(t)); }, a, b, 1e-14);
        if (model.admissible(std::exp(y), cfg.max_turn) && std::abs(f(y)) < std::abs(f(x))) x = y;
    }
    return Fallback{std::exp(x), false};
}


}  // namespace

ApproxWebSpec w3_tilde_spec() {
    auto s = tilde_base("W3-tilde");
    s.rotations = 3;
    s.quotas = {{1, 30, 3}, {32, 36, 2}, {38, 126, 2}};
    return s;
}

ApproxWebSpec w4_tilde_spec() {
    auto s = tilde_base("W4-tilde");
    s.rotations = 4;
    s.quotas = {{1, 30, 4}, {32, 36, 3}, {38, 126, 3}};
    return s;
}

ApproxWebSpec w3_hat_spec() {
    auto s = tilde_base("W3-hat");
    s.rotations = 3;
    s.quotas = {{1, 36, 3}, {38, 151, 2}};
    return s;
}

ApproxWebSpec degenerate_spec() {
    auto s = w3_tilde_spec();
    s.name = "W-degenerate";
    s.orientation = -1;
    return s;
}

std::size_t composition_size(const seq::FilterSet& primes, const ApproxWebSpec& spec) {
    std::size_t n = 0;
    for (const auto& plan : plan_rays(primes, spec)) n += plan.elements.size();
    return n;
}

Web build_web(const seq::FilterSet& primes, const ApproxWebSpec& spec) {
    if (spec.orientation != 1 && spec.orientation != -1) throw DomainError("orientation must be +1 or -1");
    const double phi = spec.phi_degrees * std::numbers::pi / 180.0;
    const geo::LogSpiral log(phi);
    const double alpha0 = log.cot_phi();
    const double pure_theta = 2.0 * std::numbers::pi * spec.pure_turns;
    const double pure_value = log.arc_length(pure_theta);
    const SolverSettings& cfg = spec.solver;

    const auto plans = plan_rays(primes, spec);
    std::map<std::uint64_t, WebPoint> points;
    std::vector<Constraint> constraints;
    for (const auto& plan : plans) {
        for (std::size_t k = 0; k < plan.elements.size(); ++k) {
            WebPoint pt;
            pt.prime = plan.elements[k];
            pt.generator = plan.generator;
            pt.depth = plan.first_depth + static_cast<std::uint32_t>(k);
            if (!points.emplace(pt.prime, pt).second)
                throw DegenerateInputError("prime " + std::to_string(pt.prime) + " selected on two rays");
            if (k >= 2) {
                Constraint c;
                c.prime = pt.prime;
                c.generator = plan.generator;
                c.depth = pt.depth;
                c.first = plan.elements[0];
                c.second = plan.elements[1];
                c.previous = plan.elements[k - 1];
                c.sign = (k % 2 == 0 && spec.orientation < 0) ? -1.0 : 1.0;
                constraints.push_back(c);
            }
        }
    }
    for (std::uint32_t i = 1; i <= spec.k0; ++i) {
        WebPoint pt;
        pt.prime = primes.nth(i);
        points.emplace(pt.prime, pt);
    }
    std::sort(constraints.begin(), constraints.end(),
              [](const Constraint& a, const Constraint& b) { return a.prime < b.prime; });
    if (!constraints.empty() && static_cast<double>(constraints.front().prime) <= pure_value)
        throw DomainError("a ray-constrained prime lies on the pure logarithmic part");

    std::vector<double> values{pure_value}, alphas{alpha0};
    std::vector<SegmentSolve> solves;
    for (const auto& c : constraints) {
        const auto spiral = geo::SplineSpiral::from_arc_values(values, alphas);
        const SegmentModel model(spiral, c);
        const double alpha_prev = alphas.back();

        SegmentSolve s;
        s.prime = c.prime;
        s.generator = c.generator;
        s.depth = c.depth;
        const auto newton = damped_newton(model, alpha_prev, cfg);
        s.newton_iterations = newton.iterations;
        double alpha = 0.0;
        bool found = true;
        if (newton.alpha && std::abs(model.residual(*newton.alpha)) <= cfg.exact_tolerance) {
            s.newton_converged = true;
            alpha = *newton.alpha;
        } else if (const auto fb = scan_fallback(model, alpha_prev, cfg)) {
            alpha = fb->alpha;
        } else {
            alpha = alpha_prev;  // nothing admissible: keep the slope
            found = false;
        }
        s.alpha = alpha;
        s.theta = model.theta_prev() + model.turn(alpha);
        s.beta = model.s_prev() - alpha * model.theta_prev();
        s.residual = model.residual(alpha);
        if (!found || !std::isfinite(s.residual))
            s.status = Placement::failed;
        else
            s.status = std::abs(s.residual) <= cfg.exact_tolerance ? Placement::exact : Placement::approximate;
        solves.push_back(s);
        values.push_back(static_cast<double>(c.prime));
        alphas.push_back(alpha);
    }
    // unconstrained primes beyond the last knot ride on a continuation
    const double top = static_cast<double>(points.rbegin()->first);
    if (top > values.back()) {
        values.push_back(top);
        alphas.push_back(alphas.back());
    }

    Web web(geo::SplineSpiral::from_arc_values(values, alphas));
    web.name = spec.name;
    web.phi = phi;
    web.skipped = spec.k0;
    web.rotations = spec.rotations;
    web.orientation = spec.orientation;
    for (auto& [p, pt] : points) pt.point = web.spiral.map(static_cast<double>(p));
    for (const auto& s : solves) {
        auto& pt = points.at(s.prime);
        pt.placement = s.status;
        pt.residual = s.residual;
    }
    for (const auto& plan : plans) web.rays[plan.generator] = WebRay{plan.generator, plan.elements};
    web.points = std::move(points);
    web.solves = std::move(solves);
    return web;
}

Web build_approx_web(const seq::FilterSet& primes, std::uint32_t target_rotations) {
    if (target_rotations == 3) return build_web(primes, w3_tilde_spec());
    if (target_rotations == 4) return build_web(primes, w4_tilde_spec());
    throw DomainError("approximate webs are built for 3 or 4 rotations");
}

Web build_degenerate_web(const seq::FilterSet& primes) { return build_web(primes, degenerate_spec()); }

}  // namespace primeweb::web
