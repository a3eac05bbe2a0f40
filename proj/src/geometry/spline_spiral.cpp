#include "primeweb/geometry/spline_spiral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "primeweb/errors.hpp"

namespace primeweb::geo {

namespace {

double segment_scale(double alpha) { return std::sqrt(1.0 + 1.0 / (alpha * alpha)); }

void check_alphas(const std::vector<double>& alphas) {
    if (alphas.empty()) throw DomainError("spline spiral needs at least one segment");
    for (double a : alphas)
        if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("spline spiral slopes must be positive");
}

}  // namespace

SplineSpiral SplineSpiral::from_knots(std::vector<double> knots, std::vector<double> alphas) {
    check_alphas(alphas);
    if (knots.size() != alphas.size()) throw DomainError("spline spiral needs one knot per segment");
    SplineSpiral s;
    s.knots_.push_back(0.0);
    for (double t : knots) {
        if (!(t > s.knots_.back())) throw DomainError("spline spiral knots must increase from 0");
        s.knots_.push_back(t);
    }
    s.alphas_ = std::move(alphas);
    s.finish();
    return s;
}

SplineSpiral SplineSpiral::from_arc_values(const std::vector<double>& values, std::vector<double> alphas) {
    check_alphas(alphas);
    if (values.size() != alphas.size()) throw DomainError("spline spiral needs one knot value per segment");
    SplineSpiral s;
    s.alphas_ = std::move(alphas);
    s.knots_.push_back(0.0);
    s.values_.push_back(0.0);
    double beta = 0.0;
    for (std::size_t i = 0; i < s.alphas_.size(); ++i) {
        const double a = s.alphas_[i];
        if (i > 0) beta += (s.alphas_[i - 1] - a) * s.knots_[i];
        if (!(values[i] > s.values_.back())) throw DomainError("spline spiral knot values must increase from 0");
        const double e = a / std::sqrt(1.0 + a * a) * std::exp(-beta) * (values[i] - s.values_.back()) +
                         std::exp(a * s.knots_[i]);
        s.knots_.push_back(std::log(e) / a);
        s.values_.push_back(values[i]);
    }
    s.finish();
    // the computed arc values agree with the requested ones up to rounding;
    // keep the requested values so knots map exactly
    for (std::size_t i = 0; i < values.size(); ++i) s.values_[i + 1] = values[i];
    return s;
}

void SplineSpiral::finish() {
    betas_.assign(alphas_.size(), 0.0);
    for (std::size_t i = 1; i < alphas_.size(); ++i)
        betas_[i] = betas_[i - 1] + (alphas_[i - 1] - alphas_[i]) * knots_[i];
    values_.assign(1, 0.0);
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        const double a = alphas_[i];
        values_.push_back(values_.back() + segment_scale(a) * std::exp(betas_[i]) *
                                               (std::exp(a * knots_[i + 1]) - std::exp(a * knots_[i])));
    }
}

std::size_t SplineSpiral::segment_of_theta(double theta) const {
    if (!(theta >= 0.0 && theta <= knots_.back()))
        throw RangeError("angle " + std::to_string(theta) + " outside the spline spiral");
    const auto it = std::lower_bound(knots_.begin() + 1, knots_.end(), theta);
    return static_cast<std::size_t>(it - knots_.begin());
}

std::size_t SplineSpiral::segment_of_value(double x) const {
    if (!(x >= 0.0 && x <= values_.back()))
        throw RangeError("value " + std::to_string(x) + " beyond the covered range " + std::to_string(values_.back()));
    const auto it = std::upper_bound(values_.begin(), values_.end(), x);
    return std::min<std::size_t>(static_cast<std::size_t>(it - values_.begin()), alphas_.size());
}

double SplineSpiral::rho(double theta) const {
    const std::size_t i = segment_of_theta(theta);
    return std::exp(alphas_[i - 1] * theta + betas_[i - 1]);
}

double SplineSpiral::arc(double theta_a, double theta_b) const {
    if (theta_b < theta_a) throw RangeError("arc needs theta_a <= theta_b");
    const std::size_t ia = segment_of_theta(theta_a), ib = segment_of_theta(theta_b);
    const auto piece = [&](std::size_t i, double a, double b) {
        const double al = alphas_[i - 1];
        return segment_scale(al) * std::exp(betas_[i - 1]) * (std::exp(al * b) - std::exp(al * a));
    };
    if (ia == ib) return piece(ia, theta_a, theta_b);
    double total = piece(ia, theta_a, knots_[ia]);
    for (std::size_t i = ia + 1; i < ib; ++i) total += values_[i] - values_[i - 1];
    return total + piece(ib, knots_[ib - 1], theta_b);
}

double SplineSpiral::theta_for_value(double x) const {
    const std::size_t i = segment_of_value(x);
    const double a = alphas_[i - 1], b = betas_[i - 1];
    const double e = a / std::sqrt(1.0 + a * a) * std::exp(-b) * (x - values_[i - 1]) + std::exp(a * knots_[i - 1]);
    return std::log(e) / a;
}

PlanePoint SplineSpiral::map(double x) const {
    const std::size_t i = segment_of_value(x);
    const double a = alphas_[i - 1], b = betas_[i - 1];
    const double e = a / std::sqrt(1.0 + a * a) * std::exp(-b) * (x - values_[i - 1]) + std::exp(a * knots_[i - 1]);
    return PlanePoint::polar(std::exp(b) * e, std::log(e) / a);
}

double SplineSpiral::printed_radius(double x) const {
    const std::size_t i = segment_of_value(x);
    const double a = alphas_[i - 1], b = betas_[i - 1];
    const double e = a / std::sqrt(1.0 + a * a) * std::exp(-b) * (x - values_[i - 1]) + std::exp(a * knots_[i - 1]);
    return std::exp(b) * std::log(e);
}

LogSpiral SplineSpiral::initial_spiral() const { return LogSpiral(std::atan(1.0 / alphas_.front())); }

}  // namespace primeweb::geo
