#include "primeweb/geometry/log_spiral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "primeweb/errors.hpp"

namespace primeweb::geo {

PlanePoint PlanePoint::polar(double rho, double theta) {
    return {rho, theta, rho * std::cos(theta), rho * std::sin(theta)};
}

LogSpiral::LogSpiral(double phi) : phi_(phi) {
    if (!(phi > 0.0 && phi < std::numbers::pi / 2))
        throw DomainError("log spiral pitch must lie in (0, pi/2), got " + std::to_string(phi));
    cos_ = std::cos(phi);
    tan_ = std::tan(phi);
    cot_ = 1.0 / tan_;
}

LogSpiral LogSpiral::from_cos(double x) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("cos(phi) must lie in (0, 1), got " + std::to_string(x));
    return LogSpiral(std::acos(x));
}

double LogSpiral::rho(double theta) const { return std::exp(cot_ * theta); }

double LogSpiral::arc_length(double theta) const {
    if (theta < 0.0) throw DomainError("arc_length needs theta >= 0; use negative_moustache");
    return std::expm1(cot_ * theta) / cos_;
}

double LogSpiral::theta_for_value(double x) const {
    if (x < 0.0) throw DomainError("theta_for_value needs x >= 0");
    return tan_ * std::log1p(x * cos_);
}

PlanePoint LogSpiral::point_for_value(double x) const {
    const double theta = theta_for_value(x);
    return PlanePoint::polar(x * cos_ + 1.0, theta);
}

double LogSpiral::negative_moustache(double theta) const {
    if (theta > 0.0) throw DomainError("negative_moustache needs theta <= 0");
    return std::expm1(cot_ * theta) / cos_;
}

}  // namespace primeweb::geo
