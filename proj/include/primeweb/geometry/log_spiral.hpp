#pragma once

namespace primeweb::geo {

// A point of the plane in polar form with an unwrapped angle (total winding)
// and its Cartesian coordinates u = ρ cos θ, v = ρ sin θ.
struct PlanePoint {
    double rho = 0.0;
    double theta = 0.0;
    double u = 0.0;
    double v = 0.0;
    static PlanePoint polar(double rho, double theta);
};

// ρ(θ) = e^{(cot φ) θ}, 0 < φ < π/2, with arc length from θ = 0
//   λ(0, θ) = (e^{(cot φ) θ} − 1) / cos φ.
class LogSpiral {
public:
    explicit LogSpiral(double phi);  // radians; throws DomainError outside (0, π/2)
    static LogSpiral from_cos(double x);  // x = cos φ ∈ (0, 1)

    double phi() const { return phi_; }
    double cos_phi() const { return cos_; }
    double cot_phi() const { return cot_; }

    double rho(double theta) const;
    double arc_length(double theta) const;  // θ >= 0 (negative θ: see negative_moustache)
    // θ with arc_length(θ) = x: θ = tan φ · ln(x cos φ + 1).
    double theta_for_value(double x) const;
    PlanePoint point_for_value(double x) const;

    // Arc length for θ <= 0 (the finite spiral part inside the unit circle):
    // tends to −1/cos φ as θ → −∞.
    double negative_moustache(double theta) const;
    double moustache_limit() const { return -1.0 / cos_; }

private:
    double phi_, cos_, cot_, tan_;
};

}  // namespace primeweb::geo
