#pragma once

#include <cstddef>
#include <vector>

#include "primeweb/geometry/log_spiral.hpp"

namespace primeweb::geo {

// Logarithmic spline-spiral ρ(θ) = e^{s(θ)} with a continuous, piecewise
// linear exponent s(θ) = αᵢθ + βᵢ on [θᵢ₋₁, θᵢ], i = 1..k, θ₀ = 0, β₁ = 0.
// Each knot carries its cumulative arc length vᵢ = λ(0, θᵢ); on a segment
//   λ(θa, θb) = √(1 + 1/αᵢ²) e^{βᵢ} (e^{αᵢθb} − e^{αᵢθa}).
class SplineSpiral {
public:
    // Knots θ₁ < … < θ_k (θ₀ = 0 implied) and slopes α₁..α_k > 0; the βᵢ
    // follow from continuity and the knot arc lengths are computed.
    static SplineSpiral from_knots(std::vector<double> knots, std::vector<double> alphas);
    // Knot arc lengths 0 < v₁ < … < v_k and slopes; each knot angle is the
    // one at which the arc length reaches vᵢ.
    static SplineSpiral from_arc_values(const std::vector<double>& values, std::vector<double> alphas);

    std::size_t segments() const { return alphas_.size(); }
    const std::vector<double>& knots() const { return knots_; }    // θ₀..θ_k
    const std::vector<double>& alphas() const { return alphas_; }  // α₁..α_k
    const std::vector<double>& betas() const { return betas_; }    // β₁..β_k
    const std::vector<double>& knot_values() const { return values_; }  // v₀ = 0..v_k

    double max_theta() const { return knots_.back(); }
    double max_value() const { return values_.back(); }

    // 1-based segment index holding θ (knots belong to the segment on
    // their left, θ₀ to segment 1).
    std::size_t segment_of_theta(double theta) const;
    // 1-based segment with v_{i−1} <= x < vᵢ (x = v_k maps to segment k).
    std::size_t segment_of_value(double x) const;

    double rho(double theta) const;                     // throws RangeError outside [0, θ_k]
    double arc(double theta_a, double theta_b) const;   // θa <= θb, additive across knots
    double arc_length(double theta) const { return arc(0.0, theta); }

    // Isometric map: θ_x = (1/α) ln E(x) with
    //   E(x) = α/√(1+α²) e^{−β} (x − v_{i−1}) + e^{α θ_{i−1}},
    // and ρ = e^{αθ_x + β} = e^β E(x).
    double theta_for_value(double x) const;
    PlanePoint map(double x) const;
    // ρ as printed in the source formula, e^β ln E(x); kept only to show
    // that it disagrees with ρ(θ_x).
    double printed_radius(double x) const;

    // Negative moustache for θ <= 0, continued with the first slope:
    // φ = arccot α₁.
    LogSpiral initial_spiral() const;

private:
    SplineSpiral() = default;
    void finish();

    std::vector<double> knots_, alphas_, betas_, values_;
};

}  // namespace primeweb::geo
