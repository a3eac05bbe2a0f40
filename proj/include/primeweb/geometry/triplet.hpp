#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace primeweb::geo {

// F(x) = S₁₂ + S₂₃ + S₃₁ with
//   S_ab(x) = (p_a x + 1)(p_b x + 1) sin(√(1/x² − 1) · ln((p_a x + 1)/(p_b x + 1))).
// With x = cos φ the three values sit on the log spiral of pitch φ at arc
// lengths p1, p2, p3, and F is twice the signed area of their triangle, so
// F(x) = 0 exactly when the three points are collinear.
double triplet_function(double x, const std::array<double, 3>& p);

// |sin| of the angle at the first point between the chords to the other two,
// computed from Cartesian coordinates: 0 for collinear points.
double collinearity_residual(double x, const std::array<double, 3>& p);

// True when the points at arc lengths p1 < p2 < p3 are met in that order
// along their common line (P2 between P1 and P3).
bool ordered_on_line(double x, const std::array<double, 3>& p);

struct TripletSearch {
    double lo = 0.01;
    double hi = 0.99;
    double step = 1e-3;
    double x_tolerance = 0.0;  // bisect to full double precision
};

struct TripletRoots {
    std::array<double, 3> p{};
    std::vector<double> roots;     // ascending
    std::vector<bool> ordered;     // per root: P1 → P2 → P3 along the line
    // Largest root whose points are ordered along the line (the one-turn
    // solution). Missing when no such root exists in the window.
    std::optional<double> primary;
    // Smallest root inside the given interval, if any (for comparison).
    std::optional<double> smallest_in(double a, double b) const;
};

// Requires 0 < p1 < p2 < p3; throws DomainError otherwise. Finding no root
// is a result, not an error.
TripletRoots triplet_roots(const std::array<double, 3>& p, const TripletSearch& search = {});

// φ in degrees for x = cos φ.
double pitch_degrees(double x);

// CSV "p1,p2,p3,x,phi_deg" with one line per triplet (empty x when no
// primary root).
std::string triplet_survey_csv(const std::vector<TripletRoots>& survey);

}  // namespace primeweb::geo
