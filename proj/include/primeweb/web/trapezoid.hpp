#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "primeweb/engine/prime_indexer.hpp"

namespace primeweb::web {

// Index-space rotation structure of a web with k⁰ skipped primes. Rotations
// are counted from the initial ray r_{k⁰+1}: rotation ν holds the primes
// p(j) with p_{ν−1}(k⁰+1) <= j < p_ν(k⁰+1), where p₀(m) = m. For k⁰ = 11
// rotation 1 is p(12..36) = 37..151 (the 25 ray starts), rotation 2 is
// p(37..156) = 157..907 and rotation 3 starts at 919.
class RotationIndex {
public:
    RotationIndex(const engine::PrimeIndexer& engine, std::uint32_t k0);

    std::uint32_t k0() const { return k0_; }
    const engine::PrimeIndexer& engine() const { return engine_; }

    std::uint64_t first_index(std::uint32_t nu) const;  // prime index of the rotation's first prime
    std::uint64_t size(std::uint32_t nu) const { return first_index(nu + 1) - first_index(nu); }
    std::uint32_t rotation_of(std::uint64_t prime) const;  // 0 for the skipped primes
    std::uint64_t prime_at(std::uint32_t nu, std::uint64_t mu) const;  // L_ν[μ], μ >= 1
    std::uint64_t position(std::uint32_t nu, std::uint64_t prime) const;  // μ of a prime (may run past the rotation)

private:
    const engine::PrimeIndexer& engine_;
    std::uint32_t k0_;
};

// z(ν, μ, k, q) = [(a, b), (p_q(a), p_q(b))] with a = L_ν[μ], b = L_ν[μ+k]:
// the region between the rays through a and b, from rotation ν to ν+q.
struct Trapezoid {
    std::uint32_t nu = 0;
    std::uint64_t mu = 0;
    std::uint64_t k = 0;
    std::uint32_t q = 0;
    std::array<std::uint64_t, 2> inner{0, 0};
    std::array<std::uint64_t, 2> outer{0, 0};

    bool elementary() const { return k == 1 && q == 1; }
    std::string to_string() const;  // "[(113, 127), (617, 709)]"
    friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

// Throws DegenerateInputError for k = 0 or q = 0 and RangeError when μ is
// outside rotation ν.
Trapezoid trapezoid(const RotationIndex& index, std::uint32_t nu, std::uint64_t mu, std::uint64_t k, std::uint32_t q);

// One step of the formation rule for a trapezoid of width 1 and depth q:
//   z(ν, μ, 1, q) = z(ν, μ, 1, 1) ∪ z(ν+1, μ₁, α+1, q−1),
// with μ₁ the position of p(a) on rotation ν+1 and α = b − a − 1.
struct ThreeRetSplit {
    Trapezoid elementary;
    Trapezoid composite;  // only meaningful when q >= 2
    std::uint64_t alpha = 0;
};
ThreeRetSplit split_first_rotation(const RotationIndex& index, const Trapezoid& t);

// z(ν, μ, k, 1) = ∪_{i<k} z(ν, μ+i, 1, 1).
std::vector<Trapezoid> split_width(const RotationIndex& index, const Trapezoid& t);

// Full decomposition into elementary trapezoids, ordered along the ray
// through the first inner corner (rotation by rotation).
std::vector<Trapezoid> decompose(const RotationIndex& index, const Trapezoid& t);

// Index-arithmetic check that `pieces` tile `t`: on every rotation level the
// inner prime-index intervals of the pieces are consecutive, disjoint and
// cover exactly [π(p_j(a)), π(p_j(b))], and every outer corner is p(inner).
struct TilingCheck {
    std::size_t pieces = 0;
    std::size_t levels = 0;
    bool disjoint = true;
    bool exact = true;
    bool corners_on_rays = true;
    bool holds() const { return disjoint && exact && corners_on_rays; }
};
TilingCheck check_tiling(const RotationIndex& index, const Trapezoid& t, const std::vector<Trapezoid>& pieces);

}  // namespace primeweb::web
