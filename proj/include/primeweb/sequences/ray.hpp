#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "primeweb/sequences/filter_set.hpp"

namespace primeweb::seq {

// An Eratosthenes progression a(n+1) = g(a(n)) from a generator a(0) ∈ B̄.
// Depth n > 0 is a(n); depth 0 is the generator; negative depths follow the
// cyclic-group extension g₋ₙ(a0) = −gₙ(a0).
struct Ray {
    FamilyId family = FamilyId::P;
    std::uint64_t generator = 1;
    std::vector<std::uint64_t> elements;  // depths 1..elements.size()
    // Set when extension stopped because the next element exceeds this bound.
    std::optional<std::uint64_t> truncated_at;

    std::size_t depth() const { return elements.size(); }
    bool truncated() const { return truncated_at.has_value(); }
    // Signed value at any materialized depth; throws RangeError otherwise.
    std::int64_t value_at(std::int64_t depth) const;
    // 1-based depth of a stored element, if present.
    std::optional<std::size_t> depth_of(std::uint64_t value) const;
};

// Materializes depths 1..depth. With a bound, stops early (and records the
// truncation) once the next element would exceed it.
Ray extend_ray(const FilterSet& family, std::uint64_t a0, std::size_t depth,
               std::optional<std::uint64_t> bound = std::nullopt);

// gₙ₁(gₙ₂(a0)). When both the intermediate and the final depth are
// non-negative, the value is produced by actually applying g (or its inverse
// g₋₁) |n1| times to gₙ₂(a0) and checked against gₙ₁₊ₙ₂(a0); otherwise the
// group law gives gₙ₁₊ₙ₂(a0) directly.
std::int64_t depth_compose(const FilterSet& family, std::uint64_t a0, std::int64_t n1, std::int64_t n2);

// General counting progression for an arbitrary counting function g:
// returns a(1..depth) with a(n+1) = g(a(n)).
std::vector<std::uint64_t> counting_progression(const std::function<std::uint64_t(std::uint64_t)>& g,
                                                std::uint64_t a0, std::size_t depth);

}  // namespace primeweb::seq
