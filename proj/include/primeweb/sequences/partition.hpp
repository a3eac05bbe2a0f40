#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "primeweb/sequences/filter_set.hpp"

namespace primeweb::seq {

// Matrix address of a member: the row's generator and the 1-based depth.
struct Address {
    std::uint64_t generator = 0;
    std::uint32_t depth = 0;
    friend bool operator==(const Address&, const Address&) = default;
};

struct PartitionReport {
    FamilyId family = FamilyId::P;
    std::uint64_t bound = 0;
    std::uint64_t members = 0;           // members <= bound
    std::uint64_t uncovered = 0;         // reached by no ray
    std::uint64_t multiply_covered = 0;  // reached by more than one ray
    std::uint64_t address_mismatches = 0;
    std::vector<std::pair<std::uint64_t, Address>> addresses;  // ascending by value

    bool exact() const { return uncovered == 0 && multiply_covered == 0 && address_mismatches == 0; }
};

// Checks that the rays over B̄ partition the members <= bound. Two routes are
// compared: (1) the address of each member from its index (g₋₁ chain back to
// a generator), (2) forward iteration of every generator ray.
PartitionReport verify_partition(const FilterSet& family, std::uint64_t bound, bool keep_addresses = true);

// Address of a member by walking g₋₁ until a generator is reached.
Address address_of(const FilterSet& family, std::uint64_t member);

struct IntervalIdentity {
    std::uint64_t lower = 0, upper = 0;            // the two addressed values, ordered
    std::uint64_t members_between = 0;             // strictly between them
    std::uint64_t predecessor1 = 0, predecessor2 = 0;  // values one depth up
    std::int64_t expected = 0;                     // |pred1 - pred2| - 1
    bool holds() const { return static_cast<std::int64_t>(members_between) == expected; }
};

// Count of members strictly between a(μ₁,ν₁) and a(μ₂,ν₂) against
// |a(μ₁,ν₁−1) − a(μ₂,ν₂−1)| − 1. Identical addresses are rejected.
IntervalIdentity interval_count_identity(const FilterSet& family, Address a1, Address a2);

struct FirstIdentity {
    std::uint64_t generator = 0;
    std::uint64_t first = 0;                 // a(μ,1) = g(a0)
    std::uint64_t members_below_first = 0;   // #A-members < a(μ,1)
    bool consistent_form = false;  // members_below_first == a0 - 1
    bool printed_form = false;     // members_below_first == a(μ,1) - 1 (as printed; fails)
};

FirstIdentity first_identity(const FilterSet& family, std::uint64_t generator);

struct RowImage {
    std::uint64_t base_value = 0;   // gₙ(1)
    bool stripped_to_one = false;   // n applications of g₋₁ to gₙ(1) return 1
    std::uint64_t image = 0;        // gₙ(a0)
};

// The row of a0 as the image of the row of 1: strip n levels from gₙ(1) by
// g₋₁, then re-apply g n times starting at a0.
RowImage row_isomorphism(const FilterSet& family, std::uint64_t a0, std::uint32_t n);

}  // namespace primeweb::seq
