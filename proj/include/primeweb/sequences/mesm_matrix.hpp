#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "primeweb/sequences/ray.hpp"

namespace primeweb::seq {

// Row-stacked rays over ascending generators; the rows partition the family
// (every member appears in exactly one row).
struct MesmMatrix {
    FamilyId family = FamilyId::P;
    std::size_t columns = 0;                  // requested depth per row
    std::optional<std::uint64_t> value_bound;  // rows stop before exceeding it
    std::vector<Ray> rows;                     // ascending generators
    std::uint64_t coverage_bound = 0;          // set once a partition check passed

    const Ray& row_of(std::uint64_t generator) const;  // throws NotAMemberError
};

// First `rows` generators of B̄, each extended to `cols` elements (or until
// the value bound). Rows are built on up to `threads` workers; the result
// does not depend on the thread count.
MesmMatrix build_matrix(const FilterSet& family, std::size_t rows, std::size_t cols,
                        std::optional<std::uint64_t> bound = std::nullopt, unsigned threads = 1);

MesmMatrix build_matrix_for(const FilterSet& family, const std::vector<std::uint64_t>& generators, std::size_t cols,
                            std::optional<std::uint64_t> bound = std::nullopt, unsigned threads = 1);

// CSV (RFC 4180): header "generator,d1,...,dk"; one row per generator.
// Depths beyond a value bound are written as ">bound".
std::string to_csv(const MesmMatrix& m);

// JSON with stable key order; every element carries its (generator, depth)
// address.
nlohmann::ordered_json to_json(const MesmMatrix& m);

}  // namespace primeweb::seq
