#pragma once

#include <cstdint>
#include <vector>

#include "primeweb/sequences/filter_set.hpp"

namespace primeweb::seq {

// N_m: all products of powers of the primes on the ray of generator m that
// do not exceed bound, ascending. Distinct factorizations give distinct
// products, so there are no duplicates.
std::vector<std::uint64_t> multiplicative_set(const FilterSet& primes, std::uint64_t m, std::uint64_t bound);

// Counting progression over the odd numbers (counting function 2n − 1)
// started at 2: 3, 5, 9, 17, 33, ... (each term is 2^k + 1).
std::vector<std::uint64_t> pisot_example(std::size_t depth);

}  // namespace primeweb::seq
