#pragma once

#include <cstdint>

namespace primeweb::engine {

// Exact π(x) by the Legendre-family recurrence on the values floor(x/k)
// (Lucy_Hedgehog's formulation): S(v, p) = S(v, p-1) - [S(v/p, p-1) - S(p-1, p-1)].
// Time O(x^{3/4}), memory O(sqrt x).
std::uint64_t count_primes_sublinear(std::uint64_t x);

}  // namespace primeweb::engine
