#pragma once

#include <cstdint>

#include "primeweb/sequences/filter_set.hpp"

namespace primeweb::laws {

// ζ(s, m) in both forms, truncated at `bound`:
//   sum     = 1 + Σ_{n ∈ N_m, n <= bound} n^{-s}
//   product = Π_{ray primes p <= bound} (1 − p^{-s})^{-1}
// Both truncations lie below the common limit; the tails bound how far.
struct ZetaRay {
    std::uint64_t m = 0;
    double s = 0.0;
    std::uint64_t bound = 0;
    double sum = 1.0;
    double product = 1.0;
    double sum_tail = 0.0;      // limit − sum <= sum_tail
    double product_tail = 0.0;  // limit − product <= product_tail
    std::size_t primes = 0;
    std::size_t sum_terms = 0;
    bool consistent() const;    // |sum − product| within the larger tail
};

// Requires s > 1 and m a generator of the prime family.
ZetaRay zeta_ray(const seq::FilterSet& primes, double s, std::uint64_t m, std::uint64_t bound);

// Product of ζ(s, m) over generators m <= generator_bound, each truncated to
// ray primes <= prime_bound. The logarithms of the factors are accumulated
// exactly, so the value does not depend on how the primes are grouped; the
// plain Euler product over the same primes is computed the same way and the
// two are compared bit for bit.
struct ZetaGlobal {
    double s = 0.0;
    double value = 0.0;
    double euler_value = 0.0;      // Π over all primes <= prime_bound
    bool covers_all_primes = false;  // every prime <= prime_bound was reached
    bool bit_equal = false;        // value == euler_value (only meaningful with full cover)
    std::size_t rays = 0;
    std::size_t primes = 0;
    double truncation_bound = 0.0;  // ζ(s) − value <= truncation_bound (full cover only)
};

ZetaGlobal zeta_global(const seq::FilterSet& primes, double s, std::uint64_t generator_bound,
                       std::uint64_t prime_bound);

}  // namespace primeweb::laws
