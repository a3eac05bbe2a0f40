#pragma once

#include <cstdint>

namespace primeweb::engine {

__extension__ using uint128 = unsigned __int128;

// Deterministic Miller-Rabin for the full 64-bit range, using the
// seven-base witness set of Jim Sinclair (valid for all n < 2^64).
bool is_prime_u64(std::uint64_t n);

// (a * b) mod m without overflow.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<uint128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// floor(sqrt(n)) exactly.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace primeweb::engine
