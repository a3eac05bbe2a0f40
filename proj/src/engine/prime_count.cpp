#include "primeweb/engine/prime_count.hpp"

#include <vector>

#include "primeweb/engine/primality.hpp"

namespace primeweb::engine {

std::uint64_t count_primes_sublinear(std::uint64_t x) {
    if (x < 2) return 0;
    const std::uint64_t r = isqrt(x);
    // small[v] = S(v) for v <= r; large[i] = S(x / i) for i <= r.
    // Start with the count of integers in [2, v].
    std::vector<std::uint64_t> small(r + 1);
    std::vector<std::uint64_t> large(r + 1);
    for (std::uint64_t v = 0; v <= r; ++v) small[v] = v > 0 ? v - 1 : 0;
    for (std::uint64_t i = 1; i <= r; ++i) large[i] = x / i - 1;

    for (std::uint64_t p = 2; p <= r; ++p) {
        if (small[p] == small[p - 1]) continue;  // p composite
        const std::uint64_t sp = small[p - 1];
        const std::uint64_t p2 = p * p;
        // large entries: v = x / i >= p^2  <=>  i <= x / p^2
        const std::uint64_t i_end = std::min(r, x / p2);
        const std::uint64_t direct_end = std::min(i_end, r / p);  // i*p <= r: use large[i*p]
        for (std::uint64_t i = 1; i <= direct_end; ++i) large[i] -= large[i * p] - sp;
        const std::uint64_t xp = x / p;
        for (std::uint64_t i = direct_end + 1; i <= i_end; ++i) large[i] -= small[xp / i] - sp;
        for (std::uint64_t v = r; v >= p2; --v) small[v] -= small[v / p] - sp;
    }
    return large[1];
}

}  // namespace primeweb::engine
