#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace primeweb::engine {

// Primes below `limit` by a plain odd-only sieve.
std::vector<std::uint32_t> simple_sieve(std::uint32_t limit);

// Primality flags for the half-open range [lo, lo + len). Only odd positions
// are stored; 2 is handled explicitly. The base primes must cover
// sqrt(lo + len - 1).
class SieveBlock {
public:
    SieveBlock(std::uint64_t lo, std::uint64_t len, std::span<const std::uint32_t> base_primes);

    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return lo_ + len_; }

    bool is_prime(std::uint64_t x) const;
    std::uint64_t count() const;
    std::uint64_t count_below(std::uint64_t x) const;  // primes in [lo, x)
    std::vector<std::uint64_t> primes() const;

    template <class F>
    void for_each_prime(F&& f) const {
        if (lo_ <= 2 && 2 < hi()) f(std::uint64_t{2});
        for (std::size_t i = 0; i < odd_flags_.size(); ++i) {
            if (odd_flags_[i]) f(first_odd_ + 2 * i);
        }
    }

private:
    std::uint64_t lo_;
    std::uint64_t len_;
    std::uint64_t first_odd_;            // smallest odd >= max(lo, 3)
    std::vector<std::uint8_t> odd_flags_;  // flag i <-> first_odd_ + 2i
};

}  // namespace primeweb::engine
