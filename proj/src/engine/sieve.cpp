#include "primeweb/engine/sieve.hpp"

#include <algorithm>

namespace primeweb::engine {

std::vector<std::uint32_t> simple_sieve(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit <= 2) return primes;
    primes.push_back(2);
    // index i <-> 2i + 1
    std::vector<std::uint8_t> composite((limit + 1) / 2, 0);
    for (std::uint64_t i = 1; i < composite.size(); ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        primes.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t j = (p * p) / 2; j < composite.size(); j += p) composite[j] = 1;
    }
    return primes;
}

SieveBlock::SieveBlock(std::uint64_t lo, std::uint64_t len, std::span<const std::uint32_t> base_primes)
    : lo_(lo), len_(len) {
    const std::uint64_t hi = lo + len;
    first_odd_ = std::max<std::uint64_t>(lo, 3);
    if (first_odd_ % 2 == 0) ++first_odd_;
    if (first_odd_ >= hi) return;
    const std::uint64_t n = (hi - first_odd_ + 1) / 2;
    odd_flags_.assign(n, 1);

    for (std::size_t k = 1; k < base_primes.size(); ++k) {
        const std::uint64_t p = base_primes[k];
        if (p * p >= hi) break;
        std::uint64_t start = std::max(p * p, (first_odd_ + p - 1) / p * p);
        if (start % 2 == 0) start += p;
        for (std::uint64_t j = (start - first_odd_) / 2; j < n; j += p) odd_flags_[j] = 0;
    }
}

bool SieveBlock::is_prime(std::uint64_t x) const {
    if (x == 2) return lo_ <= 2 && 2 < hi();
    if (x < first_odd_ || x >= hi() || x % 2 == 0) return false;
    return odd_flags_[(x - first_odd_) / 2] != 0;
}

std::uint64_t SieveBlock::count() const {
    std::uint64_t c = static_cast<std::uint64_t>(std::count(odd_flags_.begin(), odd_flags_.end(), 1));
    if (lo_ <= 2 && 2 < hi()) ++c;
    return c;
}

std::uint64_t SieveBlock::count_below(std::uint64_t x) const {
    x = std::min(x, hi());
    std::uint64_t c = 0;
    if (lo_ <= 2 && 2 < x) ++c;
    if (x > first_odd_) {
        const std::size_t end = std::min<std::size_t>((x - first_odd_ + 1) / 2, odd_flags_.size());
        c += static_cast<std::uint64_t>(std::count(odd_flags_.begin(), odd_flags_.begin() + static_cast<std::ptrdiff_t>(end), 1));
    }
    return c;
}

std::vector<std::uint64_t> SieveBlock::primes() const {
    std::vector<std::uint64_t> out;
    for_each_prime([&](std::uint64_t p) { out.push_back(p); });
    return out;
}

}  // namespace primeweb::engine
