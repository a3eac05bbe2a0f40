#include "primeweb/engine/prime_indexer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "primeweb/engine/prime_count.hpp"
#include "primeweb/engine/primality.hpp"
#include "primeweb/errors.hpp"
#include "primeweb/numeric/log_integral.hpp"
#include "primeweb/numeric/roots.hpp"

namespace primeweb::engine {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

// x with R(x) ~ n; only a starting point for the exact count.
double invert_riemann_r(std::uint64_t n) {
    const double dn = static_cast<double>(n);
    const double ln = std::log(dn);
    const double lln = std::log(ln);
    const double lo = std::max(2.0, dn * (ln + lln - 1.5));
    const double hi = dn * (ln + lln) + 64.0;
    const auto spec = numeric::log_integral_spec();
    auto f = [&](double x) { return numeric::riemann_r(x, spec).value - dn; };
    return numeric::solve_bracketed(f, {lo, hi}, 0.5);
}

}  // namespace

PrimeIndexer::PrimeIndexer(IndexerConfig config) : config_(config) {
    if (config_.sieve_segment_size < 64) throw DomainError("sieve_segment_size too small");
    const auto table_sq = static_cast<uint128>(config_.table_limit) * config_.table_limit;
    if (table_sq <= config_.hard_limit) {
        throw DomainError("table_limit must exceed sqrt(hard_limit)");
    }
    small_primes_ = simple_sieve(config_.table_limit);
}

void PrimeIndexer::check_range(std::uint64_t lo, std::uint64_t hi) const {
    if (lo > hi) throw DomainError("range: lo > hi");
    if (hi > config_.hard_limit + 1) {
        throw CapacityError("range end " + num(hi) + " exceeds hard limit " + num(config_.hard_limit));
    }
}

std::vector<std::uint64_t> PrimeIndexer::primes_in_range(std::uint64_t lo, std::uint64_t hi) const {
    std::vector<std::uint64_t> out;
    for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

bool PrimeIndexer::is_prime(std::uint64_t x) const {
    if (x < config_.table_limit) {
        return std::binary_search(small_primes_.begin(), small_primes_.end(), static_cast<std::uint32_t>(x));
    }
    return is_prime_u64(x);
}

int PrimeIndexer::mobius(std::uint64_t k) const {
    if (k == 0) throw DomainError("mobius: k must be positive");
    int sign = 1;
    for (std::uint64_t p : small_primes_) {
        if (p * p > k) break;
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        sign = -sign;
    }
    if (k > 1) {
        const std::uint64_t last = small_primes_.back();
        if (k / last > last) throw CapacityError("mobius: argument too large to factor");
        sign = -sign;
    }
    return sign;
}

std::uint64_t PrimeIndexer::checkpoint_end() const {
    return config_.table_limit + cumulative_.size() * config_.sieve_segment_size;
}

void PrimeIndexer::extend_checkpoints(std::uint64_t x, std::uint64_t count) const {
    // caller holds checkpoint_mutex_
    const std::uint64_t seg = config_.sieve_segment_size;
    while (checkpoint_end() <= x && checkpoint_end() < config_.checkpoint_limit) {
        if (!cumulative_.empty() && cumulative_.back() >= count) break;
        const std::uint64_t base = cumulative_.empty() ? small_primes_.size() : cumulative_.back();
        cumulative_.push_back(base + SieveBlock(checkpoint_end(), seg, small_primes_).count());
    }
}

std::uint64_t PrimeIndexer::pi_checkpointed(std::uint64_t x) const {
    const std::uint64_t seg = config_.sieve_segment_size;
    const std::uint64_t b = (x - config_.table_limit) / seg;
    std::uint64_t base = 0;
    {
        std::lock_guard lock(checkpoint_mutex_);
        extend_checkpoints(config_.table_limit + b * seg, UINT64_MAX);
        base = b == 0 ? small_primes_.size() : cumulative_[b - 1];
    }
    return base + SieveBlock(config_.table_limit + b * seg, seg, small_primes_).count_below(x + 1);
}

std::uint64_t PrimeIndexer::prime_pi(std::uint64_t x) const {
    if (x > config_.hard_limit) throw CapacityError("prime_pi: " + num(x) + " exceeds hard limit");
    if (x < config_.table_limit) {
        return static_cast<std::uint64_t>(
            std::upper_bound(small_primes_.begin(), small_primes_.end(), static_cast<std::uint32_t>(x)) -
            small_primes_.begin());
    }
    if (x < config_.checkpoint_limit) return pi_checkpointed(x);
    return prime_pi_sublinear(x);
}

std::uint64_t PrimeIndexer::prime_pi_sublinear(std::uint64_t x) const {
    if (x > config_.hard_limit) throw CapacityError("prime_pi: " + num(x) + " exceeds hard limit");
    {
        std::lock_guard lock(memo_mutex_);
        if (auto it = pi_memo_.find(x); it != pi_memo_.end()) return it->second;
    }
    const std::uint64_t c = count_primes_sublinear(x);
    if (x <= config_.cross_check_limit && c != prime_pi_by_sieve(x)) {
        throw NumericalError("prime_pi cross-check failed at " + num(x));
    }
    std::lock_guard lock(memo_mutex_);
    pi_memo_.emplace(x, c);
    return c;
}

std::uint64_t PrimeIndexer::prime_pi_by_sieve(std::uint64_t x) const {
    if (x > config_.hard_limit) throw CapacityError("prime_pi: " + num(x) + " exceeds hard limit");
    std::uint64_t c = 0;
    for_each_prime(0, x + 1, [&](std::uint64_t) { ++c; });
    return c;
}

std::uint64_t PrimeIndexer::prime_index(std::uint64_t p) const {
    if (!is_prime(p)) throw NotAMemberError(num(p) + " is not prime");
    return prime_pi(p);
}

std::uint64_t PrimeIndexer::nth_checkpointed(std::uint64_t n) const {
    const std::uint64_t seg = config_.sieve_segment_size;
    std::uint64_t b = 0;
    std::uint64_t base = 0;
    {
        std::lock_guard lock(checkpoint_mutex_);
        extend_checkpoints(UINT64_MAX, n);
        if (cumulative_.empty() || cumulative_.back() < n) return 0;
        b = static_cast<std::uint64_t>(std::lower_bound(cumulative_.begin(), cumulative_.end(), n) -
                                       cumulative_.begin());
        base = b == 0 ? small_primes_.size() : cumulative_[b - 1];
    }
    std::uint64_t k = base;
    std::uint64_t found = 0;
    SieveBlock(config_.table_limit + b * seg, seg, small_primes_).for_each_prime([&](std::uint64_t p) {
        if (++k == n) found = p;
    });
    return found;
}

std::uint64_t PrimeIndexer::nth_by_count(std::uint64_t n) const {
    const double guess = invert_riemann_r(n);
    // The R-inverse is accurate to far better than this margin at every
    // supported size, so a guess this far out means the answer is too.
    if (guess > static_cast<double>(config_.hard_limit) * (1.0 + 1e-6)) {
        throw CapacityError("nth_prime(" + num(n) + ") exceeds hard limit " + num(config_.hard_limit));
    }
    const std::uint64_t seg = config_.sieve_segment_size;
    const std::uint64_t x = std::min(static_cast<std::uint64_t>(guess), config_.hard_limit);
    std::uint64_t c = prime_pi(x);  // primes <= x
    if (c >= n) {
        std::uint64_t hi = x + 1;
        while (true) {
            const std::uint64_t lo = hi > seg + 2 ? hi - seg : 2;
            const SieveBlock block(lo, hi - lo, small_primes_);
            const std::uint64_t cnt = block.count();
            if (c - cnt < n) {
                const auto ps = block.primes();
                return ps[n - (c - cnt) - 1];
            }
            c -= cnt;
            hi = lo;
        }
    }
    std::uint64_t lo = x + 1;
    while (true) {
        if (lo > config_.hard_limit) {
            throw CapacityError("nth_prime(" + num(n) + ") exceeds hard limit " + num(config_.hard_limit));
        }
        const std::uint64_t len = std::min(seg, config_.hard_limit + 1 - lo);
        const SieveBlock block(lo, len, small_primes_);
        const std::uint64_t cnt = block.count();
        if (c + cnt >= n) {
            const auto ps = block.primes();
            return ps[n - c - 1];
        }
        c += cnt;
        lo += len;
    }
}

std::uint64_t PrimeIndexer::nth_prime(std::uint64_t n) const {
    if (n == 0) throw DomainError("nth_prime: n must be positive");
    if (n <= small_primes_.size()) return small_primes_[n - 1];
    // Sieve checkpoints only when the answer is known to lie below their limit.
    if (n <= prime_pi_sublinear(std::min(config_.checkpoint_limit - 1, config_.hard_limit))) {
        const std::uint64_t p = nth_checkpointed(n);
        if (p > config_.hard_limit) throw CapacityError("nth_prime(" + num(n) + ") exceeds hard limit");
        if (p != 0) return p;
    }
    return nth_by_count(n);
}

std::vector<std::uint64_t> PrimeIndexer::nth_primes(const std::vector<std::uint64_t>& ascending_indices) const {
    std::vector<std::uint64_t> out;
    if (ascending_indices.empty()) return out;
    if (!std::is_sorted(ascending_indices.begin(), ascending_indices.end()) || ascending_indices.front() == 0) {
        throw DomainError("nth_primes: indices must be positive and ascending");
    }
    out.reserve(ascending_indices.size());
    std::uint64_t p = nth_prime(ascending_indices.front());
    std::uint64_t n = ascending_indices.front();
    std::size_t i = 0;
    while (i < ascending_indices.size() && ascending_indices[i] == n) {
        out.push_back(p);
        ++i;
    }
    std::uint64_t lo = p + 1;
    const std::uint64_t seg = config_.sieve_segment_size;
    while (i < ascending_indices.size()) {
        if (lo > config_.hard_limit) throw CapacityError("nth_primes: index beyond hard limit");
        const std::uint64_t len = std::min(seg, config_.hard_limit + 1 - lo);
        SieveBlock(lo, len, small_primes_).for_each_prime([&](std::uint64_t q) {
            ++n;
            while (i < ascending_indices.size() && ascending_indices[i] == n) {
                out.push_back(q);
                ++i;
            }
        });
        lo += len;
    }
    return out;
}

std::optional<std::uint64_t> PrimeIndexer::nth_prime_bounded(std::uint64_t n, std::uint64_t bound) const {
    if (n == 0) throw DomainError("nth_prime: n must be positive");
    bound = std::min(bound, config_.hard_limit);
    if (n > prime_pi(bound)) return std::nullopt;
    return nth_prime(n);
}

}  // namespace primeweb::engine
