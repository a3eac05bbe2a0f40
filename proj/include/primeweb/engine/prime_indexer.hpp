#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "primeweb/engine/sieve.hpp"

namespace primeweb::engine {

struct IndexerConfig {
    std::uint64_t hard_limit = std::uint64_t{1} << 46;
    std::uint64_t sieve_segment_size = std::uint64_t{1} << 20;
    // Primes below this are kept in memory (also the base primes for every
    // segmented sieve, so it must exceed sqrt(hard_limit)).
    std::uint32_t table_limit = std::uint32_t{1} << 24;
    // Up to this value π is answered from lazily sieved block counts;
    // above it the sublinear count is used.
    std::uint64_t checkpoint_limit = std::uint64_t{1} << 32;
    // When x <= cross_check_limit, every sublinear count is also sieved and
    // compared (an internal consistency check; 0 disables it).
    std::uint64_t cross_check_limit = 0;
};

// Sieve-backed and count-backed provider of p(n), π(x), primality and μ(k).
// All queries are const and safe to call concurrently; the memo tables are
// guarded by a mutex.
class PrimeIndexer {
public:
    explicit PrimeIndexer(IndexerConfig config = {});

    const IndexerConfig& config() const { return config_; }
    std::uint64_t hard_limit() const { return config_.hard_limit; }

    // Primes p with lo <= p < hi.
    std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) const;

    // Calls f(p) for every prime lo <= p < hi, in order.
    template <class F>
    void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f) const {
        check_range(lo, hi);
        for (std::uint64_t b = lo; b < hi; b += config_.sieve_segment_size) {
            const std::uint64_t len = std::min(config_.sieve_segment_size, hi - b);
            SieveBlock(b, len, small_primes_).for_each_prime(f);
        }
    }

    std::uint64_t nth_prime(std::uint64_t n) const;
    // nth prime if it does not exceed bound, otherwise nullopt.
    std::optional<std::uint64_t> nth_prime_bounded(std::uint64_t n, std::uint64_t bound) const;

    // p(n) for an ascending list of indices, by one streaming sieve pass.
    std::vector<std::uint64_t> nth_primes(const std::vector<std::uint64_t>& ascending_indices) const;

    std::uint64_t prime_pi(std::uint64_t x) const;
    std::uint64_t prime_index(std::uint64_t p) const;  // throws NotAMemberError
    bool is_prime(std::uint64_t x) const;
    int mobius(std::uint64_t k) const;

    // Reference counts, independent of the fast paths.
    std::uint64_t prime_pi_by_sieve(std::uint64_t x) const;
    std::uint64_t prime_pi_sublinear(std::uint64_t x) const;

    std::span<const std::uint32_t> small_primes() const { return small_primes_; }

private:
    void check_range(std::uint64_t lo, std::uint64_t hi) const;
    std::uint64_t pi_checkpointed(std::uint64_t x) const;
    std::uint64_t nth_checkpointed(std::uint64_t n) const;
    std::uint64_t nth_by_count(std::uint64_t n) const;
    // Extend block counts until they cover `x` or reach `count` primes.
    void extend_checkpoints(std::uint64_t x, std::uint64_t count) const;
    std::uint64_t checkpoint_end() const;  // value covered by the checkpoints (exclusive)

    IndexerConfig config_;
    std::vector<std::uint32_t> small_primes_;

    mutable std::mutex memo_mutex_;
    mutable std::map<std::uint64_t, std::uint64_t> pi_memo_;

    mutable std::mutex checkpoint_mutex_;
    // cumulative_[b] = π(table_limit + (b+1)*segment - 1), blocks start at table_limit
    mutable std::vector<std::uint64_t> cumulative_;
};

}  // namespace primeweb::engine
