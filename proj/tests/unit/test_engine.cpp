#include <doctest.h>

#include <memory>
#include <random>
#include <thread>
#include <vector>

#include "primeweb/engine/primality.hpp"
#include "primeweb/engine/prime_count.hpp"
#include "primeweb/engine/prime_indexer.hpp"
#include "primeweb/engine/sieve.hpp"
#include "primeweb/errors.hpp"

using namespace primeweb;
using namespace primeweb::engine;

namespace {

bool trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Plain byte sieve over [0, n], written independently of the engine.
std::vector<std::uint64_t> reference_primes(std::uint64_t n) {
    std::vector<char> c(n + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (c[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) c[j] = 1;
    }
    return out;
}

const PrimeIndexer& shared_indexer() {
    static const PrimeIndexer idx;
    return idx;
}

}  // namespace

TEST_CASE("primes_in_range") {
    const auto& idx = shared_indexer();
    CHECK(idx.primes_in_range(0, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(idx.primes_in_range(113, 128) == std::vector<std::uint64_t>{113, 127});
    CHECK(idx.primes_in_range(24, 29).empty());
    CHECK(idx.primes_in_range(2, 3) == std::vector<std::uint64_t>{2});
    CHECK(idx.primes_in_range(7, 7).empty());
    CHECK_THROWS_AS(idx.primes_in_range(0, idx.hard_limit() + 2), CapacityError);
}

TEST_CASE("sieve blocks agree with trial division") {
    const auto base = simple_sieve(1u << 16);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> start(0, std::uint64_t{1} << 32);
    for (int t = 0; t < 20; ++t) {
        const std::uint64_t lo = start(rng);
        const SieveBlock block(lo, 2000, base);
        for (std::uint64_t x = lo; x < lo + 2000; ++x) CHECK(block.is_prime(x) == trial_division(x));
    }
    const SieveBlock low(0, 100, base);
    CHECK(low.count() == 25);
    CHECK(low.count_below(10) == 4);
}

TEST_CASE("nth_prime") {
    const auto& idx = shared_indexer();
    CHECK(idx.nth_prime(1) == 2);
    CHECK(idx.nth_prime(31) == 127);
    CHECK(idx.nth_prime(127) == 709);
    CHECK(idx.nth_prime(5381) == 52711);
    CHECK(idx.nth_prime(648391) == 9737333);
    CHECK(idx.nth_prime(9737333) == 174440041);
    CHECK(idx.nth_prime(174440041) == 3657500101);
    CHECK_THROWS_AS(idx.nth_prime(0), DomainError);
}

TEST_CASE("nth_prime beyond the sieve checkpoints uses count-then-refine") {
    IndexerConfig cfg;
    cfg.checkpoint_limit = std::uint64_t{1} << 25;
    const PrimeIndexer idx(cfg);
    CHECK(idx.nth_prime(174440041) == 3657500101);
    CHECK(idx.nth_prime(3657500101) == 88362852307);
    CHECK(idx.nth_prime(88362852307) == 2428095424619);
    // the next ray-1 value (~7.5e13) lies above the default hard limit 2^46
    CHECK_THROWS_AS(idx.nth_prime(2428095424619), CapacityError);
    // both walking directions of the refinement around the R-inverse guess
    const auto ref = reference_primes(40'000'000);
    for (std::uint64_t n : {2'100'000ull, 2'100'001ull, 2'200'017ull, 2'400'000ull}) CHECK(idx.nth_prime(n) == ref[n - 1]);
}

TEST_CASE("prime_pi") {
    const auto& idx = shared_indexer();
    CHECK(idx.prime_pi(0) == 0);
    CHECK(idx.prime_pi(1) == 0);
    CHECK(idx.prime_pi(2) == 1);
    CHECK(idx.prime_pi(10) == 4);
    CHECK(idx.prime_pi(709) == 127);
    CHECK(idx.prime_pi(5381) == 709);
    CHECK(idx.prime_pi(1'000'000'000) == 50847534);
    CHECK(idx.prime_pi(10'000'000'000ull) == 455052511);
    CHECK_THROWS_AS(idx.prime_pi(idx.hard_limit() + 1), CapacityError);
}

TEST_CASE("sublinear count equals sieve count") {
    const auto& idx = shared_indexer();
    const auto ref = reference_primes(1'000'000);
    for (std::uint64_t x : {0ull, 1ull, 2ull, 3ull, 4ull, 100ull, 65536ull, 999'983ull, 1'000'000ull}) {
        const auto expected = static_cast<std::uint64_t>(std::upper_bound(ref.begin(), ref.end(), x) - ref.begin());
        CHECK(count_primes_sublinear(x) == expected);
    }
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> small(1, 100'000'000);
    for (int i = 0; i < 20; ++i) {
        const auto x = small(rng);
        CHECK(idx.prime_pi_sublinear(x) == idx.prime_pi_by_sieve(x));
    }
    std::uniform_int_distribution<std::uint64_t> big(100'000'000, 1'000'000'000);
    for (int i = 0; i < 3; ++i) {
        const auto x = big(rng);
        CHECK(idx.prime_pi_sublinear(x) == idx.prime_pi_by_sieve(x));
    }
}

TEST_CASE("cross-check mode verifies sublinear counts against the sieve") {
    IndexerConfig cfg;
    cfg.checkpoint_limit = std::uint64_t{1} << 24;
    cfg.cross_check_limit = 50'000'000;
    const PrimeIndexer idx(cfg);
    CHECK(idx.prime_pi(40'000'000) == 2433654);
}

TEST_CASE("prime_index round trips exhaustively to 1e6 and on random indices to 1e7") {
    const auto& idx = shared_indexer();
    const auto ref = reference_primes(15'485'863);
    for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
        REQUIRE(idx.prime_pi(ref[n - 1]) == n);
    }
    CHECK(ref[999'999] == 15485863);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::uint64_t> pick(1, 10'000'000);
    std::uint64_t last_n = 0;
    std::uint64_t last_p = 0;
    std::vector<std::uint64_t> ns;
    for (int i = 0; i < 10'000; ++i) ns.push_back(pick(rng));
    std::sort(ns.begin(), ns.end());
    for (auto n : ns) {
        const auto p = idx.nth_prime(n);
        REQUIRE(idx.prime_index(p) == n);
        if (n > last_n) CHECK(p > last_p);
        last_n = n;
        last_p = p;
    }
    CHECK(idx.prime_index(2) == 1);
    CHECK(idx.prime_index(5381) == 709);
    CHECK_THROWS_AS(idx.prime_index(6), NotAMemberError);
}

TEST_CASE("is_prime") {
    const auto& idx = shared_indexer();
    CHECK(idx.is_prime(2));
    CHECK_FALSE(idx.is_prime(1));
    CHECK_FALSE(idx.is_prime(0));
    CHECK(idx.is_prime(746497));
    CHECK(idx.is_prime(2428095424619ull));
    CHECK_FALSE(idx.is_prime(3215031751ull));       // strong pseudoprime to bases 2,3,5,7
    CHECK_FALSE(idx.is_prime(3825123056546413051ull));  // strong pseudoprime to the first nine prime bases
    CHECK(is_prime_u64(18446744073709551557ull));   // largest 64-bit prime
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::uint64_t> pick(1, 4'000'000'000ull);
    for (int i = 0; i < 3000; ++i) {
        const auto x = pick(rng);
        REQUIRE(idx.is_prime(x) == trial_division(x));
    }
}

TEST_CASE("mobius") {
    const auto& idx = shared_indexer();
    CHECK(idx.mobius(1) == 1);
    CHECK(idx.mobius(12) == 0);
    CHECK(idx.mobius(30) == -1);
    CHECK(idx.mobius(2 * 3 * 5 * 7) == 1);
    CHECK(idx.mobius(2428095424619ull) == -1);
    CHECK(idx.mobius(9ull * 1000003ull) == 0);
    CHECK_THROWS_AS(idx.mobius(0), DomainError);
}

TEST_CASE("concurrent queries give the same answers") {
    const PrimeIndexer idx;
    std::vector<std::uint64_t> a(4), b(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            a[t] = idx.prime_pi(200'000'000ull + 1'000'000ull * t);
            b[t] = idx.nth_prime(5'000'000ull + 17ull * t);
        });
    }
    for (auto& th : threads) th.join();
    for (int t = 0; t < 4; ++t) {
        CHECK(a[t] == idx.prime_pi_by_sieve(200'000'000ull + 1'000'000ull * t));
        CHECK(idx.prime_index(b[t]) == 5'000'000ull + 17ull * t);
    }
}

TEST_CASE("configuration is validated") {
    IndexerConfig cfg;
    cfg.table_limit = 1000;
    CHECK_THROWS_AS(PrimeIndexer{cfg}, DomainError);
}
