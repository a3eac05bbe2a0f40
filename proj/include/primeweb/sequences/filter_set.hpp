#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primeweb/engine/prime_indexer.hpp"

namespace primeweb::seq {

// Prime families used as the set A of a counting progression.
//   T1/T2  lesser/greater members of twin pairs, T3 = T1 ∪ T2
//   S      primes in no twin pair (isolated primes)
//   T4     lesser twins t with t + 1 = 6q, q prime
//   D*     primes by residue class (4n±1, 6n±1)
//   Euler  primes n² + n + 41 (n >= 0), H primes n² + 1 (n >= 1)
enum class FamilyId { P, T1, T2, T3, T4, S, D4m1, D4p1, D6m1, D6p1, Euler, H };

std::string_view family_tag(FamilyId id);
FamilyId parse_family(std::string_view tag);  // throws DomainError
const std::vector<FamilyId>& all_families();

struct FilterConfig {
    // Sieve-based families count members in blocks of this many integers.
    std::uint64_t block_size = std::uint64_t{1} << 20;
    // Largest value a sieve-based family will scan to.
    std::uint64_t scan_limit = std::uint64_t{1} << 40;
    // Polynomial families count members in blocks of this many arguments.
    std::uint64_t poly_block = std::uint64_t{1} << 14;
    // Largest polynomial argument a polynomial family will test.
    std::uint64_t poly_argument_limit = std::uint64_t{1} << 27;
};

// An enumerable family A ⊂ ℕ with its counting function g(n) (the nth
// member) and the inverse g₋₁(a) (the index of a member). Generators of
// progressions are the complement B̄ = ℕ \ A, which always contains 1.
// Implementations are immutable apart from internal, mutex-guarded count
// checkpoints and are safe to share across threads.
class FilterSet {
public:
    virtual ~FilterSet() = default;

    virtual FamilyId id() const = 0;
    std::string name() const { return std::string(family_tag(id())); }

    virtual bool contains(std::uint64_t x) const = 0;
    // Number of members <= x.
    virtual std::uint64_t count_upto(std::uint64_t x) const = 0;
    // nth member (n >= 1) if it does not exceed bound.
    virtual std::optional<std::uint64_t> nth_bounded(std::uint64_t n, std::uint64_t bound) const = 0;
    // Members in [lo, hi), ascending.
    virtual std::vector<std::uint64_t> members_in(std::uint64_t lo, std::uint64_t hi) const = 0;
    // Largest value the enumerator can reach.
    virtual std::uint64_t capacity() const = 0;

    // g(n); throws CapacityError past capacity().
    std::uint64_t nth(std::uint64_t n) const;
    // g₋₁(a); throws NotAMemberError when a ∉ A.
    std::uint64_t index_of(std::uint64_t a) const;
    bool is_generator(std::uint64_t x) const { return x >= 1 && !contains(x); }
    // First `count` elements of B̄ in ascending order.
    std::vector<std::uint64_t> generators(std::size_t count) const;
    // Row number of generator m in the matrix: #{b ∈ B̄ : b <= m}.
    std::uint64_t generator_row(std::uint64_t m) const;

    const engine::PrimeIndexer& engine() const { return *engine_; }

protected:
    explicit FilterSet(std::shared_ptr<const engine::PrimeIndexer> engine) : engine_(std::move(engine)) {}

private:
    std::shared_ptr<const engine::PrimeIndexer> engine_;
};

std::shared_ptr<const FilterSet> make_filter(FamilyId id, std::shared_ptr<const engine::PrimeIndexer> engine,
                                             FilterConfig config = {});

}  // namespace primeweb::seq
