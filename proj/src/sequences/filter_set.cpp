#include "primeweb/sequences/filter_set.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>

#include "primeweb/engine/primality.hpp"
#include "primeweb/errors.hpp"

namespace primeweb::seq {

namespace {

struct TagEntry {
    FamilyId id;
    std::string_view tag;
};

constexpr std::array<TagEntry, 12> kTags{{{FamilyId::P, "P"},
                                          {FamilyId::T1, "T1"},
                                          {FamilyId::T2, "T2"},
                                          {FamilyId::T3, "T3"},
                                          {FamilyId::T4, "T4"},
                                          {FamilyId::S, "S"},
                                          {FamilyId::D4m1, "D4n-1"},
                                          {FamilyId::D4p1, "D4n+1"},
                                          {FamilyId::D6m1, "D6n-1"},
                                          {FamilyId::D6p1, "D6n+1"},
                                          {FamilyId::Euler, "Euler"},
                                          {FamilyId::H, "H"}}};

std::string num(std::uint64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------------------
// The primes themselves: everything is delegated to the engine.
class PrimeFamily final : public FilterSet {
public:
    explicit PrimeFamily(std::shared_ptr<const engine::PrimeIndexer> e) : FilterSet(std::move(e)) {}

    FamilyId id() const override { return FamilyId::P; }
    bool contains(std::uint64_t x) const override { return engine().is_prime(x); }
    std::uint64_t count_upto(std::uint64_t x) const override { return engine().prime_pi(x); }
    std::uint64_t capacity() const override { return engine().hard_limit(); }

    std::optional<std::uint64_t> nth_bounded(std::uint64_t n, std::uint64_t bound) const override {
        if (bound >= engine().hard_limit()) return engine().nth_prime(n);
        return engine().nth_prime_bounded(n, bound);
    }

    std::vector<std::uint64_t> members_in(std::uint64_t lo, std::uint64_t hi) const override {
        return engine().primes_in_range(lo, hi);
    }
};

// ---------------------------------------------------------------------------
// Families defined by a predicate on a prime and its twin neighbours. Counts
// are kept per block of integers and extended lazily.
class SieveFamily final : public FilterSet {
public:
    SieveFamily(FamilyId id, std::shared_ptr<const engine::PrimeIndexer> e, FilterConfig cfg)
        : FilterSet(std::move(e)), id_(id), cfg_(cfg) {}

    FamilyId id() const override { return id_; }

    std::uint64_t capacity() const override { return std::min(cfg_.scan_limit, engine().hard_limit() - 2); }

    bool contains(std::uint64_t x) const override {
        if (x > capacity() || !engine().is_prime(x)) return false;
        const bool below = x >= 2 && engine().is_prime(x - 2);
        const bool above = engine().is_prime(x + 2);
        return keep(x, below, above);
    }

    std::uint64_t count_upto(std::uint64_t x) const override {
        if (x > capacity()) throw CapacityError(name() + ": count beyond scan limit " + num(capacity()));
        const std::uint64_t b = x / cfg_.block_size;
        std::uint64_t base = 0;
        {
            std::lock_guard lock(mutex_);
            extend(b * cfg_.block_size, UINT64_MAX);
            base = b == 0 ? 0 : cumulative_[b - 1];
        }
        return base + block_members(b * cfg_.block_size, x + 1).size();
    }

    std::optional<std::uint64_t> nth_bounded(std::uint64_t n, std::uint64_t bound) const override {
        if (n == 0) throw DomainError("nth: n must be positive");
        const std::uint64_t limit = std::min(bound, capacity());
        std::uint64_t b = 0;
        std::uint64_t base = 0;
        {
            std::lock_guard lock(mutex_);
            extend(limit, n);
            if (cumulative_.empty() || cumulative_.back() < n) {
                if (bound > capacity()) throw CapacityError(name() + ": member " + num(n) + " beyond scan limit");
                return std::nullopt;
            }
            b = static_cast<std::uint64_t>(std::lower_bound(cumulative_.begin(), cumulative_.end(), n) -
                                           cumulative_.begin());
            base = b == 0 ? 0 : cumulative_[b - 1];
        }
        const auto members = block_members(b * cfg_.block_size, (b + 1) * cfg_.block_size);
        const std::uint64_t value = members[n - base - 1];
        if (value > bound) return std::nullopt;
        return value;
    }

    std::vector<std::uint64_t> members_in(std::uint64_t lo, std::uint64_t hi) const override {
        if (hi > capacity() + 1) throw CapacityError(name() + ": range beyond scan limit");
        std::vector<std::uint64_t> out;
        for (std::uint64_t a = lo; a < hi; a += cfg_.block_size) {
            const auto part = block_members(a, std::min(hi, a + cfg_.block_size));
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }

private:
    bool keep(std::uint64_t p, bool below, bool above) const {
        switch (id_) {
        case FamilyId::T1: return above;
        case FamilyId::T2: return below;
        case FamilyId::T3: return below || above;
        case FamilyId::S: return !below && !above;
        case FamilyId::T4: return above && (p + 1) % 6 == 0 && engine().is_prime((p + 1) / 6);
        case FamilyId::D4m1: return p % 4 == 3;
        case FamilyId::D4p1: return p % 4 == 1;
        case FamilyId::D6m1: return p % 6 == 5;
        case FamilyId::D6p1: return p % 6 == 1;
        default: return false;
        }
    }

    // Members in [lo, hi).
    std::vector<std::uint64_t> block_members(std::uint64_t lo, std::uint64_t hi) const {
        std::vector<std::uint64_t> out;
        if (lo >= hi) return out;
        const auto ps = engine().primes_in_range(lo >= 2 ? lo - 2 : 0, hi + 2);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const std::uint64_t p = ps[i];
            if (p < lo || p >= hi) continue;
            const bool below = i > 0 && ps[i - 1] + 2 == p;
            const bool above = i + 1 < ps.size() && ps[i + 1] == p + 2;
            if (keep(p, below, above)) out.push_back(p);
        }
        return out;
    }

    // Caller holds mutex_. Extends block counts while the next block starts
    // at or below `limit` and fewer than `count` members are known.
    void extend(std::uint64_t limit, std::uint64_t count) const {
        const std::uint64_t bs = cfg_.block_size;
        while (cumulative_.size() * bs <= limit && (cumulative_.empty() || cumulative_.back() < count)) {
            const std::uint64_t lo = cumulative_.size() * bs;
            if (lo > capacity()) break;
            const std::uint64_t hi = std::min(lo + bs, capacity() + 1);
            const std::uint64_t base = cumulative_.empty() ? 0 : cumulative_.back();
            cumulative_.push_back(base + block_members(lo, hi).size());
        }
    }

    FamilyId id_;
    FilterConfig cfg_;
    mutable std::mutex mutex_;
    mutable std::vector<std::uint64_t> cumulative_;  // members < (b+1)*block_size
};

// ---------------------------------------------------------------------------
// Prime values of an increasing quadratic polynomial, indexed by argument.
class PolynomialFamily final : public FilterSet {
public:
    PolynomialFamily(FamilyId id, std::shared_ptr<const engine::PrimeIndexer> e, FilterConfig cfg)
        : FilterSet(std::move(e)), id_(id), cfg_(cfg), first_arg_(id == FamilyId::Euler ? 0 : 1) {}

    FamilyId id() const override { return id_; }

    std::uint64_t capacity() const override { return value(cfg_.poly_argument_limit); }

    bool contains(std::uint64_t x) const override {
        const auto k = argument_upto(x);
        return k && value(*k) == x && engine::is_prime_u64(x);
    }

    std::uint64_t count_upto(std::uint64_t x) const override {
        if (x > capacity()) throw CapacityError(name() + ": count beyond argument limit");
        const auto k = argument_upto(x);
        if (!k) return 0;
        return count_arguments_upto(*k);
    }

    std::optional<std::uint64_t> nth_bounded(std::uint64_t n, std::uint64_t bound) const override {
        if (n == 0) throw DomainError("nth: n must be positive");
        const std::uint64_t limit = std::min(bound, capacity());
        const auto kmax = argument_upto(limit);
        if (!kmax) return std::nullopt;
        std::uint64_t j = 0;
        std::uint64_t base = 0;
        {
            std::lock_guard lock(mutex_);
            extend(*kmax, n);
            if (cumulative_.empty() || cumulative_.back() < n) {
                if (bound > capacity()) throw CapacityError(name() + ": member " + num(n) + " beyond argument limit");
                return std::nullopt;
            }
            j = static_cast<std::uint64_t>(std::lower_bound(cumulative_.begin(), cumulative_.end(), n) -
                                           cumulative_.begin());
            base = j == 0 ? 0 : cumulative_[j - 1];
        }
        const std::uint64_t k0 = first_arg_ + j * cfg_.poly_block;
        std::uint64_t seen = base;
        for (std::uint64_t k = k0; k < k0 + cfg_.poly_block; ++k) {
            const std::uint64_t v = value(k);
            if (engine::is_prime_u64(v) && ++seen == n) {
                if (v > bound) return std::nullopt;
                return v;
            }
        }
        throw NumericalError(name() + ": inconsistent block counts");
    }

    std::vector<std::uint64_t> members_in(std::uint64_t lo, std::uint64_t hi) const override {
        std::vector<std::uint64_t> out;
        if (hi == 0) return out;
        if (hi - 1 > capacity()) throw CapacityError(name() + ": range beyond argument limit");
        const auto kmax = argument_upto(hi - 1);
        if (!kmax) return out;
        for (std::uint64_t k = first_arg_; k <= *kmax; ++k) {
            const std::uint64_t v = value(k);
            if (v >= lo && engine::is_prime_u64(v)) out.push_back(v);
        }
        return out;
    }

private:
    std::uint64_t value(std::uint64_t k) const {
        return id_ == FamilyId::Euler ? k * k + k + 41 : k * k + 1;
    }

    // Largest argument k with value(k) <= x, if any.
    std::optional<std::uint64_t> argument_upto(std::uint64_t x) const {
        if (x < value(first_arg_)) return std::nullopt;
        std::uint64_t k = id_ == FamilyId::Euler ? (engine::isqrt(4 * x - 163) - 1) / 2 : engine::isqrt(x - 1);
        while (value(k + 1) <= x) ++k;
        while (k > first_arg_ && value(k) > x) --k;
        return k;
    }

    std::uint64_t count_arguments_upto(std::uint64_t kmax) const {
        const std::uint64_t j = (kmax - first_arg_) / cfg_.poly_block;
        std::uint64_t base = 0;
        {
            std::lock_guard lock(mutex_);
            extend(first_arg_ + j * cfg_.poly_block, UINT64_MAX);
            base = j == 0 ? 0 : cumulative_[j - 1];
        }
        for (std::uint64_t k = first_arg_ + j * cfg_.poly_block; k <= kmax; ++k) {
            if (engine::is_prime_u64(value(k))) ++base;
        }
        return base;
    }

    // Caller holds mutex_. Adds argument blocks while they start at or below
    // kmax and fewer than `count` members are known.
    void extend(std::uint64_t kmax, std::uint64_t count) const {
        const std::uint64_t pb = cfg_.poly_block;
        while (first_arg_ + cumulative_.size() * pb <= kmax &&
               (cumulative_.empty() || cumulative_.back() < count)) {
            const std::uint64_t k0 = first_arg_ + cumulative_.size() * pb;
            if (k0 > cfg_.poly_argument_limit) break;
            std::uint64_t c = cumulative_.empty() ? 0 : cumulative_.back();
            for (std::uint64_t k = k0; k < k0 + pb; ++k) {
                if (engine::is_prime_u64(value(k))) ++c;
            }
            cumulative_.push_back(c);
        }
    }

    FamilyId id_;
    FilterConfig cfg_;
    std::uint64_t first_arg_;
    mutable std::mutex mutex_;
    mutable std::vector<std::uint64_t> cumulative_;  // members with argument < first + (j+1)*poly_block
};

}  // namespace

std::string_view family_tag(FamilyId id) {
    for (const auto& e : kTags)
        if (e.id == id) return e.tag;
    return "?";
}

FamilyId parse_family(std::string_view tag) {
    for (const auto& e : kTags)
        if (e.tag == tag) return e.id;
    // shell-friendly aliases
    if (tag == "D4m1") return FamilyId::D4m1;
    if (tag == "D4p1") return FamilyId::D4p1;
    if (tag == "D6m1") return FamilyId::D6m1;
    if (tag == "D6p1") return FamilyId::D6p1;
    throw DomainError("unknown family '" + std::string(tag) + "'");
}

const std::vector<FamilyId>& all_families() {
    static const std::vector<FamilyId> ids = [] {
        std::vector<FamilyId> v;
        for (const auto& e : kTags) v.push_back(e.id);
        return v;
    }();
    return ids;
}

std::uint64_t FilterSet::nth(std::uint64_t n) const {
    const auto v = nth_bounded(n, capacity());
    if (!v) throw CapacityError(name() + ": member " + num(n) + " exceeds capacity " + num(capacity()));
    return *v;
}

std::uint64_t FilterSet::index_of(std::uint64_t a) const {
    if (!contains(a)) throw NotAMemberError(num(a) + " is not a member of " + name());
    return count_upto(a);
}

std::vector<std::uint64_t> FilterSet::generators(std::size_t count) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 1; out.size() < count; ++x) {
        if (!contains(x)) out.push_back(x);
    }
    return out;
}

std::uint64_t FilterSet::generator_row(std::uint64_t m) const {
    if (!is_generator(m)) throw NotAMemberError(num(m) + " is not a generator of " + name());
    return m - count_upto(m);
}

std::shared_ptr<const FilterSet> make_filter(FamilyId id, std::shared_ptr<const engine::PrimeIndexer> engine,
                                             FilterConfig config) {
    switch (id) {
    case FamilyId::P: return std::make_shared<PrimeFamily>(std::move(engine));
    case FamilyId::Euler:
    case FamilyId::H: return std::make_shared<PolynomialFamily>(id, std::move(engine), config);
    default: return std::make_shared<SieveFamily>(id, std::move(engine), config);
    }
}

}  // namespace primeweb::seq
