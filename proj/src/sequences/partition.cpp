#include "primeweb/sequences/partition.hpp"

#include <algorithm>
#include <string>

#include "primeweb/errors.hpp"
#include "primeweb/sequences/ray.hpp"

namespace primeweb::seq {

PartitionReport verify_partition(const FilterSet& family, std::uint64_t bound, bool keep_addresses) {
    PartitionReport report;
    report.family = family.id();
    report.bound = bound;
    const auto members = family.members_in(0, bound + 1);
    const std::size_t k = members.size();
    report.members = k;

    auto position = [&](std::uint64_t v) -> std::ptrdiff_t {
        const auto it = std::lower_bound(members.begin(), members.end(), v);
        if (it == members.end() || *it != v) return -1;
        return it - members.begin();
    };

    // Route 1: member i has index i+1; if that index is itself a member the
    // address is one level deeper than the index's address.
    std::vector<Address> addr(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t index = i + 1;
        const auto pos = position(index);
        if (pos < 0) {
            addr[i] = {index, 1};
        } else if (static_cast<std::size_t>(pos) < i) {
            addr[i] = {addr[pos].generator, addr[pos].depth + 1};
        } else {
            ++report.address_mismatches;  // a member equal to its own index cannot be addressed
        }
    }

    // Route 2: iterate every generator ray forward inside [1, bound].
    std::vector<std::uint32_t> hits(k, 0);
    for (std::uint64_t g = 1; g <= k; ++g) {
        if (position(g) >= 0) continue;  // not a generator
        std::uint64_t index = g;
        std::uint32_t depth = 1;
        while (index <= k) {
            const std::size_t pos = index - 1;
            ++hits[pos];
            if (!(addr[pos] == Address{g, depth})) ++report.address_mismatches;
            index = members[pos];
            ++depth;
        }
    }
    for (auto h : hits) {
        if (h == 0) ++report.uncovered;
        if (h > 1) ++report.multiply_covered;
    }
    if (keep_addresses) {
        report.addresses.reserve(k);
        for (std::size_t i = 0; i < k; ++i) report.addresses.emplace_back(members[i], addr[i]);
    }
    return report;
}

Address address_of(const FilterSet& family, std::uint64_t member) {
    if (!family.contains(member)) throw NotAMemberError(std::to_string(member) + " is not a member of " + family.name());
    std::uint32_t depth = 0;
    std::uint64_t x = member;
    while (family.contains(x)) {
        x = family.count_upto(x);
        ++depth;
    }
    return {x, depth};
}

namespace {

std::uint64_t value_at(const FilterSet& family, Address a) {
    if (a.depth == 0) throw DomainError("address depth must be at least 1");
    return extend_ray(family, a.generator, a.depth).elements.back();
}

std::uint64_t predecessor(const FilterSet& family, Address a) {
    return a.depth == 1 ? a.generator : value_at(family, {a.generator, a.depth - 1});
}

}  // namespace

IntervalIdentity interval_count_identity(const FilterSet& family, Address a1, Address a2) {
    if (a1 == a2) throw DegenerateInputError("interval identity needs two distinct addresses");
    IntervalIdentity r;
    const std::uint64_t x = value_at(family, a1);
    const std::uint64_t y = value_at(family, a2);
    r.lower = std::min(x, y);
    r.upper = std::max(x, y);
    r.members_between = family.count_upto(r.upper - 1) - family.count_upto(r.lower);
    r.predecessor1 = predecessor(family, a1);
    r.predecessor2 = predecessor(family, a2);
    const auto diff = static_cast<std::int64_t>(r.predecessor1) - static_cast<std::int64_t>(r.predecessor2);
    r.expected = (diff < 0 ? -diff : diff) - 1;
    return r;
}

FirstIdentity first_identity(const FilterSet& family, std::uint64_t generator) {
    FirstIdentity r;
    r.generator = generator;
    r.first = extend_ray(family, generator, 1).elements.front();
    r.members_below_first = family.count_upto(r.first - 1);
    r.consistent_form = r.members_below_first == generator - 1;
    r.printed_form = r.members_below_first == r.first - 1;
    return r;
}

RowImage row_isomorphism(const FilterSet& family, std::uint64_t a0, std::uint32_t n) {
    if (a0 <= 1 || !family.is_generator(a0)) {
        throw DomainError("row_isomorphism needs a generator greater than 1");
    }
    RowImage r;
    if (n == 0) {
        r.base_value = 1;
        r.stripped_to_one = true;
        r.image = a0;
        return r;
    }
    r.base_value = extend_ray(family, 1, n).elements.back();
    std::uint64_t x = r.base_value;
    for (std::uint32_t i = 0; i < n; ++i) x = family.index_of(x);
    r.stripped_to_one = x == 1;
    std::uint64_t y = a0;
    for (std::uint32_t i = 0; i < n; ++i) y = family.nth(y);
    r.image = y;
    return r;
}

}  // namespace primeweb::seq
