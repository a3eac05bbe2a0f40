#include "primeweb/sequences/segments.hpp"

#include <algorithm>

namespace primeweb::seq {

std::vector<std::uint64_t> CompositeSegment::members() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = first(); m < right.prime; ++m) out.push_back(m);
    return out;
}

std::vector<CompositeSegment> composite_segments(const engine::PrimeIndexer& engine, std::uint64_t bound) {
    std::vector<CompositeSegment> out;
    const auto primes = engine.primes_in_range(0, bound + 1);
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
        out.push_back({i + 1, {i + 1, primes[i]}, {i + 2, primes[i + 1]}});
    }
    return out;
}

std::vector<std::uint64_t> Cluster::completed() const {
    std::vector<std::uint64_t> out;
    if (left_image) out.push_back(*left_image);
    out.insert(out.end(), members.begin(), members.end());
    out.push_back(right_image);
    return out;
}

ClusterReport clusters(const engine::PrimeIndexer& engine, std::uint64_t bound, bool keep_clusters) {
    ClusterReport report;
    report.bound = bound;
    const auto primes = engine.primes_in_range(0, bound + 1);
    const std::uint64_t n = primes.size();  // indices 1..n map to primes <= bound
    report.primes_checked = n;
    if (n == 0) return report;

    auto p = [&](std::uint64_t m) { return primes[m - 1]; };
    std::vector<std::uint8_t> interior(n + 1, 0);
    std::vector<std::uint8_t> ghost(n + 1, 0);

    // Segment μ covers the composite indices (p(μ), p(μ+1)); segment 0 is {1}.
    for (std::uint64_t mu = 0;; ++mu) {
        const std::uint64_t left = mu == 0 ? 0 : p(mu);
        if (left + 1 > n) break;
        const std::uint64_t right = mu + 1 <= n ? p(mu + 1) : engine.nth_prime(mu + 1);
        Cluster c;
        c.mu = mu;
        for (std::uint64_t m = left + 1; m < right && m <= n; ++m) {
            c.members.push_back(p(m));
            ++interior[m];
        }
        if (mu > 0) {
            ++ghost[left];
            c.left_image = p(left);
        }
        if (right <= n) {
            ++ghost[right];
            c.right_image = p(right);
        } else {
            c.right_image = engine.nth_prime(right);
        }
        if (keep_clusters) report.clusters.push_back(std::move(c));
    }
    for (std::uint64_t m = 1; m <= n; ++m) {
        if (interior[m] == 0 && ghost[m] == 0) ++report.missing;
        if (interior[m] > 1) ++report.interior_duplicates;
        if (interior[m] > 0 && ghost[m] > 0) ++report.interior_and_ghost;
        if (ghost[m] > 1) ++report.ghost_overlaps;
    }
    return report;
}

}  // namespace primeweb::seq
