#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primeweb/engine/prime_indexer.hpp"

namespace primeweb::seq {

// Tagged reference to the prime p(index) that bounds a composite segment.
// Ghosts are never members of the segment itself.
struct GhostPrime {
    std::uint64_t index = 0;  // μ
    std::uint64_t prime = 0;  // p(μ)
};

// The maximal run of composites strictly between p(μ) and p(μ+1).
struct CompositeSegment {
    std::uint64_t mu = 0;
    GhostPrime left;   // ⟨p(μ)⟩
    GhostPrime right;  // ⟨p(μ+1)⟩

    std::uint64_t length() const { return right.prime - left.prime - 1; }  // α_μ
    std::uint64_t first() const { return left.prime + 1; }
    std::uint64_t last() const { return right.prime - 1; }
    std::vector<std::uint64_t> members() const;
};

// Segments μ = 1, 2, ... with p(μ+1) <= bound (μ = 1 is the empty segment
// between 2 and 3).
std::vector<CompositeSegment> composite_segments(const engine::PrimeIndexer& engine, std::uint64_t bound);

// Image of a segment under m ↦ p(m): a run of consecutive primes. The
// completed cluster adds the images of the two ghosts, p(p(μ)) and
// p(p(μ+1)). μ = 0 is the unit segment {1} (with p(0) = 0), so that
// 2 = p(1) is covered; it has no left ghost image.
struct Cluster {
    std::uint64_t mu = 0;
    std::vector<std::uint64_t> members;           // c_μ
    std::optional<std::uint64_t> left_image;      // p(p(μ))
    std::uint64_t right_image = 0;                // p(p(μ+1))

    std::vector<std::uint64_t> completed() const;  // c̄_μ, ascending
};

struct ClusterReport {
    std::uint64_t bound = 0;
    std::vector<Cluster> clusters;
    std::uint64_t primes_checked = 0;
    std::uint64_t missing = 0;              // primes <= bound in no completed cluster
    std::uint64_t interior_duplicates = 0;  // a prime inside two clusters
    std::uint64_t interior_and_ghost = 0;   // a prime both inside a cluster and a ghost image
    std::uint64_t ghost_overlaps = 0;       // ghost images shared at junctions (expected)

    bool exact() const { return missing == 0 && interior_duplicates == 0 && interior_and_ghost == 0; }
};

// Builds c̄_μ for every segment whose indices reach primes <= bound and
// checks that their union is exactly the primes <= bound.
ClusterReport clusters(const engine::PrimeIndexer& engine, std::uint64_t bound, bool keep_clusters = true);

}  // namespace primeweb::seq
