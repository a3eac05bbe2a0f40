#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "primeweb/engine/prime_indexer.hpp"

namespace primeweb::seq {

// u: both prime indices are generators (1 or composite), i.e. both twins
//    start new rays; b_right: t1 lies on an existing ray and t2 starts one;
// b_left: the mirror case; special: (3,5); uncovered: neither twin starts a
// ray (would contradict the twin theorem).
enum class TwinClass { special, u, b_left, b_right, uncovered };

// Where the composite index (or indices) sit inside their segment.
enum class SegmentPosition { none, consecutive, segment_start, segment_end, single };

std::string_view twin_class_name(TwinClass c);
std::string_view segment_position_name(SegmentPosition p);

struct TwinClassification {
    std::uint64_t t1 = 0, t2 = 0;
    TwinClass cls = TwinClass::uncovered;
    std::uint64_t index1 = 0, index2 = 0;  // π(t1), π(t2)
    std::uint64_t segment_mu = 0;          // segment holding the composite index/indices
    std::uint64_t segment_length = 0;      // α_μ
    SegmentPosition position = SegmentPosition::none;
    // b-twins: the prime index is the ghost ⟨p(μ)⟩ bounding the segment, and
    // the on-ray twin is p_q(anchor) with anchor in column P₁.
    std::optional<std::uint64_t> ghost_prime;
    std::optional<std::uint64_t> anchor;
    std::uint32_t anchor_depth = 0;  // q
    std::uint64_t mid_ray = 0;       // p((t1+t2)/2): the ray between the pair's rays
};

std::vector<TwinClassification> classify_twins(const engine::PrimeIndexer& engine, std::uint64_t bound);

struct TwinSummary {
    std::uint64_t total = 0, special = 0, u = 0, b_left = 0, b_right = 0, uncovered = 0;
    bool theorem_holds() const { return uncovered == 0; }
};

TwinSummary summarize(const std::vector<TwinClassification>& twins);

}  // namespace primeweb::seq
