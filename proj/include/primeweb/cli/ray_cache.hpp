#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "primeweb/sequences/filter_set.hpp"

namespace primeweb::cli {

// Version of the value-producing code; entries written by another version
// are evicted on load.
inline constexpr const char* engine_version = "primeweb-engine-1";

struct CacheKey {
    seq::FamilyId family = seq::FamilyId::P;
    std::uint64_t generator = 0;
    std::uint32_t depth = 0;
    friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

struct CacheStats {
    std::size_t entries = 0;
    std::size_t evicted = 0;  // dropped on load or by an audit
    std::map<std::string, std::size_t> per_family;
    std::uintmax_t file_bytes = 0;
};

struct CacheAudit {
    std::size_t entries = 0;
    std::size_t sampled = 0;
    std::size_t mismatches = 0;
    std::vector<CacheKey> evicted;
    double mismatch_rate() const { return sampled == 0 ? 0.0 : static_cast<double>(mismatches) / sampled; }
    bool passed() const { return mismatches == 0; }
};

// On-disk store of ray values keyed by (family, generator, depth). Each line
// carries the engine version and a CRC-32 of its fields; lines that fail
// either check are evicted, never served. Loading takes a shared lock, writes
// an exclusive one, so readers may run concurrently with a single appender.
class RayCache {
public:
    explicit RayCache(std::filesystem::path path);

    const std::filesystem::path& path() const { return path_; }
    std::optional<std::uint64_t> get(const CacheKey& key) const;
    void put(const CacheKey& key, std::uint64_t value);  // buffered until flush()
    void flush();  // appends buffered entries (rewrites the file after evictions)
    void clear();  // empties memory and file

    CacheStats stats() const;
    std::size_t size() const { return entries_.size(); }

    // Recomputes a deterministic sample of ceil(fraction · entries) entries
    // (at least one when the cache is not empty); mismatches are evicted.
    using FamilyLookup = std::function<const seq::FilterSet&(seq::FamilyId)>;
    CacheAudit audit(const FamilyLookup& families, double fraction = 0.01, std::uint64_t seed = 1);

    // Text of one entry line (without newline) and its checksum.
    static std::string format_line(const CacheKey& key, std::uint64_t value);
    static std::uint32_t checksum(std::string_view fields);

private:
    void load();
    void rewrite();

    std::filesystem::path path_;
    std::map<CacheKey, std::uint64_t> entries_;
    std::vector<std::pair<CacheKey, std::uint64_t>> pending_;
    std::size_t evicted_ = 0;
    bool needs_rewrite_ = false;
};

// Ray of `generator` up to `depth` elements not exceeding `bound`, served from
// the cache where possible; new values are put into the cache.
std::vector<std::uint64_t> cached_ray(RayCache& cache, const seq::FilterSet& family, std::uint64_t generator,
                                      std::size_t depth, std::uint64_t bound);

}  // namespace primeweb::cli
