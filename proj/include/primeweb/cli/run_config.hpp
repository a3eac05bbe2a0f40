#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace primeweb::cli {

inline constexpr std::uint64_t desk_limit = 1'000'000'000;
inline constexpr std::uint64_t deep_limit = 1'000'000'000'000;

// Environment variable that overrides the cache path of the config file.
inline constexpr const char* cache_env = "PRIMEWEB_CACHE";

// Flat key=value run configuration. Unknown keys and malformed values are
// rejected; '#' starts a comment.
struct RunConfig {
    std::uint64_t hard_limit = desk_limit;  // largest ray value computed
    double quadrature_tolerance = 1e-13;
    double angle_tolerance = 1e-9;
    double root_tolerance = 1e-12;
    unsigned threads = 1;
    std::filesystem::path output_dir = "out";
    std::filesystem::path cache_path = "primeweb-cache.tsv";
    bool deep = false;
    double time_budget = 1800.0;  // seconds, deep runs only

    static const std::vector<std::string>& keys();

    void set(std::string_view key, std::string_view value);  // throws DomainError
    std::string get(std::string_view key) const;

    // Canonical text, one key=value per line in keys() order; parse(echo())
    // reproduces the config.
    std::string echo() const;
    static RunConfig parse(std::string_view text);
    static RunConfig load(const std::filesystem::path& path);  // throws DomainError

    // Value bound in effect: the hard limit, raised to the deep limit by --deep.
    std::uint64_t value_bound() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Cache path in effect: an explicit --cache flag wins, then the environment
// variable, then the config value.
std::filesystem::path resolved_cache_path(const RunConfig& config, bool from_flag = false);

}  // namespace primeweb::cli
