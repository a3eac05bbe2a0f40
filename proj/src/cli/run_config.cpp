#include "primeweb/cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "primeweb/errors.hpp"

namespace primeweb::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view value) {
    T x{};
    const auto r = std::from_chars(value.data(), value.data() + value.size(), x);
    if (r.ec != std::errc() || r.ptr != value.data() + value.size())
        throw DomainError(fmt::format("config key '{}': malformed value '{}'", key, value));
    return x;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw DomainError(fmt::format("config key '{}': expected true or false, got '{}'", key, value));
}

std::string num(double x) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

}  // namespace

const std::vector<std::string>& RunConfig::keys() {
    static const std::vector<std::string> k{"hard_limit",      "quadrature_tolerance", "angle_tolerance",
                                            "root_tolerance",  "threads",              "output_dir",
                                            "cache_path",      "deep",                 "time_budget"};
    return k;
}

void RunConfig::set(std::string_view key, std::string_view value) {
    value = trim(value);
    if (key == "hard_limit") {
        hard_limit = parse_number<std::uint64_t>(key, value);
        if (hard_limit < 2) throw DomainError("hard_limit must be at least 2");
    } else if (key == "quadrature_tolerance" || key == "angle_tolerance" || key == "root_tolerance") {
        const double v = parse_number<double>(key, value);
        if (!(v > 0.0 && v < 1.0)) throw DomainError(fmt::format("{} must lie in (0, 1)", key));
        (key == "quadrature_tolerance" ? quadrature_tolerance : key == "angle_tolerance" ? angle_tolerance
                                                                                          : root_tolerance) = v;
    } else if (key == "threads") {
        threads = parse_number<unsigned>(key, value);
        if (threads == 0) throw DomainError("threads must be at least 1");
    } else if (key == "output_dir") {
        if (value.empty()) throw DomainError("output_dir must not be empty");
        output_dir = std::string(value);
    } else if (key == "cache_path") {
        if (value.empty()) throw DomainError("cache_path must not be empty");
        cache_path = std::string(value);
    } else if (key == "deep") {
        deep = parse_bool(key, value);
    } else if (key == "time_budget") {
        time_budget = parse_number<double>(key, value);
        if (!(time_budget > 0.0)) throw DomainError("time_budget must be positive");
    } else {
        throw DomainError(fmt::format("unknown config key '{}'", key));
    }
}

std::string RunConfig::get(std::string_view key) const {
    if (key == "hard_limit") return std::to_string(hard_limit);
    if (key == "quadrature_tolerance") return num(quadrature_tolerance);
    if (key == "angle_tolerance") return num(angle_tolerance);
    if (key == "root_tolerance") return num(root_tolerance);
    if (key == "threads") return std::to_string(threads);
    if (key == "output_dir") return output_dir.string();
    if (key == "cache_path") return cache_path.string();
    if (key == "deep") return deep ? "true" : "false";
    if (key == "time_budget") return num(time_budget);
    throw DomainError(fmt::format("unknown config key '{}'", key));
}

std::string RunConfig::echo() const {
    std::string out;
    for (const auto& k : keys()) out += k + "=" + get(k) + "\n";
    return out;
}

RunConfig RunConfig::parse(std::string_view text) {
    RunConfig c;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view s = line;
        if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string_view::npos) throw DomainError(fmt::format("config line {}: expected key=value", lineno));
        c.set(trim(s.substr(0, eq)), s.substr(eq + 1));
    }
    return c;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::uint64_t RunConfig::value_bound() const { return deep ? std::max(hard_limit, deep_limit) : hard_limit; }

std::filesystem::path resolved_cache_path(const RunConfig& config, bool from_flag) {
    if (from_flag) return config.cache_path;
    if (const char* env = std::getenv(cache_env); env != nullptr && *env != '\0') return env;
    return config.cache_path;
}

}  // namespace primeweb::cli
