#include "primeweb/cli/ray_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>
#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "primeweb/errors.hpp"
#include "primeweb/sequences/ray.hpp"

namespace primeweb::cli {

namespace {

// flock on a sibling lock file, released on scope exit.
class FileLock {
public:
    FileLock(const std::filesystem::path& target, bool exclusive) {
        if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
        const auto lock_path = target.string() + ".lock";
        fd_ = ::open(lock_path.c_str(), O_RDWR | O_CREAT, 0644);
        if (fd_ < 0) throw Error("cannot open cache lock " + lock_path);
        if (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
            ::close(fd_);
            throw Error("cannot lock cache " + lock_path);
        }
    }
    ~FileLock() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_ = -1;
};

std::vector<std::string_view> split_tabs(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == '\t') {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

template <class T>
std::optional<T> parse_int(std::string_view s, int base = 10) {
    T x{};
    const auto r = std::from_chars(s.data(), s.data() + s.size(), x, base);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return x;
}

std::string fields_of(const CacheKey& key, std::uint64_t value) {
    return fmt::format("{}\t{}\t{}\t{}\t{}", seq::family_tag(key.family), key.generator, key.depth, value,
                       engine_version);
}

}  // namespace

std::uint32_t RayCache::checksum(std::string_view fields) {
    return static_cast<std::uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(fields.data()), static_cast<uInt>(fields.size())));
}

std::string RayCache::format_line(const CacheKey& key, std::uint64_t value) {
    const auto fields = fields_of(key, value);
    return fmt::format("{}\t{:08x}", fields, checksum(fields));
}

RayCache::RayCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

void RayCache::load() {
    entries_.clear();
    if (!std::filesystem::exists(path_)) return;
    FileLock lock(path_, false);
    std::ifstream in(path_);
    if (!in) throw Error("cannot read cache " + path_.string());
    std::map<CacheKey, std::uint64_t> seen;
    std::set<CacheKey> conflicting;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto f = split_tabs(line);
        bool ok = f.size() == 6 && f[4] == engine_version;
        std::optional<std::uint64_t> g, v;
        std::optional<std::uint32_t> d, crc;
        seq::FamilyId family = seq::FamilyId::P;
        if (ok) {
            try {
                family = seq::parse_family(f[0]);
            } catch (const DomainError&) {
                ok = false;
            }
            g = parse_int<std::uint64_t>(f[1]);
            d = parse_int<std::uint32_t>(f[2]);
            v = parse_int<std::uint64_t>(f[3]);
            crc = parse_int<std::uint32_t>(f[5], 16);
            ok = ok && g && d && v && crc && f[5].size() == 8 &&
                 *crc == checksum(std::string_view(line).substr(0, line.size() - 9));
        }
        if (!ok) {
            ++evicted_;
            needs_rewrite_ = true;
            continue;
        }
        const CacheKey key{family, *g, *d};
        const auto [it, inserted] = seen.emplace(key, *v);
        if (!inserted && it->second != *v) conflicting.insert(key);
    }
    for (const auto& key : conflicting) {
        seen.erase(key);
        ++evicted_;
        needs_rewrite_ = true;
    }
    entries_ = std::move(seen);
}

std::optional<std::uint64_t> RayCache::get(const CacheKey& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void RayCache::put(const CacheKey& key, std::uint64_t value) {
    const auto [it, inserted] = entries_.emplace(key, value);
    if (!inserted) {
        if (it->second == value) return;
        it->second = value;
        needs_rewrite_ = true;
    }
    pending_.emplace_back(key, value);
}

void RayCache::rewrite() {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    const auto tmp = path_.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("cannot write cache " + tmp);
        out << "# primeweb ray cache: family generator depth value version crc32\n";
        for (const auto& [k, v] : entries_) out << format_line(k, v) << '\n';
        if (!out) throw Error("cannot write cache " + tmp);
    }
    std::filesystem::rename(tmp, path_);
}

void RayCache::flush() {
    if (pending_.empty() && !needs_rewrite_) return;
    FileLock lock(path_, true);
    if (needs_rewrite_ || !std::filesystem::exists(path_)) {
        rewrite();
    } else {
        std::string block;
        for (const auto& [k, v] : pending_) block += format_line(k, v) + '\n';
        std::ofstream out(path_, std::ios::app);
        out << block;
        if (!out) throw Error("cannot append to cache " + path_.string());
    }
    pending_.clear();
    needs_rewrite_ = false;
}

void RayCache::clear() {
    entries_.clear();
    pending_.clear();
    needs_rewrite_ = true;
    flush();
}

CacheStats RayCache::stats() const {
    CacheStats s;
    s.entries = entries_.size();
    s.evicted = evicted_;
    for (const auto& [k, v] : entries_) ++s.per_family[std::string(seq::family_tag(k.family))];
    if (std::filesystem::exists(path_)) s.file_bytes = std::filesystem::file_size(path_);
    return s;
}

CacheAudit RayCache::audit(const FamilyLookup& families, double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction <= 1.0)) throw DomainError("audit fraction must lie in (0, 1]");
    CacheAudit a;
    a.entries = entries_.size();
    if (entries_.empty()) return a;
    std::vector<CacheKey> keys;
    keys.reserve(entries_.size());
    for (const auto& [k, v] : entries_) keys.push_back(k);
    const auto want = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(fraction * keys.size())));
    std::vector<CacheKey> sample;
    std::sample(keys.begin(), keys.end(), std::back_inserter(sample), want, std::mt19937_64(seed));
    for (const auto& k : sample) {
        ++a.sampled;
        const auto ray = seq::extend_ray(families(k.family), k.generator, k.depth);
        if (ray.elements.size() == k.depth && ray.elements.back() == entries_.at(k)) continue;
        ++a.mismatches;
        a.evicted.push_back(k);
    }
    for (const auto& k : a.evicted) {
        entries_.erase(k);
        ++evicted_;
    }
    if (!a.evicted.empty()) {
        std::erase_if(pending_, [&](const auto& e) { return !entries_.count(e.first); });
        needs_rewrite_ = true;
        flush();
    }
    return a;
}

std::vector<std::uint64_t> cached_ray(RayCache& cache, const seq::FilterSet& family, std::uint64_t generator,
                                      std::size_t depth, std::uint64_t bound) {
    if (!family.is_generator(generator))
        throw NotAMemberError(fmt::format("{} is not a generator of {}", generator, family.name()));
    std::vector<std::uint64_t> out;
    std::uint64_t prev = generator;
    while (out.size() < depth) {
        const CacheKey key{family.id(), generator, static_cast<std::uint32_t>(out.size() + 1)};
        std::optional<std::uint64_t> v = cache.get(key);
        if (!v) {
            v = family.nth_bounded(prev, bound);
            if (v) cache.put(key, *v);
        }
        if (!v || *v > bound) break;
        out.push_back(*v);
        prev = *v;
    }
    return out;
}

}  // namespace primeweb::cli
