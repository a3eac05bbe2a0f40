#include "primeweb/web/trapezoid.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "primeweb/errors.hpp"

namespace primeweb::web {

RotationIndex::RotationIndex(const engine::PrimeIndexer& engine, std::uint32_t k0) : engine_(engine), k0_(k0) {}

std::uint64_t RotationIndex::first_index(std::uint32_t nu) const {
    if (nu == 0) throw RangeError("rotations are counted from 1");
    std::uint64_t m = std::uint64_t{k0_} + 1;
    for (std::uint32_t i = 1; i < nu; ++i) m = engine_.nth_prime(m);
    return m;
}

std::uint32_t RotationIndex::rotation_of(std::uint64_t prime) const {
    const std::uint64_t j = engine_.prime_index(prime);
    if (j <= k0_) return 0;
    std::uint32_t nu = 1;
    for (std::uint64_t next = engine_.nth_prime(std::uint64_t{k0_} + 1); next <= j; next = engine_.nth_prime(next))
        ++nu;
    return nu;
}

std::uint64_t RotationIndex::prime_at(std::uint32_t nu, std::uint64_t mu) const {
    if (mu == 0) throw RangeError("trapezoid positions are counted from 1");
    return engine_.nth_prime(first_index(nu) + mu - 1);
}

std::uint64_t RotationIndex::position(std::uint32_t nu, std::uint64_t prime) const {
    const std::uint64_t j = engine_.prime_index(prime);
    const std::uint64_t first = first_index(nu);
    if (j < first) throw RangeError(fmt::format("{} lies before rotation {}", prime, nu));
    return j - first + 1;
}

std::string Trapezoid::to_string() const {
    return fmt::format("[({}, {}), ({}, {})]", inner[0], inner[1], outer[0], outer[1]);
}

namespace {

std::uint64_t iterate(const engine::PrimeIndexer& engine, std::uint64_t p, std::uint32_t q) {
    for (std::uint32_t i = 0; i < q; ++i) p = engine.nth_prime(p);
    return p;
}

Trapezoid make(const RotationIndex& index, std::uint32_t nu, std::uint64_t mu, std::uint64_t k, std::uint32_t q) {
    Trapezoid t;
    t.nu = nu;
    t.mu = mu;
    t.k = k;
    t.q = q;
    t.inner = {index.prime_at(nu, mu), index.prime_at(nu, mu + k)};
    t.outer = {iterate(index.engine(), t.inner[0], q), iterate(index.engine(), t.inner[1], q)};
    return t;
}

}  // namespace

Trapezoid trapezoid(const RotationIndex& index, std::uint32_t nu, std::uint64_t mu, std::uint64_t k, std::uint32_t q) {
    if (k == 0 || q == 0) throw DegenerateInputError("a trapezoid needs width k >= 1 and depth q >= 1");
    if (mu == 0 || mu > index.size(nu))
        throw RangeError(fmt::format("position {} is outside rotation {} ({} primes)", mu, nu, index.size(nu)));
    return make(index, nu, mu, k, q);
}

ThreeRetSplit split_first_rotation(const RotationIndex& index, const Trapezoid& t) {
    if (t.k != 1) throw DomainError("the formation rule splits trapezoids of width 1");
    ThreeRetSplit s;
    s.elementary = make(index, t.nu, t.mu, 1, 1);
    s.alpha = t.inner[1] - t.inner[0] - 1;
    if (t.q >= 2) {
        const std::uint64_t image = index.engine().nth_prime(t.inner[0]);
        s.composite = make(index, t.nu + 1, index.position(t.nu + 1, image), s.alpha + 1, t.q - 1);
    }
    return s;
}

std::vector<Trapezoid> split_width(const RotationIndex& index, const Trapezoid& t) {
    std::vector<Trapezoid> out;
    for (std::uint64_t i = 0; i < t.k; ++i) out.push_back(make(index, t.nu, t.mu + i, 1, t.q));
    return out;
}

std::vector<Trapezoid> decompose(const RotationIndex& index, const Trapezoid& t) {
    if (t.k == 0 || t.q == 0) throw DegenerateInputError("cannot decompose a degenerate trapezoid");
    std::vector<Trapezoid> out;
    std::vector<Trapezoid> pending{t};
    while (!pending.empty()) {
        std::vector<Trapezoid> next;
        for (const auto& z : pending)
            for (const auto& piece : split_width(index, z)) {
                const auto s = split_first_rotation(index, piece);
                out.push_back(s.elementary);
                if (piece.q >= 2) next.push_back(s.composite);
            }
        pending = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Trapezoid& a, const Trapezoid& b) { return a.nu != b.nu ? a.nu < b.nu : a.mu < b.mu; });
    return out;
}

TilingCheck check_tiling(const RotationIndex& index, const Trapezoid& t, const std::vector<Trapezoid>& pieces) {
    const auto& engine = index.engine();
    TilingCheck c;
    c.pieces = pieces.size();
    std::map<std::uint32_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>> levels;
    for (const auto& z : pieces) {
        if (z.outer[0] != iterate(engine, z.inner[0], z.q) || z.outer[1] != iterate(engine, z.inner[1], z.q))
            c.corners_on_rays = false;
        if (!z.elementary()) c.exact = false;
        levels[z.nu].emplace_back(engine.prime_index(z.inner[0]), engine.prime_index(z.inner[1]));
    }
    c.levels = levels.size();
    if (levels.size() != t.q) c.exact = false;
    for (std::uint32_t j = 0; j < t.q; ++j) {
        const auto it = levels.find(t.nu + j);
        if (it == levels.end()) {
            c.exact = false;
            continue;
        }
        auto spans = it->second;
        std::sort(spans.begin(), spans.end());
        const std::uint64_t lo = engine.prime_index(iterate(engine, t.inner[0], j));
        const std::uint64_t hi = engine.prime_index(iterate(engine, t.inner[1], j));
        if (spans.front().first != lo || spans.back().second != hi) c.exact = false;
        for (std::size_t i = 0; i < spans.size(); ++i) {
            if (spans[i].second <= spans[i].first) c.exact = false;
            if (i > 0) {
                if (spans[i].first < spans[i - 1].second) c.disjoint = false;
                if (spans[i].first > spans[i - 1].second) c.exact = false;
            }
        }
    }
    return c;
}

}  // namespace primeweb::web
