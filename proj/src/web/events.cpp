#include "primeweb/web/events.hpp"

#include <cmath>
#include <set>

#include "primeweb/errors.hpp"

namespace primeweb::web {

RayStartEvent ray_starts_between(const engine::PrimeIndexer& engine, std::uint64_t a, std::uint64_t b) {
    if (!(a < b) || !engine.is_prime(a) || !engine.is_prime(b))
        throw DomainError("ray starts are taken between two primes a < b");
    RayStartEvent e;
    e.source_lo = a;
    e.source_hi = b;
    for (std::uint64_t j = a + 1; j < b; ++j)
        if (!engine.is_prime(j)) e.starts.push_back(engine.nth_prime(j));
    return e;
}

std::vector<RayStartEvent> ray_start_events(const Web& web, const engine::PrimeIndexer& engine) {
    std::vector<RayStartEvent> out;
    if (web.rays.empty()) return out;
    std::set<std::uint64_t> ray_starts;
    for (const auto& [g, ray] : web.rays)
        if (!ray.primes.empty()) ray_starts.insert(ray.primes.front());
    const RotationIndex index(engine, web.skipped);
    const std::uint64_t top = web.max_prime();

    RayStartEvent first;
    first.rotation = 1;
    const std::uint64_t lo = index.first_index(1), hi = index.first_index(2);
    for (std::uint64_t j = lo; j < hi; ++j) {
        const std::uint64_t p = engine.nth_prime(j);
        if (p > top) break;
        first.starts.push_back(p);
        first.placed += ray_starts.count(p);
    }
    out.push_back(first);

    const auto primes = web.ray_primes();
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
        const std::uint64_t a = primes[i];
        const std::uint64_t b = engine.nth_prime(engine.prime_index(a) + 1);
        if (b != primes[i + 1]) continue;  // only consecutive primes that are both on rays
        if (index.rotation_of(a) == 0) continue;
        if (engine.nth_prime(b) > top) break;
        auto e = ray_starts_between(engine, a, b);
        e.rotation = index.rotation_of(engine.nth_prime(a));
        for (std::uint64_t s : e.starts) e.placed += ray_starts.count(s);
        out.push_back(std::move(e));
    }
    return out;
}

std::string_view TwinEvent::side() const {
    switch (cls) {
        case seq::TwinClass::b_right: return "right";
        case seq::TwinClass::b_left: return "left";
        default: return "";
    }
}

namespace {

TwinEvent from_classification(const engine::PrimeIndexer& engine, const RotationIndex& index,
                              const seq::TwinClassification& t) {
    TwinEvent e;
    e.t1 = t.t1;
    e.t2 = t.t2;
    e.cls = t.cls;
    e.rotation = index.rotation_of(t.t1);
    e.mid_ray = t.mid_ray;
    e.anchor = t.anchor;
    e.anchor_depth = t.anchor_depth;
    e.images = {engine.nth_prime(t.t1), engine.nth_prime(t.t2)};
    return e;
}

}  // namespace

std::vector<TwinEvent> twin_events(const Web& web, const engine::PrimeIndexer& engine) {
    std::vector<TwinEvent> out;
    if (web.rays.empty()) return out;
    const RotationIndex index(engine, web.skipped);
    for (const auto& t : seq::classify_twins(engine, web.max_prime()))
        if (web.on_ray(t.t1) && web.on_ray(t.t2)) out.push_back(from_classification(engine, index, t));
    return out;
}

TwinEvent twin_event(const engine::PrimeIndexer& engine, std::uint32_t k0, std::uint64_t t1) {
    if (!engine.is_prime(t1) || !engine.is_prime(t1 + 2))
        throw NotAMemberError(std::to_string(t1) + " does not start a twin pair");
    const auto twins = seq::classify_twins(engine, t1 + 2);
    return from_classification(engine, RotationIndex(engine, k0), twins.back());
}

PiCheck pi_geometric_check(const seq::FilterSet& primes, std::uint64_t m, std::uint32_t nu, const Web* web) {
    if (nu == 0) throw RangeError("the geometric π identity needs depth ν >= 1");
    if (!primes.is_generator(m)) throw NotAMemberError(std::to_string(m) + " is not a ray generator");
    PiCheck c;
    c.m = m;
    c.nu = nu;
    std::uint64_t prev = m, value = primes.nth(m);
    for (std::uint32_t i = 1; i < nu; ++i) {
        prev = value;
        value = primes.nth(value);
    }
    c.value = value;
    c.previous = prev;
    c.pi_value = primes.engine().prime_pi(value);
    c.holds = c.pi_value == prev;
    if (web != nullptr && nu >= 2 && web->points.count(prev) != 0) {
        c.arc = web->spiral.arc_length(web->at(prev).point.theta);
        c.holds = c.holds && std::abs(*c.arc - static_cast<double>(prev)) <= 1e-9 * static_cast<double>(prev);
    }
    return c;
}

}  // namespace primeweb::web
