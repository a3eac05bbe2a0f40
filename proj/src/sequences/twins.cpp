#include "primeweb/sequences/twins.hpp"

namespace primeweb::seq {

std::string_view twin_class_name(TwinClass c) {
    switch (c) {
    case TwinClass::special: return "special";
    case TwinClass::u: return "u";
    case TwinClass::b_left: return "b_left";
    case TwinClass::b_right: return "b_right";
    case TwinClass::uncovered: return "uncovered";
    }
    return "?";
}

std::string_view segment_position_name(SegmentPosition p) {
    switch (p) {
    case SegmentPosition::none: return "none";
    case SegmentPosition::consecutive: return "consecutive";
    case SegmentPosition::segment_start: return "segment_start";
    case SegmentPosition::segment_end: return "segment_end";
    case SegmentPosition::single: return "single";
    }
    return "?";
}

std::vector<TwinClassification> classify_twins(const engine::PrimeIndexer& engine, std::uint64_t bound) {
    std::vector<TwinClassification> out;
    const auto primes = engine.primes_in_range(0, bound + 1);
    auto is_prime_index = [&](std::uint64_t m) { return engine.is_prime(m); };

    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
        if (primes[i + 1] != primes[i] + 2) continue;
        TwinClassification t;
        t.t1 = primes[i];
        t.t2 = primes[i + 1];
        t.index1 = i + 1;
        t.index2 = i + 2;
        const bool gen1 = !is_prime_index(t.index1);
        const bool gen2 = !is_prime_index(t.index2);

        if (t.t1 == 3) {
            t.cls = TwinClass::special;
        } else if (gen1 && gen2) {
            t.cls = TwinClass::u;
        } else if (gen1 != gen2) {
            t.cls = gen2 ? TwinClass::b_right : TwinClass::b_left;
        } else {
            t.cls = TwinClass::uncovered;
        }

        if (t.cls == TwinClass::u || t.cls == TwinClass::b_left || t.cls == TwinClass::b_right) {
            const std::uint64_t composite = gen1 ? t.index1 : t.index2;
            const std::uint64_t mu = engine.prime_pi(composite);  // p(μ) < composite < p(μ+1)
            const std::uint64_t lo = engine.nth_prime(mu);
            const std::uint64_t hi = engine.nth_prime(mu + 1);
            t.segment_mu = mu;
            t.segment_length = hi - lo - 1;
            if (t.cls == TwinClass::u) {
                t.position = SegmentPosition::consecutive;
            } else {
                const bool starts = composite == lo + 1;
                const bool ends = composite == hi - 1;
                t.position = starts && ends ? SegmentPosition::single
                             : starts       ? SegmentPosition::segment_start
                             : ends         ? SegmentPosition::segment_end
                                            : SegmentPosition::none;
                const std::uint64_t prime_index = gen1 ? t.index2 : t.index1;
                t.ghost_prime = prime_index;
                // walk down the ray until the element's index is a generator
                std::uint64_t x = gen1 ? t.t2 : t.t1;
                std::uint32_t steps = 0;
                while (true) {
                    const std::uint64_t idx = engine.prime_pi(x);
                    if (!is_prime_index(idx)) break;
                    x = idx;
                    ++steps;
                }
                t.anchor = x;
                t.anchor_depth = steps;
            }
        }
        out.push_back(t);
    }
    std::vector<std::uint64_t> mids;
    for (const auto& t : out) mids.push_back(t.t1 + 1);
    const auto mid_primes = engine.nth_primes(mids);
    for (std::size_t k = 0; k < out.size(); ++k) out[k].mid_ray = mid_primes[k];
    return out;
}

TwinSummary summarize(const std::vector<TwinClassification>& twins) {
    TwinSummary s;
    for (const auto& t : twins) {
        ++s.total;
        switch (t.cls) {
        case TwinClass::special: ++s.special; break;
        case TwinClass::u: ++s.u; break;
        case TwinClass::b_left: ++s.b_left; break;
        case TwinClass::b_right: ++s.b_right; break;
        case TwinClass::uncovered: ++s.uncovered; break;
        }
    }
    return s;
}

}  // namespace primeweb::seq
