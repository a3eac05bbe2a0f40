#include "primeweb/sequences/progressions.hpp"

#include <algorithm>
#include <functional>

#include "primeweb/sequences/ray.hpp"

namespace primeweb::seq {

std::vector<std::uint64_t> multiplicative_set(const FilterSet& primes, std::uint64_t m, std::uint64_t bound) {
    // ray primes <= bound; depth is at most log2(bound) + 1 for any ray
    const Ray ray = extend_ray(primes, m, 64, bound);
    const auto& base = ray.elements;
    std::vector<std::uint64_t> out;
    std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t i, std::uint64_t product) {
        if (i == base.size()) {
            if (product > 1) out.push_back(product);
            return;
        }
        for (std::uint64_t v = product;; v *= base[i]) {
            walk(i + 1, v);
            if (v > bound / base[i]) break;
        }
    };
    walk(0, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> pisot_example(std::size_t depth) {
    return counting_progression([](std::uint64_t n) { return 2 * n - 1; }, 2, depth);
}

}  // namespace primeweb::seq
