#include "primeweb/sequences/ray.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "primeweb/errors.hpp"

namespace primeweb::seq {

std::int64_t Ray::value_at(std::int64_t d) const {
    if (d == 0) return static_cast<std::int64_t>(generator);
    const auto k = static_cast<std::size_t>(std::llabs(d));
    if (k > elements.size()) {
        throw RangeError("depth " + std::to_string(d) + " not materialized (ray of " + std::to_string(generator) +
                         " has depth " + std::to_string(elements.size()) + ")");
    }
    const auto v = static_cast<std::int64_t>(elements[k - 1]);
    return d > 0 ? v : -v;
}

std::optional<std::size_t> Ray::depth_of(std::uint64_t value) const {
    const auto it = std::find(elements.begin(), elements.end(), value);
    if (it == elements.end()) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin()) + 1;
}

Ray extend_ray(const FilterSet& family, std::uint64_t a0, std::size_t depth, std::optional<std::uint64_t> bound) {
    if (!family.is_generator(a0)) {
        throw NotAMemberError(std::to_string(a0) + " is not a generator of " + family.name());
    }
    Ray ray;
    ray.family = family.id();
    ray.generator = a0;
    std::uint64_t x = a0;
    for (std::size_t d = 1; d <= depth; ++d) {
        if (bound) {
            const auto next = family.nth_bounded(x, *bound);
            if (!next) {
                ray.truncated_at = *bound;
                break;
            }
            x = *next;
        } else {
            x = family.nth(x);
        }
        ray.elements.push_back(x);
    }
    return ray;
}

std::int64_t depth_compose(const FilterSet& family, std::uint64_t a0, std::int64_t n1, std::int64_t n2) {
    const std::int64_t total = n1 + n2;
    const auto need = static_cast<std::size_t>(std::max({std::llabs(n2), std::llabs(total)}));
    const Ray ray = extend_ray(family, a0, need);
    if (n2 < 0 || total < 0) return ray.value_at(total);

    // Walk from gₙ₂(a0) by explicit applications of g or g₋₁.
    auto x = static_cast<std::uint64_t>(ray.value_at(n2));
    for (std::int64_t i = 0; i < std::llabs(n1); ++i) {
        x = n1 > 0 ? family.nth(x) : family.index_of(x);
    }
    const auto composed = static_cast<std::int64_t>(x);
    if (composed != ray.value_at(total)) {
        throw NumericalError("depth composition disagrees with the group law");
    }
    return composed;
}

std::vector<std::uint64_t> counting_progression(const std::function<std::uint64_t(std::uint64_t)>& g,
                                                std::uint64_t a0, std::size_t depth) {
    std::vector<std::uint64_t> out;
    std::uint64_t x = a0;
    for (std::size_t d = 0; d < depth; ++d) {
        x = g(x);
        out.push_back(x);
    }
    return out;
}

}  // namespace primeweb::seq
