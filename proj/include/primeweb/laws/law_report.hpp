#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace primeweb::laws {

// One evaluated point of a law: ray generator m, depth n, the ray value and
// the residual against the law's threshold.
struct LawPoint {
    std::uint64_t m = 0;
    std::uint32_t n = 0;
    std::uint64_t value = 0;
    double predicted = 0.0;
    double residual = 0.0;
    double threshold = 0.0;
    bool within() const;
};

struct LawReport {
    std::string law;
    std::string note;
    std::vector<LawPoint> points;

    double max_abs_residual() const;
    // Largest |residual| among points whose depth satisfies the predicate.
    double max_abs_residual(std::uint32_t min_depth, std::uint32_t max_depth) const;
    std::size_t violations() const;
    bool passed() const { return violations() == 0; }
    nlohmann::ordered_json to_json() const;
};

}  // namespace primeweb::laws
