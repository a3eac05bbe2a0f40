#include "primeweb/laws/law_report.hpp"

#include <algorithm>
#include <cmath>

namespace primeweb::laws {

bool LawPoint::within() const { return std::isfinite(residual) && std::abs(residual) <= threshold; }

double LawReport::max_abs_residual() const { return max_abs_residual(0, UINT32_MAX); }

double LawReport::max_abs_residual(std::uint32_t min_depth, std::uint32_t max_depth) const {
    double worst = 0.0;
    for (const auto& p : points)
        if (p.n >= min_depth && p.n <= max_depth) worst = std::max(worst, std::abs(p.residual));
    return worst;
}

std::size_t LawReport::violations() const {
    return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const LawPoint& p) { return !p.within(); }));
}

nlohmann::ordered_json LawReport::to_json() const {
    nlohmann::ordered_json j;
    j["law"] = law;
    j["note"] = note;
    j["points_checked"] = points.size();
    j["max_abs_residual"] = max_abs_residual();
    j["violations"] = violations();
    j["passed"] = passed();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : points) {
        nlohmann::ordered_json e;
        e["m"] = p.m;
        e["n"] = p.n;
        e["value"] = p.value;
        e["predicted"] = p.predicted;
        e["residual"] = p.residual;
        e["threshold"] = p.threshold;
        e["within"] = p.within();
        arr.push_back(std::move(e));
    }
    j["points"] = std::move(arr);
    return j;
}

}  // namespace primeweb::laws
