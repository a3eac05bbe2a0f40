#include "primeweb/sequences/mesm_matrix.hpp"

#include <string>

#include "primeweb/errors.hpp"
#include "primeweb/parallel.hpp"

namespace primeweb::seq {

const Ray& MesmMatrix::row_of(std::uint64_t generator) const {
    for (const auto& r : rows)
        if (r.generator == generator) return r;
    throw NotAMemberError("no row for generator " + std::to_string(generator));
}

MesmMatrix build_matrix_for(const FilterSet& family, const std::vector<std::uint64_t>& generators, std::size_t cols,
                            std::optional<std::uint64_t> bound, unsigned threads) {
    MesmMatrix m;
    m.family = family.id();
    m.columns = cols;
    m.value_bound = bound;
    m.rows.resize(generators.size());
    parallel_for(generators.size(), threads,
                 [&](std::size_t i) { m.rows[i] = extend_ray(family, generators[i], cols, bound); });
    return m;
}

MesmMatrix build_matrix(const FilterSet& family, std::size_t rows, std::size_t cols,
                        std::optional<std::uint64_t> bound, unsigned threads) {
    return build_matrix_for(family, family.generators(rows), cols, bound, threads);
}

std::string to_csv(const MesmMatrix& m) {
    std::string out = "generator";
    for (std::size_t d = 1; d <= m.columns; ++d) out += ",d" + std::to_string(d);
    out += "\r\n";
    for (const auto& r : m.rows) {
        out += std::to_string(r.generator);
        for (std::size_t d = 1; d <= m.columns; ++d) {
            out += ',';
            if (d <= r.depth()) {
                out += std::to_string(r.elements[d - 1]);
            } else if (r.truncated()) {
                out += '>' + std::to_string(*r.truncated_at);
            }
        }
        out += "\r\n";
    }
    return out;
}

nlohmann::ordered_json to_json(const MesmMatrix& m) {
    nlohmann::ordered_json j;
    j["family"] = family_tag(m.family);
    j["columns"] = m.columns;
    j["value_bound"] = m.value_bound ? nlohmann::ordered_json(*m.value_bound) : nlohmann::ordered_json(nullptr);
    j["coverage_bound"] = m.coverage_bound;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : m.rows) {
        nlohmann::ordered_json row;
        row["generator"] = r.generator;
        auto elems = nlohmann::ordered_json::array();
        for (std::size_t d = 1; d <= r.depth(); ++d) {
            nlohmann::ordered_json e;
            e["value"] = r.elements[d - 1];
            e["address"] = {r.generator, d};
            elems.push_back(std::move(e));
        }
        row["elements"] = std::move(elems);
        row["truncated_at"] = r.truncated_at ? nlohmann::ordered_json(*r.truncated_at) : nlohmann::ordered_json(nullptr);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace primeweb::seq
