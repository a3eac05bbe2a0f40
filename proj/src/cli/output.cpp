#include "primeweb/cli/output.hpp"

#include <chrono>
#include <fstream>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "primeweb/errors.hpp"

namespace primeweb::cli {

std::filesystem::path write_output(const std::filesystem::path& dir, const std::string& name, std::string_view text) {
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error("cannot write " + path.string());
    return path;
}

std::string json_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string stamp_svg(std::string_view svg, std::string_view description) {
    std::string safe(description);
    for (std::size_t pos = 0; (pos = safe.find("--", pos)) != std::string::npos;) safe.replace(pos, 2, "- -");
    const auto now = std::chrono::time_point_cast<std::chrono::seconds>(std::chrono::system_clock::now());
    return fmt::format("<!-- primeweb {} generated {:%Y-%m-%dT%H:%M:%SZ} -->\n{}", safe, now, svg);
}

}  // namespace primeweb::cli
