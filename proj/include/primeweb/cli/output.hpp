#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

namespace primeweb::cli {

// Writes text to dir/name (creating dir) and returns the path. A name of "-"
// is not a file: callers print such output instead.
std::filesystem::path write_output(const std::filesystem::path& dir, const std::string& name, std::string_view text);

// JSON text with two-space indent and a trailing newline.
std::string json_text(const nlohmann::ordered_json& j);

// One RFC-4180 field: quoted when it holds a comma, quote or line break.
std::string csv_field(std::string_view s);

// SVG preceded by a comment carrying the command line and a UTC timestamp;
// everything after the stamp is deterministic.
std::string stamp_svg(std::string_view svg, std::string_view description);

}  // namespace primeweb::cli
