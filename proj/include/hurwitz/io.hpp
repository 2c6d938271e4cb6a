#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hurwitz/series.hpp"

namespace hurwitz {

/// Parse one payload string in the given ring: decimal for Z and Z/mZ,
/// "p/q" (with "/q" optional) for Q.
Value parse_payload(const Ring& ring, std::string_view text);

/// Series file format: a single JSON object
///   { "ring": "<tag>", "precision": N, "coeffs": ["<payload>", ...] }
/// with exactly N payload strings. parse_series(emit_series(a)) == a.
Series parse_series(const std::string& text);
Series parse_series_file(const std::filesystem::path& path);

std::string emit_series(const Series& a);
void emit_series_file(const Series& a, const std::filesystem::path& path);

} // namespace hurwitz
