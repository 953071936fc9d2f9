#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scimap::csv {

/// Splits one CSV record. Double-quoted fields may contain commas and
/// doubled quotes. Returns nullopt on an unterminated quote.
std::optional<std::vector<std::string>> split(std::string_view line);

/// Quotes a field only when it needs it.
std::string quote(std::string_view field);

/// Strips a trailing '\r' and a leading UTF-8 byte-order mark.
std::string_view trim_line(std::string_view line, bool first_line);

}  // namespace scimap::csv
