#pragma once

// Small helpers shared by the family literal parsers.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace medcurv::detail {

/// "(3,-4)" or "[3,-4]" -> {3,-4}. nullopt when the text is not a tuple.
std::optional<std::vector<std::int64_t>> parse_int_tuple(std::string_view text);

std::string render_int_tuple(const std::vector<std::int64_t>& values);

std::string_view trim(std::string_view text);

/// Splits "L|R" at the top-level '|' of a "[L|R]" literal. nullopt if not of that shape.
std::optional<std::pair<std::string_view, std::string_view>> split_bracket_pair(std::string_view text, char sep);

}  // namespace medcurv::detail
