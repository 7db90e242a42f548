#include "literal.hpp"

#include <cctype>
#include <charconv>

namespace medcurv::detail {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

std::optional<std::vector<std::int64_t>> parse_int_tuple(std::string_view text) {
  text = trim(text);
  if (text.size() < 2) return std::nullopt;
  const char open = text.front();
  const char close = text.back();
  if (!((open == '(' && close == ')') || (open == '[' && close == ']'))) return std::nullopt;
  text = text.substr(1, text.size() - 2);

  std::vector<std::int64_t> values;
  if (trim(text).empty()) return values;
  while (true) {
    auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) return std::nullopt;
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

std::string render_int_tuple(const std::vector<std::int64_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  out += ')';
  return out;
}

std::optional<std::pair<std::string_view, std::string_view>> split_bracket_pair(std::string_view text, char sep) {
  text = trim(text);
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') return std::nullopt;
  text = text.substr(1, text.size() - 2);
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) return std::make_pair(trim(text.substr(0, i)), trim(text.substr(i + 1)));
  }
  return std::nullopt;
}

}  // namespace medcurv::detail
