// Free abelian, free, Heisenberg and infinite dihedral families.

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "literal.hpp"
#include "medcurv/error.hpp"
#include "medcurv/families.hpp"

namespace medcurv {

namespace {

std::vector<std::int64_t> copy_payload(const Element& g) { return {g.payload().begin(), g.payload().end()}; }

std::vector<std::int64_t> ints_from_json(const nlohmann::json& value, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const auto& v : value) {
    if (!v.is_number_integer()) throw ConfigError(what + ": expected integers, got " + value.dump());
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- FreeAbelian

FreeAbelianGroup::FreeAbelianGroup(int rank) : Group(tag_for("zn:" + std::to_string(rank))), rank_(rank) {
  if (rank < 1) throw ConfigError("free abelian rank must be >= 1");
}

Element FreeAbelianGroup::vector(std::vector<std::int64_t> v) const {
  if (static_cast<int>(v.size()) != rank_) {
    throw ConfigError("expected " + std::to_string(rank_) + " coordinates for " + describe());
  }
  return make(std::move(v));
}

std::string FreeAbelianGroup::describe() const { return "zn(" + std::to_string(rank_) + ")"; }

nlohmann::json FreeAbelianGroup::to_json() const {
  return {{"family", "free_abelian"}, {"params", {{"rank", rank_}}}};
}

Element FreeAbelianGroup::identity() const { return make(std::vector<std::int64_t>(static_cast<std::size_t>(rank_), 0)); }

Element FreeAbelianGroup::multiply_unchecked(const Element& g, const Element& h) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(rank_));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g[i] + h[i];
  return make(std::move(out));
}

Element FreeAbelianGroup::invert_unchecked(const Element& g) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(rank_));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -g[i];
  return make(std::move(out));
}

std::vector<std::int64_t> FreeAbelianGroup::abelianization(const Element& g) const {
  check_member(g);
  return copy_payload(g);
}

std::string FreeAbelianGroup::render(const Element& g) const { return detail::render_int_tuple(copy_payload(g)); }

std::optional<Element> FreeAbelianGroup::parse_native(std::string_view literal) const {
  auto tuple = detail::parse_int_tuple(literal);
  if (!tuple) return std::nullopt;
  return vector(std::move(*tuple));
}

Element FreeAbelianGroup::from_json(const nlohmann::json& value) const {
  if (value.is_array()) return vector(ints_from_json(value, describe()));
  return Group::from_json(value);
}

std::vector<std::pair<char, Element>> FreeAbelianGroup::letters() const {
  std::vector<std::pair<char, Element>> out;
  for (int i = 0; i < rank_ && i < 26; ++i) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(rank_), 0);
    v[static_cast<std::size_t>(i)] = 1;
    out.emplace_back(static_cast<char>('a' + i), make(std::move(v)));
  }
  return out;
}

std::vector<Element> FreeAbelianGroup::standard_generators() const {
  std::vector<Element> out;
  for (const auto& [name, e] : letters()) {
    out.push_back(e);
    out.push_back(invert_unchecked(e));
  }
  return out;
}

// ---------------------------------------------------------------- Free

FreeGroup::FreeGroup(int rank) : Group(tag_for("free:" + std::to_string(rank))), rank_(rank) {
  if (rank < 1 || rank > 26) throw ConfigError("free group rank must be in 1..26");
}

Element FreeGroup::word(std::vector<std::int64_t> letters) const {
  std::vector<std::int64_t> reduced;
  reduced.reserve(letters.size());
  for (std::int64_t l : letters) {
    if (l == 0 || std::llabs(l) > rank_) throw ConfigError("letter out of range for " + describe());
    if (!reduced.empty() && reduced.back() == -l) {
      reduced.pop_back();
    } else {
      reduced.push_back(l);
    }
  }
  return make(std::move(reduced));
}

std::string FreeGroup::describe() const { return "free(" + std::to_string(rank_) + ")"; }

nlohmann::json FreeGroup::to_json() const { return {{"family", "free"}, {"params", {{"rank", rank_}}}}; }

Element FreeGroup::identity() const { return make({}); }

Element FreeGroup::multiply_unchecked(const Element& g, const Element& h) const {
  auto lhs = g.payload();
  auto rhs = h.payload();
  std::size_t cancel = 0;
  while (cancel < lhs.size() && cancel < rhs.size() && lhs[lhs.size() - 1 - cancel] == -rhs[cancel]) ++cancel;
  std::vector<std::int64_t> out;
  out.reserve(lhs.size() + rhs.size() - 2 * cancel);
  out.insert(out.end(), lhs.begin(), lhs.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), rhs.begin() + static_cast<std::ptrdiff_t>(cancel), rhs.end());
  return make(std::move(out));
}

Element FreeGroup::invert_unchecked(const Element& g) const {
  auto p = g.payload();
  std::vector<std::int64_t> out(p.rbegin(), p.rend());
  for (auto& l : out) l = -l;
  return make(std::move(out));
}

std::vector<std::int64_t> FreeGroup::abelianization(const Element& g) const {
  check_member(g);
  std::vector<std::int64_t> out(static_cast<std::size_t>(rank_), 0);
  for (std::int64_t l : g.payload()) out[static_cast<std::size_t>(std::llabs(l) - 1)] += l > 0 ? 1 : -1;
  return out;
}

std::string FreeGroup::render(const Element& g) const {
  if (g.size() == 0) return "1";
  std::string out;
  for (std::int64_t l : g.payload()) {
    char c = static_cast<char>('a' + std::llabs(l) - 1);
    out += l > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

std::optional<Element> FreeGroup::parse_native(std::string_view) const { return std::nullopt; }

std::vector<std::pair<char, Element>> FreeGroup::letters() const {
  std::vector<std::pair<char, Element>> out;
  for (int i = 0; i < rank_; ++i) out.emplace_back(static_cast<char>('a' + i), make({i + 1}));
  return out;
}

std::vector<Element> FreeGroup::standard_generators() const {
  std::vector<Element> out;
  for (int i = 0; i < rank_; ++i) {
    out.push_back(make({i + 1}));
    out.push_back(make({-(i + 1)}));
  }
  return out;
}

// ---------------------------------------------------------------- Heisenberg

Heisenberg3Group::Heisenberg3Group() : Group(tag_for("heis3")) {}

Element Heisenberg3Group::triple(std::int64_t x, std::int64_t y, std::int64_t z) const { return make({x, y, z}); }

nlohmann::json Heisenberg3Group::to_json() const { return {{"family", "heisenberg3"}, {"params", nlohmann::json::object()}}; }

Element Heisenberg3Group::identity() const { return make({0, 0, 0}); }

Element Heisenberg3Group::multiply_unchecked(const Element& g, const Element& h) const {
  return make({g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1]});
}

Element Heisenberg3Group::invert_unchecked(const Element& g) const {
  return make({-g[0], -g[1], -g[2] + g[0] * g[1]});
}

std::vector<std::int64_t> Heisenberg3Group::abelianization(const Element& g) const {
  check_member(g);
  return {g[0], g[1]};
}

std::string Heisenberg3Group::render(const Element& g) const { return detail::render_int_tuple(copy_payload(g)); }

std::optional<Element> Heisenberg3Group::parse_native(std::string_view literal) const {
  auto tuple = detail::parse_int_tuple(literal);
  if (!tuple) return std::nullopt;
  if (tuple->size() != 3) throw ConfigError("heis3 literal needs 3 coordinates");
  return make(std::move(*tuple));
}

Element Heisenberg3Group::from_json(const nlohmann::json& value) const {
  if (value.is_array()) {
    auto v = ints_from_json(value, describe());
    if (v.size() != 3) throw ConfigError("heis3 literal needs 3 coordinates");
    return make(std::move(v));
  }
  return Group::from_json(value);
}

std::vector<std::pair<char, Element>> Heisenberg3Group::letters() const {
  return {{'a', triple(1, 0, 0)}, {'b', triple(0, 1, 0)}, {'c', triple(0, 0, 1)}};
}

std::vector<Element> Heisenberg3Group::standard_generators() const {
  return {triple(1, 0, 0), triple(-1, 0, 0), triple(0, 1, 0), triple(0, -1, 0)};
}

// ---------------------------------------------------------------- Infinite dihedral

InfiniteDihedralGroup::InfiniteDihedralGroup() : Group(tag_for("dinf")) {}

Element InfiniteDihedralGroup::normal_form(std::int64_t k, int reflection) const {
  if (reflection != 0 && reflection != 1) throw ConfigError("dinf reflection bit must be 0 or 1");
  return make({k, reflection});
}

std::int64_t InfiniteDihedralGroup::word_length(std::int64_t k, int reflection) noexcept {
  if (k >= 0) return 2 * k + reflection;
  return 2 * (-k) - reflection;
}

nlohmann::json InfiniteDihedralGroup::to_json() const {
  return {{"family", "infinite_dihedral"}, {"params", nlohmann::json::object()}};
}

Element InfiniteDihedralGroup::identity() const { return make({0, 0}); }

Element InfiniteDihedralGroup::multiply_unchecked(const Element& g, const Element& h) const {
  // a (ab)^m = (ab)^-m a
  if (g[1] == 0) return make({g[0] + h[0], h[1]});
  return make({g[0] - h[0], 1 - h[1]});
}

Element InfiniteDihedralGroup::invert_unchecked(const Element& g) const {
  if (g[1] == 1) return g;
  return make({-g[0], 0});
}

std::vector<std::int64_t> InfiniteDihedralGroup::abelianization(const Element& g) const {
  check_member(g);
  return {};
}

std::string InfiniteDihedralGroup::render(const Element& g) const {
  const std::int64_t length = word_length(g[0], static_cast<int>(g[1]));
  if (length == 0) return "1";
  char letter = g[0] >= 0 ? 'a' : 'b';
  std::string out;
  for (std::int64_t i = 0; i < length; ++i) {
    out += letter;
    letter = letter == 'a' ? 'b' : 'a';
  }
  return out;
}

std::optional<Element> InfiniteDihedralGroup::parse_native(std::string_view) const { return std::nullopt; }

std::vector<std::pair<char, Element>> InfiniteDihedralGroup::letters() const { return {{'a', a()}, {'b', b()}}; }

std::vector<Element> InfiniteDihedralGroup::standard_generators() const { return {a(), b()}; }

}  // namespace medcurv
