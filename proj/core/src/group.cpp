#include "medcurv/group.hpp"

#include <cctype>

#include "medcurv/error.hpp"

namespace medcurv {

std::uint64_t Element::hash() const noexcept {
  // splitmix64 finalizer folded over the payload
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ family_;
  for (std::int64_t v : payload_) {
    std::uint64_t z = h + static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return h;
}

std::uint32_t Group::tag_for(std::string_view key) noexcept {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : key) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

void Group::check_member(const Element& g) const {
  if (g.family() != tag_) {
    throw FamilyMismatchError("element does not belong to group " + describe());
  }
}

Element Group::multiply(const Element& g, const Element& h) const {
  check_member(g);
  check_member(h);
  return multiply_unchecked(g, h);
}

Element Group::invert(const Element& g) const {
  check_member(g);
  return invert_unchecked(g);
}

Element Group::conjugate(const Element& s, const Element& x) const {
  check_member(s);
  check_member(x);
  return multiply_unchecked(multiply_unchecked(s, x), invert_unchecked(s));
}

Element Group::commutator(const Element& g, const Element& h) const {
  check_member(g);
  check_member(h);
  Element gh = multiply_unchecked(g, h);
  Element inv = invert_unchecked(multiply_unchecked(h, g));
  return multiply_unchecked(gh, inv);
}

Element Group::power(const Element& g, std::int64_t n) const {
  check_member(g);
  Element base = n < 0 ? invert_unchecked(g) : g;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Element result = identity();
  while (e != 0) {
    if (e & 1u) result = multiply_unchecked(result, base);
    e >>= 1;
    if (e != 0) base = multiply_unchecked(base, base);
  }
  return result;
}

Element Group::parse(std::string_view literal) const {
  while (!literal.empty() && std::isspace(static_cast<unsigned char>(literal.front()))) literal.remove_prefix(1);
  while (!literal.empty() && std::isspace(static_cast<unsigned char>(literal.back()))) literal.remove_suffix(1);
  if (literal.empty()) throw ConfigError("empty element literal for " + describe());
  if (auto native = parse_native(literal)) return *native;
  if (literal == "1") return identity();

  auto alphabet = letters();
  Element result = identity();
  for (char c : literal) {
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const Element* found = nullptr;
    for (const auto& [name, element] : alphabet) {
      if (name == lower) found = &element;
    }
    if (found == nullptr || !std::isalpha(static_cast<unsigned char>(c))) {
      throw ConfigError("cannot parse element literal '" + std::string(literal) + "' for " + describe());
    }
    Element letter = std::isupper(static_cast<unsigned char>(c)) ? invert_unchecked(*found) : *found;
    result = multiply_unchecked(result, letter);
  }
  return result;
}

Element Group::from_json(const nlohmann::json& value) const {
  if (!value.is_string()) {
    throw ConfigError("element literal for " + describe() + " must be a string, got " + value.dump());
  }
  return parse(value.get<std::string>());
}

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::kFreeAbelian: return "free_abelian";
    case Family::kFree: return "free";
    case Family::kHeisenberg3: return "heisenberg3";
    case Family::kInfiniteDihedral: return "infinite_dihedral";
    case Family::kDirectProduct: return "direct_product";
    case Family::kFinite: return "finite";
    case Family::kFiniteByDihedral: return "finite_by_dihedral";
    case Family::kIntegerMatrix: return "integer_matrix";
  }
  return "unknown";
}

}  // namespace medcurv
