#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "medcurv/element.hpp"

namespace medcurv {

enum class Family {
  kFreeAbelian,
  kFree,
  kHeisenberg3,
  kInfiniteDihedral,
  kDirectProduct,
  kFinite,
  kFiniteByDihedral,
  kIntegerMatrix,
};

/// A concrete group with computable multiplication and canonical element keys.
///
/// Implementations are immutable after construction, so a single instance can
/// be shared freely between threads.
class Group {
 public:
  virtual ~Group() = default;

  virtual Family family() const noexcept = 0;
  /// Short structural description, e.g. "heis3" or "product(finite(6),zn(1))".
  virtual std::string describe() const = 0;
  /// Config document (family + params) that rebuilds this group.
  virtual nlohmann::json to_json() const = 0;

  std::uint32_t tag() const noexcept { return tag_; }
  /// FNV-1a of a structural key; groups with equal keys are the same group.
  static std::uint32_t tag_for(std::string_view key) noexcept;

  virtual Element identity() const = 0;
  Element multiply(const Element& g, const Element& h) const;
  Element invert(const Element& g) const;
  /// s x s^-1
  Element conjugate(const Element& s, const Element& x) const;
  /// g h g^-1 h^-1
  Element commutator(const Element& g, const Element& h) const;
  Element power(const Element& g, std::int64_t n) const;

  bool is_identity(const Element& g) const { return g == identity(); }
  virtual bool is_abelian() const noexcept = 0;

  /// Image in Z^rank under a homomorphism (the free part of the abelianization
  /// where it is known). Rank may be zero, which gives only trivial bounds.
  virtual std::vector<std::int64_t> abelianization(const Element& g) const = 0;

  /// Canonical textual form. `parse(render(g)) == g` holds for every element.
  virtual std::string render(const Element& g) const = 0;
  /// Parses a native literal, or a word over `letters()` with capitals as inverses.
  Element parse(std::string_view literal) const;
  /// Config literal: strings go through `parse`, structured values are family specific.
  virtual Element from_json(const nlohmann::json& value) const;

  /// Named letters usable in word literals ('a', 'b', ...). Capitals denote inverses.
  virtual std::vector<std::pair<char, Element>> letters() const = 0;
  /// The family's standard symmetric generating set.
  virtual std::vector<Element> standard_generators() const = 0;

 protected:
  explicit Group(std::uint32_t tag) : tag_(tag) {}

  virtual Element multiply_unchecked(const Element& g, const Element& h) const = 0;
  virtual Element invert_unchecked(const Element& g) const = 0;
  virtual std::optional<Element> parse_native(std::string_view literal) const = 0;

  void check_member(const Element& g) const;

  /// Element carrying this group's tag.
  Element make(std::vector<std::int64_t> payload) const { return Element(tag_, std::move(payload)); }


 private:
  std::uint32_t tag_;
};

using GroupPtr = std::shared_ptr<const Group>;

std::string_view family_name(Family f) noexcept;

}  // namespace medcurv
