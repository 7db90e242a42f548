#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "medcurv/element.hpp"
#include "medcurv/group.hpp"

namespace medcurv {

/// Finite symmetric generating set without the identity.
///
/// Construction rejects non-members, the identity and asymmetric lists;
/// duplicates collapse (first occurrence keeps its position).
class GeneratingSet {
 public:
  GeneratingSet(const Group& group, std::vector<Element> elements);

  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  /// Position of s^-1 for the generator at position i.
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }
  std::optional<std::size_t> index_of(const Element& e) const;
  bool contains(const Element& e) const { return index_of(e).has_value(); }

 private:
  std::vector<Element> elements_;
  std::vector<std::size_t> inverse_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

/// A group together with the generating set S used for the word metric.
struct GroupSpec {
  GroupPtr group;
  GeneratingSet generators;

  const Group& g() const noexcept { return *group; }
  std::string describe() const;
  /// {"family", "params", "generators": [rendered literals]}
  nlohmann::json to_json() const;
  GroupSpec with_generators(std::vector<Element> gens) const { return {group, GeneratingSet(*group, std::move(gens))}; }
};

GroupSpec make_spec(GroupPtr group);
GroupSpec make_spec(GroupPtr group, std::vector<Element> generators);

/// Builds a group from {"family": ..., "params": {...}}.
GroupPtr group_from_json(const nlohmann::json& j);
/// Group plus optional "generators" (element literals) and "symmetrize" flag.
GroupSpec spec_from_json(const nlohmann::json& j);
/// free:K, zn:N, heis3, dinf, z2xdinf, s3xz.
GroupSpec spec_from_shorthand(std::string_view text);
GroupSpec load_spec_file(const std::filesystem::path& path);

}  // namespace medcurv
