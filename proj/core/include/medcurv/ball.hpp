#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "medcurv/families.hpp"
#include "medcurv/group_spec.hpp"

namespace medcurv {

/// Element-count cap: 5e7 canonical keys unless CURV_MAX_ELEMENTS says otherwise.
std::size_t default_max_elements();

struct EnumerationOptions {
  std::size_t max_elements = default_max_elements();
  unsigned threads = 1;  // 0 = hardware concurrency
};

/// Normal subgroup N given as the kernel of a homomorphism onto a finite quotient,
/// specified by the image of every generator.
class KernelSpec {
 public:
  KernelSpec(FiniteTable quotient, std::vector<int> images, const GroupSpec& spec);

  /// {"quotient": {"table": ..., "names": ...}, "images": {"<generator literal>": index or name}}
  static KernelSpec from_json(const nlohmann::json& j, const GroupSpec& spec);
  nlohmann::json to_json(const GroupSpec& spec) const;
  /// Quotient of order one: N is the whole group.
  static KernelSpec trivial(const GroupSpec& spec);

  const FiniteTable& quotient() const noexcept { return quotient_; }
  int quotient_identity() const noexcept { return identity_; }
  int image(std::size_t generator_index) const { return images_[generator_index]; }
  std::span<const int> images() const noexcept { return images_; }

 private:
  FiniteTable quotient_;
  std::vector<int> images_;
  int identity_;
};

/// Open-addressing index from canonical keys to positions in an element array.
class KeyIndex {
 public:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  void reserve(std::size_t n);
  std::optional<std::uint32_t> find(std::span<const Element> elements, const Element& e, std::uint64_t hash) const;
  /// Inserts position `pos` (whose element must be elements[pos]).
  void insert(std::span<const Element> elements, std::uint32_t pos, std::uint64_t hash);
  std::size_t size() const noexcept { return size_; }

 private:
  void grow(std::span<const Element> elements);

  std::vector<std::uint32_t> slots_;
  std::vector<std::uint64_t> hashes_;  // hash per element position
  std::size_t size_ = 0;
};

/// Word-metric ball B(R): every element of norm <= R with its norm.
///
/// Spheres are stored contiguously, each sorted by canonical key. A table
/// restricted to a kernel keeps only the kernel elements but their norms
/// remain the ambient word norms.
class BallTable {
 public:
  const GroupSpec& spec() const noexcept { return *spec_; }
  const Group& group() const noexcept { return *spec_->group; }
  int radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }

  std::span<const Element> elements() const noexcept { return elements_; }
  std::span<const Element> sphere(int n) const;
  /// |S(0)|, ..., |S(R)|
  std::vector<std::size_t> counts() const;
  std::size_t sphere_size(int n) const { return sphere(n).size(); }
  /// |B(n)| for n <= R
  std::size_t ball_size(int n) const;

  std::optional<std::size_t> index_of(const Element& e) const;
  int norm_at(std::size_t index) const noexcept { return norms_[index]; }
  std::optional<int> find_norm(const Element& e) const;
  bool contains(const Element& e) const { return index_of(e).has_value(); }
  /// Word norm of e. Throws OutOfBallError when e is not in the table.
  int norm(const Element& e) const;

  const std::optional<KernelSpec>& filter() const noexcept { return filter_; }

 private:
  friend BallTable enumerate_ball(const GroupSpec&, int, const EnumerationOptions&);
  friend BallTable restrict_to_kernel(const BallTable&, const KernelSpec&);
  void rebuild_index();

  std::shared_ptr<const GroupSpec> spec_;
  int radius_ = 0;
  std::vector<Element> elements_;
  std::vector<int> norms_;
  std::vector<std::size_t> offsets_;  // sphere n occupies [offsets_[n], offsets_[n+1])
  KeyIndex index_;
  std::optional<KernelSpec> filter_;
};

BallTable enumerate_ball(const GroupSpec& spec, int radius, const EnumerationOptions& options = {});

/// Image of every table element in the quotient, propagated along generator
/// edges. Throws ConfigError when two paths give different images.
std::vector<int> kernel_images(const BallTable& table, const KernelSpec& kernel);

/// Sub-table of kernel elements; norms unchanged.
BallTable restrict_to_kernel(const BallTable& table, const KernelSpec& kernel);

struct TargetedOptions {
  std::size_t max_elements = 4'000'000;  // both search fronts together
};

/// Word norm of x by bidirectional breadth-first search.
/// Throws NormExceedsLimitError if |x| > limit or the element budget runs out first.
int norm_targeted(const GroupSpec& spec, const Element& x, int limit, const TargetedOptions& options = {});

}  // namespace medcurv
