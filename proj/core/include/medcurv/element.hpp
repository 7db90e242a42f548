#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace medcurv {

/// Opaque group element in family-specific canonical form.
///
/// The payload is the canonical key: two elements of the same group are equal
/// iff their payloads are identical. `family` identifies the owning group so
/// that mixing elements of different groups is caught at the group boundary.
class Element {
 public:
  Element() = default;
  Element(std::uint32_t family, std::vector<std::int64_t> payload)
      : family_(family), payload_(std::move(payload)) {}
  Element(std::uint32_t family, std::initializer_list<std::int64_t> payload)
      : family_(family), payload_(payload) {}

  std::uint32_t family() const noexcept { return family_; }
  std::span<const std::int64_t> payload() const noexcept { return payload_; }
  std::size_t size() const noexcept { return payload_.size(); }
  std::int64_t operator[](std::size_t i) const { return payload_[i]; }

  std::uint64_t hash() const noexcept;

  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.family_ == b.family_ && a.payload_ == b.payload_;
  }
  /// Canonical-key order; used for deterministic output ordering.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept {
    if (auto c = a.payload_ <=> b.payload_; c != 0) return c;
    return a.family_ <=> b.family_;
  }

 private:
  std::uint32_t family_ = 0;
  std::vector<std::int64_t> payload_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return static_cast<std::size_t>(e.hash()); }
};

}  // namespace medcurv
