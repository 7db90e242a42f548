#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "medcurv/group.hpp"

namespace medcurv {

/// Z^n. Payload: the integer vector.
class FreeAbelianGroup final : public Group {
 public:
  explicit FreeAbelianGroup(int rank);

  int rank() const noexcept { return rank_; }
  Element vector(std::vector<std::int64_t> v) const;

  Family family() const noexcept override { return Family::kFreeAbelian; }
  std::string describe() const override;
  nlohmann::json to_json() const override;
  Element identity() const override;
  bool is_abelian() const noexcept override { return true; }
  std::vector<std::int64_t> abelianization(const Element& g) const override;
  std::string render(const Element& g) const override;
  Element from_json(const nlohmann::json& value) const override;
  std::vector<std::pair<char, Element>> letters() const override;
  std::vector<Element> standard_generators() const override;

 protected:
  Element multiply_unchecked(const Element& g, const Element& h) const override;
  Element invert_unchecked(const Element& g) const override;
  std::optional<Element> parse_native(std::string_view literal) const override;

 private:
  int rank_;
};

/// Free group F_k. Payload: freely reduced word, letter i encoded as +(i+1), its inverse as -(i+1).
class FreeGroup final : public Group {
 public:
  explicit FreeGroup(int rank);

  int rank() const noexcept { return rank_; }
  Element word(std::vector<std::int64_t> letters) const;

  Family family() const noexcept override { return Family::kFree; }
  std::string describe() const override;
  nlohmann::json to_json() const override;
  Element identity() const override;
  bool is_abelian() const noexcept override { return rank_ == 1; }
  std::vector<std::int64_t> abelianization(const Element& g) const override;
  std::string render(const Element& g) const override;
  std::vector<std::pair<char, Element>> letters() const override;
  std::vector<Element> standard_generators() const override;

 protected:
  Element multiply_unchecked(const Element& g, const Element& h) const override;
  Element invert_unchecked(const Element& g) const override;
  std::optional<Element> parse_native(std::string_view literal) const override;

 private:
  int rank_;
};

/// Integral Heisenberg group as upper unitriangular 3x3 matrices.
///
/// (x,y,z) is the matrix [[1,x,z],[0,1,y],[0,0,1]], so
/// (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y'), a = (1,0,0), b = (0,1,0).
class Heisenberg3Group final : public Group {
 public:
  Heisenberg3Group();

  Element triple(std::int64_t x, std::int64_t y, std::int64_t z) const;

  Family family() const noexcept override { return Family::kHeisenberg3; }
  std::string describe() const override { return "heis3"; }
  nlohmann::json to_json() const override;
  Element identity() const override;
  bool is_abelian() const noexcept override { return false; }
  std::vector<std::int64_t> abelianization(const Element& g) const override;
  std::string render(const Element& g) const override;
  Element from_json(const nlohmann::json& value) const override;
  std::vector<std::pair<char, Element>> letters() const override;
  std::vector<Element> standard_generators() const override;

 protected:
  Element multiply_unchecked(const Element& g, const Element& h) const override;
  Element invert_unchecked(const Element& g) const override;
  std::optional<Element> parse_native(std::string_view literal) const override;
};

/// D_inf = <a, b | a^2 = b^2 = 1>. Payload (k, e) stands for (ab)^k a^e.
class InfiniteDihedralGroup final : public Group {
 public:
  InfiniteDihedralGroup();

  Element normal_form(std::int64_t k, int reflection) const;
  Element a() const { return normal_form(0, 1); }
  Element b() const { return normal_form(-1, 1); }
  /// Length of the reduced alternating word, i.e. the {a,b} word norm.
  static std::int64_t word_length(std::int64_t k, int reflection) noexcept;

  Family family() const noexcept override { return Family::kInfiniteDihedral; }
  std::string describe() const override { return "dinf"; }
  nlohmann::json to_json() const override;
  Element identity() const override;
  bool is_abelian() const noexcept override { return false; }
  std::vector<std::int64_t> abelianization(const Element& g) const override;
  std::string render(const Element& g) const override;
  std::vector<std::pair<char, Element>> letters() const override;
  std::vector<Element> standard_generators() const override;

 protected:
  Element multiply_unchecked(const Element& g, const Element& h) const override;
  Element invert_unchecked(const Element& g) const override;
  std::optional<Element> parse_native(std::string_view literal) const override;
};

/// Multiplication table of a finite group. Entry [i][j] is the index of i*j.
struct FiniteTable {
  std::vector<std::vector<int>> table;
  std::vector<std::string> names;  // optional; defaults to g0, g1, ...

  /// Throws ConfigError unless the table is a group law (latin square with identity, associative).
  void validate() const;
  int order() const noexcept { return static_cast<int>(table.size()); }
  int identity() const;
  int inverse(int g) const;
  int mul(int g, int h) const { return table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }

  nlohmann::json to_json() const;
  static FiniteTable from_json(const nlohmann::json& j);

  static FiniteTable cyclic(int n);
  /// S3 acting on {1,2,3}; names "e", "(12)", "(13)", "(23)", "(123)", "(132)".
  static FiniteTable symmetric3();
};

/// Finite group given by its table. Payload: [index].
class FiniteGroup final : public Group {
 public:
  explicit FiniteGroup(FiniteTable table);

  const FiniteTable& table() const noexcept { return table_; }
  Element at(int index) const;
  const std::string& name(int index) const { return names_[static_cast<std::size_t>(index)]; }

  Family family() const noexcept override { return Family::kFinite; }
  std::string describe() const override;
  nlohmann::json to_json() const override;
  Element identity() const override;
  bool is_abelian() const noexcept override { return abelian_; }
  std::vector<std::int64_t> abelianization(const Element& g) const override;
  std::string render(const Element& g) const override;
  Element from_json(const nlohmann::json& value) const override;
  std::vector<std::pair<char, Element>> letters() const override;
  std::vector<Element> standard_generators() const override;

 protected:
  Element multiply_unchecked(const Element& g, const Element& h) const override;
  Element invert_unchecked(const Element& g) const override;
  std::optional<Element> parse_native(std::string_view literal) const override;

 private:
  FiniteTable table_;
  std::vector<std::string> names_;
  std::vector<int> inverses_;
  int identity_;
  bool abelian_;
};

/// Left x Right. Payload: [len(left payload), left payload..., right payload...].
class DirectProductGroup final : public Group {
 public:
  DirectProductGroup(GroupPtr left, GroupPtr right);

  const Group& left() const noexcept { return *left_; }
  const Group& right() const noexcept { return *right_; }
  Element pair(const Element& l, const Element& r) const;
  Element left_part(const Element& g) const;
  Element right_part(const Element& g) const;

  Family family() const noexcept override { return Family::kDirectProduct; }
  std::string describe() const override;
  nlohmann::json to_json() const override;
  Element identity() const override;
  bool is_abelian() const noexcept override { return left_->is_abelian() && right_->is_abelian(); }
  std::vector<std::int64_t> abelianization(const Element& g) const override;
  std::string render(const Element& g) const override;
  Element from_json(const nlohmann::json& value) const override;
  std::vector<std::pair<char, Element>> letters() const override;
  std::vector<Element> standard_generators() const override;

 protected:
  Element multiply_unchecked(const Element& g, const Element& h) const override;
  Element invert_unchecked(const Element& g) const override;
  std::optional<Element> parse_native(std::string_view literal) const override;

 private:
  GroupPtr left_;
  GroupPtr right_;
};

/// Data of a finite extension 1 -> F -> G -> D_inf -> 1.
///
/// Lifts A, B of the dihedral generators act on F by the automorphisms
/// `a_action`, `b_action` (f -> A f A^-1) and square into F: A^2 = a_square,
/// B^2 = b_square. Every element is uniquely f * w(A, B) with w alternating.
struct DihedralExtensionData {
  FiniteTable finite;
  std::vector<int> a_action;
  std::vector<int> b_action;
  int a_square = 0;
  int b_square = 0;

  void validate() const;
  nlohmann::json to_json() const;
  static DihedralExtensionData from_json(const nlohmann::json& j);
  /// F x D_inf: F = Z/n, trivial action, A^2 = B^2 = 1.
  static DihedralExtensionData trivial_product(FiniteTable finite);
};

/// Payload [f, k, e] = f * lift((ab)^k a^e).
class FiniteByDihedralGroup final : public Group {
 public:
  explicit FiniteByDihedralGroup(DihedralExtensionData data);

  const DihedralExtensionData& data() const noexcept { return data_; }
  const FiniteTable& finite() const noexcept { return data_.finite; }
  Element make_element(int f, std::int64_t k, int reflection) const;
  Element finite_element(int f) const { return make_element(f, 0, 0); }
  Element lift_a() const { return make_element(finite_identity_, 0, 1); }
  Element lift_b() const { return make_element(finite_identity_, -1, 1); }
  /// The quotient map to D_inf, as (k, e).
  std::pair<std::int64_t, int> project(const Element& g) const;

  Family family() const noexcept override { return Family::kFiniteByDihedral; }
  std::string describe() const override;
  nlohmann::json to_json() const override;
  Element identity() const override;
  bool is_abelian() const noexcept override { return false; }
  std::vector<std::int64_t> abelianization(const Element& g) const override;
  std::string render(const Element& g) const override;
  std::vector<std::pair<char, Element>> letters() const override;
  /// The D_inf extension set: preimage of {1, a, b} minus the identity.
  std::vector<Element> standard_generators() const override;

 protected:
  Element multiply_unchecked(const Element& g, const Element& h) const override;
  Element invert_unchecked(const Element& g) const override;
  std::optional<Element> parse_native(std::string_view literal) const override;

 private:
  struct Alternating {
    int first;  // 0 = starts with A, 1 = starts with B; ignored when length == 0
    std::int64_t length;
  };
  static Alternating to_alternating(std::int64_t k, int reflection) noexcept;
  static std::pair<std::int64_t, int> from_alternating(Alternating w) noexcept;
  /// Automorphism of F induced by conjugating with lift(w).
  int act(Alternating w, int f) const;
  int square(int letter) const { return letter == 0 ? data_.a_square : data_.b_square; }

  DihedralExtensionData data_;
  int finite_identity_;
  std::vector<int> finite_inverse_;
  // powers of (alpha beta) and (beta alpha), each cyclic with the given period
  std::vector<std::vector<int>> ab_powers_;
  std::vector<std::vector<int>> ba_powers_;
};

using BigInt = boost::multiprecision::cpp_int;

struct IntMatrix {
  int dim = 0;
  std::vector<BigInt> entries;  // row-major

  const BigInt& at(int r, int c) const { return entries[static_cast<std::size_t>(r * dim + c)]; }
  BigInt& at(int r, int c) { return entries[static_cast<std::size_t>(r * dim + c)]; }
  static IntMatrix identity(int dim);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Subgroup of GL_d(Z) generated by the given unimodular matrices.
/// Payload: entries in row-major order, each as [signed limb count, 32-bit limbs...].
class IntegerMatrixGroup final : public Group {
 public:
  IntegerMatrixGroup(int dim, std::vector<IntMatrix> generators);

  int dim() const noexcept { return dim_; }
  Element from_matrix(const IntMatrix& m) const;
  IntMatrix to_matrix(const Element& g) const;
  const std::vector<IntMatrix>& defining_generators() const noexcept { return generators_; }

  Family family() const noexcept override { return Family::kIntegerMatrix; }
  std::string describe() const override;
  nlohmann::json to_json() const override;
  Element identity() const override;
  bool is_abelian() const noexcept override { return false; }
  std::vector<std::int64_t> abelianization(const Element& g) const override;
  std::string render(const Element& g) const override;
  Element from_json(const nlohmann::json& value) const override;
  std::vector<std::pair<char, Element>> letters() const override;
  std::vector<Element> standard_generators() const override;

 protected:
  Element multiply_unchecked(const Element& g, const Element& h) const override;
  Element invert_unchecked(const Element& g) const override;
  std::optional<Element> parse_native(std::string_view literal) const override;

 private:
  int dim_;
  std::vector<IntMatrix> generators_;
};

/// Parses "[[1,2],[0,1]]" (arbitrary-precision entries).
IntMatrix parse_int_matrix(std::string_view text);
std::string render_int_matrix(const IntMatrix& m);

}  // namespace medcurv
