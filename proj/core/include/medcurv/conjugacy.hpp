#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "medcurv/ball.hpp"

namespace medcurv {

enum class OrbitVerdict { kClosedWithinBound, kEscapesBound };

/// Conjugates of a seed reachable by single-generator conjugations without
/// leaving B(M). Escaping is evidence of an infinite class, not a proof.
struct ConjugacyOrbit {
  Element seed;
  int bound = 0;
  std::vector<Element> members;  // sorted by canonical key
  bool frontier_escaped = false;
  OrbitVerdict verdict = OrbitVerdict::kClosedWithinBound;
};

struct OrbitOptions {
  std::size_t max_members = 1'000'000;
};

/// Requires |x| <= M <= table radius; a conjugate missing from the table has norm > M.
ConjugacyOrbit orbit(const BallTable& table, const Element& x, int M, const OrbitOptions& options = {});

/// Smallest |sigma| <= k_max with |sigma x sigma^-1| > |x|, or nullopt.
/// Requires an unrestricted table with |x| + 2 k_max <= radius.
std::optional<int> exiting_time(const BallTable& table, const Element& x, int k_max);

struct ExitSphere {
  int sphere = 0;
  std::size_t size = 0;
  std::size_t exits = 0;         // tau = 1
  std::size_t k_step_exits = 0;  // tau <= k
  std::size_t y_size = 0;        // |{(s,x) : x in B(n), |s x s^-1| > n}|
};

struct ExitReport {
  int radius = 0;
  int k = 1;
  std::vector<ExitSphere> spheres;  // 1..radius
  /// Largest |Y(n)| over the reported spheres; every sphere's exit count is at most its own |Y(n)|.
  std::size_t L = 0;
  /// |B(k-1)| (2k-1) L: a k-step exit on S(m) is conjugate, by some element of B(k-1),
  /// to an exit on one of the spheres m-2k+2, ..., m.
  std::size_t k_step_bound = 0;

  bool exits_bounded(int from, int to) const;
  bool k_step_bounded(int from, int to) const;
};

ExitReport exits_per_sphere(const GroupSpec& spec, int R, int k, const EnumerationOptions& options = {});

struct ReductionStep {
  Element conjugator;  // s with the next element equal to s x s^-1
  Element result;
  int norm = 0;
};

struct Reduction {
  Element start;
  Element minimal;
  int minimal_norm = 0;
  std::vector<ReductionStep> chain;
};

/// Greedy descent: at each step conjugate by the generator giving the smallest
/// norm (ties by canonical key) while the norm strictly drops.
Reduction reduce_conjugate(const BallTable& table, const Element& x);

struct BoundaryLevel {
  int m = 0;
  std::size_t vertices = 0;  // distinct Phi(w) with |Phi(w)| <= m
  std::size_t boundary = 0;  // vertices with a neighbour of norm > m
  bool box_saturated = false;  // some vertex is reached only from the edge of the lattice window
};

struct BoundaryProfile {
  int window = 0;  // lattice points u^i v^j with |i|, |j| <= window
  int lipschitz_constant = 0;  // 2 max(|u|, |v|)
  std::size_t lipschitz_checked = 0;
  std::size_t lipschitz_violations = 0;
  std::size_t injectivity_violations = 0;  // lattice points whose image repeats an earlier one
  std::vector<BoundaryLevel> levels;
};

struct BoundaryOptions {
  int window = 0;  // 0 picks min(256, max(8, m_max^2))
  EnumerationOptions enumeration{};
};

/// Conjugation graph on Phi(w) = w x w^-1 over the (u, v)-lattice.
BoundaryProfile conjugacy_graph_boundary(const GroupSpec& spec, const Element& x, const Element& u, const Element& v,
                                         const std::vector<int>& m_list, const BoundaryOptions& options = {});

}  // namespace medcurv
