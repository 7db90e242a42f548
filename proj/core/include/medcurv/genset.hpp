#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "medcurv/ball.hpp"
#include "medcurv/curvature.hpp"

namespace medcurv {

struct ClosureResult {
  std::vector<Element> original;
  /// Original generators first, then new conjugates in discovery order.
  std::vector<Element> closed;
  /// Size of the conjugacy class (under the closure sweep) of each original generator.
  std::vector<std::size_t> orbit_sizes;
  bool terminated = false;

  /// The closed set as a generating set; throws PreconditionError if the closure did not terminate.
  GroupSpec closed_spec(const GroupSpec& spec) const;
};

/// Closes S under s -> t s t^-1 (t in S) until a sweep adds nothing or the set exceeds `budget`.
ClosureResult conjugation_closure(const GroupSpec& spec, std::size_t budget);

/// {g_i} u {g ā} u {g b̄} for g in F, deduplicated and checked for symmetry.
GeneratingSet dinf_extension_genset(const GroupSpec& spec);

/// kappa = 0 for every element with cutoff < |x| <= R. Requires R >= cutoff + 3.
bool verify_flat(const GroupSpec& spec, int R, int cutoff, const CensusOptions& options = {});

/// Number of table elements with |x| > 1 whose norm differs from the {a, b}-norm of their D-infinity image.
std::size_t dinf_norm_mismatches(const BallTable& table);

/// Number of (g, x) in S x table with |g x g^-1| != |x| where both are in the table.
std::size_t conjugation_invariance_violations(const BallTable& table);

}  // namespace medcurv
