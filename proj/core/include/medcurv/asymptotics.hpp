#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "medcurv/ball.hpp"
#include "medcurv/curvature.hpp"

namespace medcurv {

enum class DistortionVerdict { kDistortionSuspected, kUndistortedCertified, kInconclusive };
std::string_view verdict_name(DistortionVerdict v) noexcept;

struct PowerSample {
  int n = 0;
  std::optional<int> norm;  // nullopt: beyond the limit or the search budget
};

struct StableNormEstimate {
  Element element;
  int element_norm = 0;
  int n_max = 0;
  int limit = 0;
  std::vector<PowerSample> samples;
  /// min |x^n| / n over the samples that succeeded; nullopt if none did.
  std::optional<Rational> upper;
  /// Running minimum of |x^n| / n in increasing n (weakly decreasing by construction).
  std::vector<Rational> upper_trace;
  /// ||ab(x)||_1 / max_s ||ab(s)||_1, zero when the abelianization gives nothing.
  Rational lower;
  DistortionVerdict verdict = DistortionVerdict::kInconclusive;
  /// Sampled triples with |x^(m+n)| > |x^m| + |x^n|; nonzero means a norm bug.
  std::size_t subadditivity_checked = 0;
  std::size_t subadditivity_violations = 0;
};

struct StableNormOptions {
  unsigned threads = 1;
  TargetedOptions search{};
  /// distortion-suspected needs upper < ratio * |x| and n_max >= min_n_max
  Rational suspicion_ratio{1, 4};
  int min_n_max = 32;
};

StableNormEstimate stable_norm(const GroupSpec& spec, const Element& x, int n_max, int limit,
                               const StableNormOptions& options = {});

/// One instance of the sphere bound or of the ball recursion, scaled by 2|S| to stay integral.
struct ChainCheck {
  enum class Kind { kSphereBound, kBallRecursion };
  Kind kind;
  int n = 0;                 // r2 for the sphere bound, n for the recursion
  std::uint64_t left = 0;    // must be >= right
  std::uint64_t right = 0;
  bool holds = false;
};

struct GrowthReport {
  int radius = 0;
  std::size_t generator_count = 0;
  std::vector<std::size_t> ball_sizes;  // |B_N(0)|..|B_N(R)|
  std::optional<KernelSpec> filter;
  double fitted_base = 0.0;      // least squares on log |B(n)| over the top half of 0..R
  double guaranteed_base = 0.0;  // sqrt(1 + 1/(2|S|))
  Rational guaranteed_base_squared;
};

GrowthReport growth_series(const GroupSpec& spec, int R, const std::optional<KernelSpec>& filter,
                           const EnumerationOptions& options = {});
/// Growth data read off an existing (possibly kernel-restricted) table.
GrowthReport growth_series(const BallTable& table, int R);

struct GrowthVerification {
  int r_kappa = 0;
  int radius = 0;
  bool hypothesis_holds = false;
  std::optional<int> first_counterexample_norm;
  /// nullopt when the hypothesis fails and the chain was skipped.
  std::optional<bool> chain_holds;
  std::vector<ChainCheck> checks;
  /// Same sphere bound with the spheres r2-1, r2 that the boundary pairs actually use.
  std::optional<bool> tight_sphere_bound_holds;
  double base = 0.0;
  Rational base_squared;
  GrowthReport growth;
};

GrowthVerification verify_negative_curvature_growth(const GroupSpec& spec, const std::optional<KernelSpec>& filter,
                                                    int r_kappa, int R, const CensusOptions& options = {});

}  // namespace medcurv
