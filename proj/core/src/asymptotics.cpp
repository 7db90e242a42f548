#include "medcurv/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "medcurv/error.hpp"
#include "medcurv/parallel.hpp"

namespace medcurv {

std::string_view verdict_name(DistortionVerdict v) noexcept {
  switch (v) {
    case DistortionVerdict::kDistortionSuspected: return "distortion-suspected";
    case DistortionVerdict::kUndistortedCertified: return "undistorted-certified";
    case DistortionVerdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::int64_t l1(const std::vector<std::int64_t>& v) {
  std::int64_t sum = 0;
  for (auto c : v) sum += std::llabs(c);
  return sum;
}

}  // namespace

StableNormEstimate stable_norm(const GroupSpec& spec, const Element& x, int n_max, int limit,
                               const StableNormOptions& options) {
  if (n_max < 1) throw PreconditionError("stable norm needs n_max >= 1");
  if (limit < 0) throw PreconditionError("stable norm needs limit >= 0");
  const Group& g = spec.g();
  StableNormEstimate out;
  out.element = x;
  out.n_max = n_max;
  out.limit = limit;
  out.element_norm = norm_targeted(spec, x, limit, options.search);

  std::int64_t gen_scale = 0;
  for (const Element& s : spec.generators) gen_scale = std::max(gen_scale, l1(g.abelianization(s)));
  const std::int64_t ab_x = l1(g.abelianization(x));
  out.lower = gen_scale > 0 ? Rational(ab_x, gen_scale) : Rational(0);

  out.samples.resize(static_cast<std::size_t>(n_max));
  parallel_chunks(out.samples.size(), resolve_threads(options.threads), [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const int n = static_cast<int>(i) + 1;
      PowerSample& sample = out.samples[i];
      sample.n = n;
      // |x^n| >= n ||ab(x)|| / max ||ab(s)||: skip searches that cannot succeed
      if (gen_scale > 0 && static_cast<std::int64_t>(n) * ab_x > static_cast<std::int64_t>(limit) * gen_scale) continue;
      try {
        sample.norm = norm_targeted(spec, g.power(x, n), limit, options.search);
      } catch (const NormExceedsLimitError&) {
        sample.norm.reset();
      }
    }
  });

  for (const auto& s : out.samples) {
    if (s.norm) {
      const Rational r(*s.norm, s.n);
      if (!out.upper || r < *out.upper) out.upper = r;
    }
    if (out.upper) out.upper_trace.push_back(*out.upper);
  }

  for (int m = 1; m <= n_max; ++m) {
    for (int n = m; m + n <= n_max; ++n) {
      const auto& a = out.samples[static_cast<std::size_t>(m - 1)].norm;
      const auto& b = out.samples[static_cast<std::size_t>(n - 1)].norm;
      const auto& c = out.samples[static_cast<std::size_t>(m + n - 1)].norm;
      if (!a || !b || !c) continue;
      ++out.subadditivity_checked;
      if (*c > *a + *b) ++out.subadditivity_violations;
    }
  }

  if (out.lower > 0) {
    out.verdict = DistortionVerdict::kUndistortedCertified;
  } else if (n_max >= options.min_n_max && out.upper &&
             *out.upper < options.suspicion_ratio * static_cast<std::int64_t>(out.element_norm)) {
    out.verdict = DistortionVerdict::kDistortionSuspected;
  } else {
    out.verdict = DistortionVerdict::kInconclusive;
  }
  return out;
}

GrowthReport growth_series(const BallTable& table, int R) {
  if (R < 2) throw PreconditionError("growth series needs R >= 2");
  if (R > table.radius()) throw PreconditionError("growth radius exceeds the table radius");
  GrowthReport out;
  out.radius = R;
  out.generator_count = table.spec().generators.size();
  out.filter = table.filter();
  for (int n = 0; n <= R; ++n) out.ball_sizes.push_back(table.ball_size(n));

  const int lo = (R + 1) / 2;
  std::vector<double> xs;
  std::vector<double> ys;
  for (int n = lo; n <= R; ++n) {
    if (out.ball_sizes[static_cast<std::size_t>(n)] == 0) continue;
    xs.push_back(n);
    ys.push_back(std::log(static_cast<double>(out.ball_sizes[static_cast<std::size_t>(n)])));
  }
  if (xs.size() >= 2) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    out.fitted_base = std::exp(sxy / sxx);
  } else {
    out.fitted_base = 1.0;
  }
  const auto two_s = 2 * static_cast<std::int64_t>(out.generator_count);
  out.guaranteed_base_squared = Rational(two_s + 1, two_s);
  out.guaranteed_base = std::sqrt(to_double(out.guaranteed_base_squared));
  return out;
}

GrowthReport growth_series(const GroupSpec& spec, int R, const std::optional<KernelSpec>& filter,
                           const EnumerationOptions& options) {
  if (R < 2) throw PreconditionError("growth series needs R >= 2");
  BallTable table = enumerate_ball(spec, R, options);
  if (filter) table = restrict_to_kernel(table, *filter);
  return growth_series(table, R);
}

GrowthVerification verify_negative_curvature_growth(const GroupSpec& spec, const std::optional<KernelSpec>& filter,
                                                    int r_kappa, int R, const CensusOptions& options) {
  if (r_kappa < 0 || R < 2 || r_kappa >= R) throw PreconditionError("growth verification needs 0 <= R_kappa < R and R >= 2");
  EnumerationOptions eo = options.enumeration;
  eo.threads = options.threads;
  BallTable table = enumerate_ball(spec, R + 2, eo);
  if (filter) table = restrict_to_kernel(table, *filter);

  GrowthVerification out;
  out.r_kappa = r_kappa;
  out.radius = R;
  out.growth = growth_series(table, R);
  out.base = out.growth.guaranteed_base;
  out.base_squared = out.growth.guaranteed_base_squared;

  const CurvatureCensus c = census(table, R, options);
  out.hypothesis_holds = true;
  for (const auto& sphere : c.spheres) {
    if (sphere.sphere > r_kappa && (sphere.positive != 0 || sphere.zero != 0)) {
      out.hypothesis_holds = false;
      out.first_counterexample_norm = sphere.sphere;
      break;
    }
  }
  if (!out.hypothesis_holds) return out;

  const auto two_s = 2 * static_cast<std::uint64_t>(spec.generators.size());
  auto S = [&](int n) { return static_cast<std::uint64_t>(table.sphere_size(n)); };
  auto B = [&](int n) { return static_cast<std::uint64_t>(table.ball_size(n)); };
  auto A = [&](int lo, int hi) { return B(hi) - B(lo); };

  for (int r2 = r_kappa + 5; r2 + 1 <= R; ++r2) {
    ChainCheck check{ChainCheck::Kind::kSphereBound, r2, two_s * (S(r2) + S(r2 + 1)), A(r_kappa, r2), false};
    check.holds = check.left >= check.right;
    out.checks.push_back(check);
  }
  for (int n = r_kappa + 6; n <= R; ++n) {
    ChainCheck check{ChainCheck::Kind::kBallRecursion, n, two_s * B(n), two_s * B(n - 2) + A(r_kappa, n - 1), false};
    check.holds = check.left >= check.right;
    out.checks.push_back(check);
  }
  if (!out.checks.empty()) {
    out.chain_holds = std::all_of(out.checks.begin(), out.checks.end(), [](const ChainCheck& c) { return c.holds; });
  }
  bool tight = true;
  bool any_tight = false;
  for (int r2 = r_kappa + 5; r2 <= R; ++r2) {
    any_tight = true;
    tight = tight && two_s * (S(r2 - 1) + S(r2)) >= A(r_kappa, r2);
  }
  if (any_tight) out.tight_sphere_bound_holds = tight;
  return out;
}

}  // namespace medcurv
