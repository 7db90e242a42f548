#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "medcurv/ball.hpp"

namespace medcurv {

using Rational = boost::rational<std::int64_t>;

/// "p/q" with q > 0, always including the denominator ("0/1", "-1/3").
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);
int sign(const Rational& r) noexcept;
double to_double(const Rational& r) noexcept;

/// |x| - |s x s^-1| for s in S.
int delta(const BallTable& table, const Element& s, const Element& x);

/// (1/|S|) sum over S of delta(s, x). Requires |x| + 2 <= table radius.
Rational kappa(const BallTable& table, const Element& x);
/// kappa(x) / |x|, undefined at the identity.
Rational kappa_bar(const BallTable& table, const Element& x);

/// Sum of delta over S for the table element at `index` (|S| * kappa).
std::int64_t kappa_numerator_at(const BallTable& table, std::size_t index);

struct SphereCensus {
  int sphere = 0;
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  std::vector<Element> positive_witnesses;
  std::vector<Element> zero_witnesses;
  std::vector<Element> negative_witnesses;

  std::size_t total() const noexcept { return positive + zero + negative; }
};

struct CurvatureCensus {
  int radius = 0;
  std::size_t generator_count = 0;
  std::vector<SphereCensus> spheres;  // spheres 1..radius
  std::optional<KernelSpec> filter;

  /// Spheres n with lo < n <= hi all have zero in every slot but `zero`.
  bool flat_between(int lo, int hi) const;
};

struct CensusOptions {
  std::size_t witnesses = 10;
  unsigned threads = 1;
  EnumerationOptions enumeration{};
};

/// Sign census of spheres 1..R. The table must have radius >= R + 2 and may be kernel-restricted.
CurvatureCensus census(const BallTable& table, int R, const CensusOptions& options = {});
/// Enumerates B(R + 2), restricts to `filter` if given, and counts.
CurvatureCensus census(const GroupSpec& spec, int R, const std::optional<KernelSpec>& filter,
                       const CensusOptions& options = {});

struct BoundaryPair {
  std::size_t generator;  // index into S
  Element x;
  int delta;
};

/// Sum of kappa over the annulus r1 < |x| <= r2 (within the table's kernel filter)
/// together with the boundary-pair form of the same sum.
struct AnnulusResult {
  int r1 = 0;
  int r2 = 0;
  Rational lhs;
  Rational rhs;
  std::vector<BoundaryPair> y1;  // |x| in {r1+1, r1+2}, |s x s^-1| <= r1
  std::vector<BoundaryPair> y2;  // |x| in {r2-1, r2}, |s x s^-1| >= r2+1
  Rational bound;                // 2 (|S_N(r1+1)| + |S_N(r1+2)|)
  bool identity_holds = false;
  bool bound_holds = false;
};

AnnulusResult annulus_sum(const BallTable& table, int r1, int r2);

struct PairCancellation {
  std::size_t checked = 0;
  std::size_t violations = 0;
};

/// Checks delta(s,x) + delta(s^-1, s x s^-1) = 0 for every (s, x) with x and
/// s x s^-1 both in the annulus r1 < |.| <= r2.
PairCancellation pair_cancellation(const BallTable& table, int r1, int r2);

/// Sum of kappa over B(m) against the pairs leaving the ball.
struct BallSumResult {
  int m = 0;
  Rational lhs;
  Rational rhs;
  std::size_t y_size = 0;  // |{(s,x) : x in B(m), |s x s^-1| > m}|
  Rational bound;          // -|Y| / |S|
  bool identity_holds = false;
  bool bound_holds = false;
};

BallSumResult ball_sum(const BallTable& table, int m);

}  // namespace medcurv
