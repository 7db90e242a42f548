// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

#include "medcurv/asymptotics.hpp"
#include "medcurv/ball.hpp"
#include "medcurv/conjugacy.hpp"
#include "medcurv/curvature.hpp"
#include "medcurv/genset.hpp"
#include "oracles.hpp"

using namespace medcurv;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double max_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (max_seconds > 0 && secs >= max_seconds) {
    out.ok = false;
    out.detail += " (runtime over " + std::to_string(max_seconds) + " s)";
  }
  if (!out.ok) ++failures;
  std::printf("%s %2d %-38s %8.3fs  %s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.detail.c_str());
  std::fflush(stdout);
}

Outcome flat_census(const GroupSpec& spec, int R, int from) {
  const auto c = census(spec, R, std::nullopt);
  std::size_t nonzero = 0;
  std::size_t checked = 0;
  for (const auto& s : c.spheres) {
    if (s.sphere < from) continue;
    nonzero += s.positive + s.negative;
    checked += s.total();
  }
  return {nonzero == 0, std::to_string(checked) + " elements, " + std::to_string(nonzero) + " nonzero"};
}

}  // namespace

int main() {
  criterion(1, "flat abelian baseline", 1.0, [] { return flat_census(spec_from_shorthand("zn:2"), 8, 1); });

  criterion(2, "infinite dihedral flatness", 0, [] { return flat_census(spec_from_shorthand("dinf"), 10, 2); });

  criterion(3, "flat extension generating set", 5.0, [] {
    const auto spec = spec_from_shorthand("z2xdinf");
    const auto s = dinf_extension_genset(spec);
    const bool flat = verify_flat(spec.with_generators({s.begin(), s.end()}), 10, 3);
    return Outcome{flat && s.size() == 5, "|S| = " + std::to_string(s.size()) + ", flat = " + (flat ? "true" : "false")};
  });

  criterion(4, "conjugation-closure flatness", 0, [] {
    const auto spec = spec_from_shorthand("s3xz");
    const auto closure = conjugation_closure(spec, 1000);
    if (!closure.terminated) return Outcome{false, "closure did not terminate"};
    auto out = flat_census(closure.closed_spec(spec), 8, 0);
    out.detail = "|S| = " + std::to_string(closure.closed.size()) + ", " + out.detail;
    return out;
  });

  criterion(5, "annulus identity and bound", 30.0, [] {
    const auto t = enumerate_ball(spec_from_shorthand("heis3"), 10);
    const auto a = annulus_sum(t, 3, 8);
    const Rational bound(2 * static_cast<std::int64_t>(t.sphere_size(4) + t.sphere_size(5)));
    const bool ok = a.lhs == a.rhs && a.lhs <= bound && a.bound == bound;
    return Outcome{ok, "lhs " + to_string(a.lhs) + ", rhs " + to_string(a.rhs) + ", bound " + to_string(bound)};
  });

  criterion(6, "pair cancellation", 0, [] {
    const auto t = enumerate_ball(spec_from_shorthand("heis3"), 10);
    const auto pc = pair_cancellation(t, 3, 8);
    return Outcome{pc.checked > 0 && pc.violations == 0,
                   std::to_string(pc.checked) + " pairs, " + std::to_string(pc.violations) + " violations"};
  });

  criterion(7, "mixed signs in Heisenberg", 0, [] {
    const auto c = census(spec_from_shorthand("heis3"), 8, std::nullopt);
    std::size_t pos = 0;
    std::size_t neg = 0;
    std::ostringstream os;
    for (const auto& s : c.spheres) {
      if (s.sphere < 5) continue;
      pos += s.positive;
      neg += s.negative;
      os << " S" << s.sphere << "=(" << s.positive << "," << s.zero << "," << s.negative << ")";
    }
    // regression counts (pos, zero, neg) per sphere
    const bool expected = c.spheres[4].positive == 16 && c.spheres[4].negative == 124 && c.spheres[7].positive == 80 &&
                          c.spheres[7].zero == 248 && c.spheres[7].negative == 396;
    return Outcome{pos > 0 && neg > 0 && expected, "pos " + std::to_string(pos) + ", neg " + std::to_string(neg) + os.str()};
  });

  criterion(8, "free group has no positive curvature", 0, [] {
    const auto c = census(spec_from_shorthand("free:2"), 7, std::nullopt);
    std::size_t pos = 0;
    for (const auto& s : c.spheres) pos += s.positive;
    return Outcome{pos == 0, std::to_string(pos) + " positive"};
  });

  criterion(9, "exit bound", 0, [] {
    const auto r = exits_per_sphere(spec_from_shorthand("z2xdinf"), 10, 1);
    std::size_t worst = 0;
    for (const auto& s : r.spheres)
      if (s.sphere >= 4) worst = std::max(worst, s.exits);
    return Outcome{r.exits_bounded(4, 10) && worst <= r.L,
                   "max exits " + std::to_string(worst) + ", L = " + std::to_string(r.L)};
  });

  criterion(10, "distortion witness", 0, [] {
    const auto heis = spec_from_shorthand("heis3");
    const auto z = stable_norm(heis, heis.g().parse("(0,0,1)"), 64, 40);
    const auto z2 = spec_from_shorthand("zn:2");
    const auto g = stable_norm(z2, z2.g().parse("(1,0)"), 64, 70);
    const bool z_ok = z.upper && *z.upper <= Rational(1, 2) && z.verdict == DistortionVerdict::kDistortionSuspected;
    const bool g_ok = g.upper && *g.upper == Rational(1) && g.lower == Rational(1) &&
                      g.verdict == DistortionVerdict::kUndistortedCertified;
    return Outcome{z_ok && g_ok, "z: upper " + (z.upper ? to_string(*z.upper) : std::string("none")) + " " +
                                     std::string(verdict_name(z.verdict)) + "; generator: " +
                                     std::string(verdict_name(g.verdict))};
  });

  criterion(11, "growth machinery", 0, [] {
    const auto free = spec_from_shorthand("free:2");
    const auto v = verify_negative_curvature_growth(free, std::nullopt, 0, 7);
    const auto g = growth_series(free, 7, std::nullopt);
    // fitted^2 >= 9/8, compared on the square
    const bool base_ok = g.fitted_base * g.fitted_base * 8.0 >= 9.0;
    const bool ok = v.hypothesis_holds && v.chain_holds.value_or(false) && base_ok;
    std::ostringstream os;
    os << "hypothesis " << v.hypothesis_holds << ", chain " << v.chain_holds.value_or(false) << ", " << v.checks.size()
       << " checks, fitted base " << g.fitted_base;
    return Outcome{ok, os.str()};
  });

  criterion(12, "oracle equivalence", 0, [] {
    std::size_t mismatches = 0;
    std::size_t compared = 0;
    std::size_t targeted = 0;
    const auto specs = oracle::builtin_specs();
    for (const auto& [name, spec] : specs) {
      const int R = 5;
      const auto expected = oracle::naive_norms(spec, R);
      const auto t = enumerate_ball(spec, R);
      if (t.size() != expected.size()) ++mismatches;
      for (const auto& [e, n] : expected) {
        ++compared;
        if (t.find_norm(e) != n) ++mismatches;
      }
      for (const Element& x : oracle::sample_elements(t, 200, 2024)) {
        ++targeted;
        if (norm_targeted(spec, x, R) != t.norm(x)) ++mismatches;
      }
    }
    return Outcome{mismatches == 0, std::to_string(specs.size()) + " families, " + std::to_string(compared) +
                                        " oracle norms, " + std::to_string(targeted) + " targeted, " +
                                        std::to_string(mismatches) + " mismatches"};
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
