#include "medcurv/curvature.hpp"

#include <charconv>
#include <string>

#include "medcurv/error.hpp"
#include "medcurv/parallel.hpp"

namespace medcurv {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  auto read = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) throw ConfigError("bad rational '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(read(text));
  const std::int64_t q = read(std::string_view(text).substr(slash + 1));
  if (q == 0) throw ConfigError("zero denominator in '" + text + "'");
  return Rational(read(std::string_view(text).substr(0, slash)), q);
}

int sign(const Rational& r) noexcept { return r.numerator() > 0 ? 1 : (r.numerator() < 0 ? -1 : 0); }

double to_double(const Rational& r) noexcept { return boost::rational_cast<double>(r); }

namespace {

int conjugate_norm(const BallTable& table, const Element& s, const Element& x) {
  const Element y = table.group().conjugate(s, x);
  auto n = table.find_norm(y);
  if (!n) {
    throw OutOfBallError("conjugate " + table.group().render(y) + " of " + table.group().render(x) +
                         " escapes the table of radius " + std::to_string(table.radius()));
  }
  return *n;
}

void require_kappa_radius(const BallTable& table, int norm, const Element& x) {
  if (norm + 2 > table.radius()) {
    throw OutOfBallError("curvature of " + table.group().render(x) + " (norm " + std::to_string(norm) +
                         ") needs a table of radius " + std::to_string(norm + 2) + ", have " +
                         std::to_string(table.radius()));
  }
}

}  // namespace

int delta(const BallTable& table, const Element& s, const Element& x) {
  if (!table.spec().generators.contains(s)) throw PreconditionError("delta needs s in S");
  return table.norm(x) - conjugate_norm(table, s, x);
}

std::int64_t kappa_numerator_at(const BallTable& table, std::size_t index) {
  const Element& x = table.elements()[index];
  const int n = table.norm_at(index);
  std::int64_t sum = 0;
  for (const Element& s : table.spec().generators) sum += n - conjugate_norm(table, s, x);
  return sum;
}

Rational kappa(const BallTable& table, const Element& x) {
  auto idx = table.index_of(x);
  if (!idx) throw OutOfBallError(table.group().render(x) + " is not in the table of radius " + std::to_string(table.radius()));
  require_kappa_radius(table, table.norm_at(*idx), x);
  return Rational(kappa_numerator_at(table, *idx), static_cast<std::int64_t>(table.spec().generators.size()));
}

Rational kappa_bar(const BallTable& table, const Element& x) {
  if (table.group().is_identity(x)) throw PreconditionError("kappa_bar is undefined at the identity");
  const Rational k = kappa(table, x);
  return k / static_cast<std::int64_t>(table.norm(x));
}

bool CurvatureCensus::flat_between(int lo, int hi) const {
  for (const auto& s : spheres) {
    if (s.sphere > lo && s.sphere <= hi && (s.positive != 0 || s.negative != 0)) return false;
  }
  return true;
}

CurvatureCensus census(const BallTable& table, int R, const CensusOptions& options) {
  if (R < 0) throw PreconditionError("census radius must be >= 0");
  if (R + 2 > table.radius()) {
    throw PreconditionError("census to radius " + std::to_string(R) + " needs a table of radius " + std::to_string(R + 2));
  }
  CurvatureCensus out;
  out.radius = R;
  out.generator_count = table.spec().generators.size();
  out.filter = table.filter();
  const unsigned threads = resolve_threads(options.threads);

  for (int n = 1; n <= R; ++n) {
    const std::size_t base = table.ball_size(n - 1);
    const std::size_t count = table.sphere_size(n);
    std::vector<std::int8_t> signs(count);
    parallel_chunks(count, threads, [&](unsigned, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const auto num = kappa_numerator_at(table, base + i);
        signs[i] = static_cast<std::int8_t>(num > 0 ? 1 : (num < 0 ? -1 : 0));
      }
    });
    SphereCensus sc;
    sc.sphere = n;
    const auto sphere = table.sphere(n);
    for (std::size_t i = 0; i < count; ++i) {
      auto bucket = [&](std::size_t& counter, std::vector<Element>& witnesses) {
        ++counter;
        if (witnesses.size() < options.witnesses) witnesses.push_back(sphere[i]);
      };
      if (signs[i] > 0) bucket(sc.positive, sc.positive_witnesses);
      else if (signs[i] < 0) bucket(sc.negative, sc.negative_witnesses);
      else bucket(sc.zero, sc.zero_witnesses);
    }
    out.spheres.push_back(std::move(sc));
  }
  return out;
}

CurvatureCensus census(const GroupSpec& spec, int R, const std::optional<KernelSpec>& filter, const CensusOptions& options) {
  if (R < 0) throw PreconditionError("census radius must be >= 0");
  EnumerationOptions eo = options.enumeration;
  eo.threads = options.threads;
  BallTable table = enumerate_ball(spec, R + 2, eo);
  if (filter) table = restrict_to_kernel(table, *filter);
  return census(table, R, options);
}

AnnulusResult annulus_sum(const BallTable& table, int r1, int r2) {
  if (r1 < 0 || !(r1 < r2 - 4)) {
    throw PreconditionError("annulus needs 0 <= r1 < r2 - 4 (got r1=" + std::to_string(r1) + ", r2=" + std::to_string(r2) + ")");
  }
  if (table.radius() < r2 + 2) {
    throw PreconditionError("annulus with r2=" + std::to_string(r2) + " needs a table of radius " + std::to_string(r2 + 2));
  }
  const auto& gens = table.spec().generators;
  const auto order = static_cast<std::int64_t>(gens.size());
  AnnulusResult out;
  out.r1 = r1;
  out.r2 = r2;

  std::int64_t lhs_num = 0;
  std::int64_t rhs_num = 0;
  for (std::size_t idx = table.ball_size(r1); idx < table.ball_size(r2); ++idx) {
    const Element& x = table.elements()[idx];
    const int nx = table.norm_at(idx);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int ny = conjugate_norm(table, gens[i], x);
      const int d = nx - ny;
      lhs_num += d;
      if (ny <= r1) {
        out.y1.push_back({i, x, d});
        rhs_num += d;
      } else if (ny > r2) {
        out.y2.push_back({i, x, d});
        rhs_num += d;
      }
    }
  }
  out.lhs = Rational(lhs_num, order);
  out.rhs = Rational(rhs_num, order);
  out.bound = Rational(2 * static_cast<std::int64_t>(table.sphere_size(r1 + 1) + table.sphere_size(r1 + 2)));
  out.identity_holds = out.lhs == out.rhs;
  out.bound_holds = out.lhs <= out.bound;
  return out;
}

PairCancellation pair_cancellation(const BallTable& table, int r1, int r2) {
  if (table.radius() < r2 + 2) throw PreconditionError("pair cancellation needs a table of radius r2 + 2");
  const auto& gens = table.spec().generators;
  const Group& g = table.group();
  PairCancellation out;
  for (std::size_t idx = table.ball_size(r1); idx < table.ball_size(r2); ++idx) {
    const Element& x = table.elements()[idx];
    const int nx = table.norm_at(idx);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = g.conjugate(gens[i], x);
      auto ny = table.find_norm(y);
      if (!ny || *ny <= r1 || *ny > r2) continue;
      const Element& s_inv = gens[gens.inverse_index(i)];
      const int back = conjugate_norm(table, s_inv, y);
      ++out.checked;
      if ((nx - *ny) + (*ny - back) != 0) ++out.violations;
    }
  }
  return out;
}

BallSumResult ball_sum(const BallTable& table, int m) {
  if (m < 0 || table.radius() < m + 2) throw PreconditionError("ball sum over B(m) needs a table of radius m + 2");
  const auto& gens = table.spec().generators;
  const auto order = static_cast<std::int64_t>(gens.size());
  BallSumResult out;
  out.m = m;
  std::int64_t lhs_num = 0;
  std::int64_t rhs_num = 0;
  for (std::size_t idx = 0; idx < table.ball_size(m); ++idx) {
    const Element& x = table.elements()[idx];
    const int nx = table.norm_at(idx);
    for (const Element& s : gens) {
      const int ny = conjugate_norm(table, s, x);
      lhs_num += nx - ny;
      if (ny > m) {
        ++out.y_size;
        rhs_num += nx - ny;
      }
    }
  }
  out.lhs = Rational(lhs_num, order);
  out.rhs = Rational(rhs_num, order);
  out.bound = Rational(-static_cast<std::int64_t>(out.y_size), order);
  out.identity_holds = out.lhs == out.rhs;
  out.bound_holds = out.lhs <= out.bound;
  return out;
}

}  // namespace medcurv
