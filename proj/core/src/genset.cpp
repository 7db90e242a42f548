#include "medcurv/genset.hpp"

#include <string>
#include <unordered_set>

#include "medcurv/error.hpp"
#include "medcurv/families.hpp"

namespace medcurv {

GroupSpec ClosureResult::closed_spec(const GroupSpec& spec) const {
  if (!terminated) throw PreconditionError("conjugation closure did not terminate within its budget; the partial set is not usable");
  return spec.with_generators(closed);
}

ClosureResult conjugation_closure(const GroupSpec& spec, std::size_t budget) {
  const auto& gens = spec.generators;
  if (budget < gens.size()) throw PreconditionError("closure budget must be at least |S0| = " + std::to_string(gens.size()));
  const Group& g = spec.g();
  ClosureResult out;
  out.original.assign(gens.begin(), gens.end());
  out.closed = out.original;
  std::unordered_set<Element, ElementHash> seen(out.closed.begin(), out.closed.end());

  std::size_t sweep_from = 0;
  out.terminated = true;
  while (sweep_from < out.closed.size()) {
    const std::size_t sweep_to = out.closed.size();
    for (std::size_t i = sweep_from; i < sweep_to; ++i) {
      for (const Element& t : gens) {
        Element c = g.conjugate(t, out.closed[i]);
        if (!seen.insert(c).second) continue;
        if (out.closed.size() >= budget) {
          out.terminated = false;
          break;
        }
        out.closed.push_back(std::move(c));
      }
      if (!out.terminated) break;
    }
    if (!out.terminated) break;
    sweep_from = sweep_to;
  }

  // class size of each original generator, explored only inside the closed set
  for (const Element& s : out.original) {
    std::unordered_set<Element, ElementHash> orbit{s};
    std::vector<Element> frontier{s};
    while (!frontier.empty() && orbit.size() <= budget) {
      std::vector<Element> next;
      for (const Element& y : frontier) {
        for (const Element& t : gens) {
          Element c = g.conjugate(t, y);
          if (orbit.insert(c).second) next.push_back(std::move(c));
        }
      }
      frontier = std::move(next);
    }
    out.orbit_sizes.push_back(orbit.size());
  }
  return out;
}

GeneratingSet dinf_extension_genset(const GroupSpec& spec) {
  const auto* group = dynamic_cast<const FiniteByDihedralGroup*>(spec.group.get());
  if (group == nullptr) throw PreconditionError("D-infinity extension set needs a finite_by_dihedral group, got " + spec.g().describe());
  const FiniteTable& f = group->finite();
  std::vector<Element> out;
  std::unordered_set<Element, ElementHash> seen;
  auto add = [&](Element e) {
    if (seen.insert(e).second) out.push_back(std::move(e));
  };
  for (int i = 0; i < f.order(); ++i)
    if (i != f.identity()) add(group->finite_element(i));
  for (int i = 0; i < f.order(); ++i) add(group->multiply(group->finite_element(i), group->lift_a()));
  for (int i = 0; i < f.order(); ++i) add(group->multiply(group->finite_element(i), group->lift_b()));
  for (const Element& e : out) {
    if (!seen.contains(group->invert(e))) {
      throw ConfigError("D-infinity extension set is not symmetric: inverse of " + group->render(e) + " is missing");
    }
  }
  return GeneratingSet(*group, std::move(out));
}

bool verify_flat(const GroupSpec& spec, int R, int cutoff, const CensusOptions& options) {
  if (cutoff < 0 || R < cutoff + 3) throw PreconditionError("flat check needs R >= cutoff + 3");
  return census(spec, R, std::nullopt, options).flat_between(cutoff, R);
}

std::size_t dinf_norm_mismatches(const BallTable& table) {
  const auto* group = dynamic_cast<const FiniteByDihedralGroup*>(&table.group());
  if (group == nullptr) throw PreconditionError("norm preservation check needs a finite_by_dihedral group");
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const int n = table.norm_at(i);
    if (n <= 1) continue;
    const auto [k, e] = group->project(table.elements()[i]);
    if (InfiniteDihedralGroup::word_length(k, e) != n) ++mismatches;
  }
  return mismatches;
}

std::size_t conjugation_invariance_violations(const BallTable& table) {
  const Group& g = table.group();
  std::size_t violations = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (const Element& s : table.spec().generators) {
      auto n = table.find_norm(g.conjugate(s, table.elements()[i]));
      if (n && *n != table.norm_at(i)) ++violations;
    }
  }
  return violations;
}

}  // namespace medcurv
