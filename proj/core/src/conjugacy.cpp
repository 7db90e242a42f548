#include "medcurv/conjugacy.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "medcurv/error.hpp"

namespace medcurv {

ConjugacyOrbit orbit(const BallTable& table, const Element& x, int M, const OrbitOptions& options) {
  const Group& g = table.group();
  const int nx = table.norm(x);
  if (nx > M) throw PreconditionError("orbit seed has norm " + std::to_string(nx) + " > bound " + std::to_string(M));
  if (table.radius() < M) throw PreconditionError("orbit bound " + std::to_string(M) + " exceeds table radius");

  ConjugacyOrbit out;
  out.seed = x;
  out.bound = M;
  std::unordered_set<Element, ElementHash> seen{x};
  std::vector<Element> frontier{x};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const Element& m : frontier) {
      for (const Element& s : table.spec().generators) {
        Element c = g.conjugate(s, m);
        auto n = table.find_norm(c);
        if (!n || *n > M) {
          out.frontier_escaped = true;
          continue;
        }
        if (seen.insert(c).second) {
          if (seen.size() > options.max_members) {
            throw ResourceError("conjugacy orbit exceeded " + std::to_string(options.max_members) + " members");
          }
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  out.members.assign(seen.begin(), seen.end());
  std::sort(out.members.begin(), out.members.end());
  out.verdict = out.frontier_escaped ? OrbitVerdict::kEscapesBound : OrbitVerdict::kClosedWithinBound;
  return out;
}

std::optional<int> exiting_time(const BallTable& table, const Element& x, int k_max) {
  if (table.filter()) throw PreconditionError("exiting time needs an unrestricted table (conjugators range over B(k))");
  if (k_max < 0) throw PreconditionError("k_max must be >= 0");
  const int nx = table.norm(x);
  if (nx + 2 * k_max > table.radius()) {
    throw PreconditionError("exiting time with k_max=" + std::to_string(k_max) + " needs a table of radius " +
                            std::to_string(nx + 2 * k_max));
  }
  const Group& g = table.group();
  for (int k = 1; k <= k_max; ++k) {
    for (const Element& sigma : table.sphere(k)) {
      if (table.norm(g.conjugate(sigma, x)) > nx) return k;
    }
  }
  return std::nullopt;
}

bool ExitReport::exits_bounded(int from, int to) const {
  for (const auto& s : spheres)
    if (s.sphere >= from && s.sphere <= to && s.exits > L) return false;
  return true;
}

bool ExitReport::k_step_bounded(int from, int to) const {
  for (const auto& s : spheres)
    if (s.sphere >= from && s.sphere <= to && s.k_step_exits > k_step_bound) return false;
  return true;
}

ExitReport exits_per_sphere(const GroupSpec& spec, int R, int k, const EnumerationOptions& options) {
  if (R < 1) throw PreconditionError("exits need R >= 1");
  if (k < 1) throw PreconditionError("k-step exits need k >= 1");
  const BallTable table = enumerate_ball(spec, R + 2 * k, options);
  const Group& g = table.group();
  ExitReport out;
  out.radius = R;
  out.k = k;

  for (int n = 1; n <= R; ++n) {
    ExitSphere es;
    es.sphere = n;
    es.size = table.sphere_size(n);
    for (const Element& x : table.sphere(n)) {
      auto tau = exiting_time(table, x, k);
      if (tau && *tau == 1) ++es.exits;
      if (tau) ++es.k_step_exits;
    }
    for (int m = n - 1; m <= n; ++m) {
      for (const Element& x : table.sphere(m)) {
        for (const Element& s : spec.generators) {
          if (table.norm(g.conjugate(s, x)) > n) ++es.y_size;
        }
      }
    }
    out.L = std::max(out.L, es.y_size);
    out.spheres.push_back(es);
  }
  out.k_step_bound = table.ball_size(k - 1) * static_cast<std::size_t>(2 * k - 1) * out.L;
  return out;
}

Reduction reduce_conjugate(const BallTable& table, const Element& x) {
  const Group& g = table.group();
  Reduction out;
  out.start = x;
  Element current = x;
  int nc = table.norm(x);
  for (;;) {
    std::optional<ReductionStep> best;
    for (const Element& s : table.spec().generators) {
      Element y = g.conjugate(s, current);
      auto ny = table.find_norm(y);
      if (!ny || *ny >= nc) continue;  // missing means norm beyond the radius, hence not smaller
      if (!best || *ny < best->norm || (*ny == best->norm && y < best->result)) best = ReductionStep{s, std::move(y), *ny};
    }
    if (!best) break;
    current = best->result;
    nc = best->norm;
    out.chain.push_back(std::move(*best));
  }
  out.minimal = current;
  out.minimal_norm = nc;
  return out;
}

BoundaryProfile conjugacy_graph_boundary(const GroupSpec& spec, const Element& x, const Element& u, const Element& v,
                                         const std::vector<int>& m_list, const BoundaryOptions& options) {
  if (m_list.empty()) throw PreconditionError("boundary profile needs at least one m");
  const int m_max = *std::max_element(m_list.begin(), m_list.end());
  if (*std::min_element(m_list.begin(), m_list.end()) < 0) throw PreconditionError("m must be >= 0");
  const Group& g = spec.g();

  const int nu = norm_targeted(spec, u, 64);
  const int nv = norm_targeted(spec, v, 64);
  BoundaryProfile out;
  out.lipschitz_constant = 2 * std::max(nu, nv);
  out.window = options.window > 0 ? options.window : std::min(256, std::max(8, m_max * m_max));
  const BallTable table = enumerate_ball(spec, m_max + out.lipschitz_constant, options.enumeration);

  const std::vector<Element> moves{u, g.invert(u), v, g.invert(v)};
  struct Vertex {
    Element image;
    std::optional<int> norm;
    bool on_edge;  // every lattice point with this image lies on the window edge
  };
  std::vector<Vertex> lattice;
  std::unordered_map<Element, std::size_t, ElementHash> first_seen;
  const int K = out.window;
  const Element u_low = g.power(u, -K);
  Element ui = u_low;
  for (int i = -K; i <= K; ++i) {
    Element w = g.multiply(ui, g.power(v, -K));
    for (int j = -K; j <= K; ++j) {
      Element phi = g.conjugate(w, x);
      const bool edge = std::abs(i) == K || std::abs(j) == K;
      auto [it, fresh] = first_seen.emplace(phi, lattice.size());
      if (!fresh) {
        ++out.injectivity_violations;
        if (!edge) lattice[it->second].on_edge = false;
      }
      auto n = table.find_norm(phi);
      lattice.push_back({std::move(phi), n, edge});
      w = g.multiply(w, v);
    }
    ui = g.multiply(ui, u);
  }

  // Lipschitz bound along every explored edge with both norms known
  for (const Vertex& vert : lattice) {
    if (!vert.norm) continue;
    for (const Element& s : moves) {
      auto n2 = table.find_norm(g.conjugate(s, vert.image));
      if (!n2) continue;
      ++out.lipschitz_checked;
      if (std::abs(*vert.norm - *n2) > out.lipschitz_constant) ++out.lipschitz_violations;
    }
  }

  for (int m : m_list) {
    BoundaryLevel level;
    level.m = m;
    std::unordered_set<Element, ElementHash> vertices;
    std::unordered_set<Element, ElementHash> boundary;
    for (const Vertex& vert : lattice) {
      if (!vert.norm || *vert.norm > m) continue;
      if (!vertices.insert(vert.image).second) continue;
      if (vert.on_edge) level.box_saturated = true;
      for (const Element& s : moves) {
        auto n2 = table.find_norm(g.conjugate(s, vert.image));
        if (!n2 || *n2 > m) {
          boundary.insert(vert.image);
          break;
        }
      }
    }
    level.vertices = vertices.size();
    level.boundary = boundary.size();
    out.levels.push_back(level);
  }
  return out;
}

}  // namespace medcurv
