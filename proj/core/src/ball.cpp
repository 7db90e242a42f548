#include "medcurv/ball.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_map>

#include "medcurv/error.hpp"
#include "medcurv/parallel.hpp"

namespace medcurv {

std::size_t default_max_elements() {
  if (const char* env = std::getenv("CURV_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 50'000'000;
}

// ---------------------------------------------------------------- KernelSpec

KernelSpec::KernelSpec(FiniteTable quotient, std::vector<int> images, const GroupSpec& spec)
    : quotient_(std::move(quotient)), images_(std::move(images)) {
  quotient_.validate();
  identity_ = quotient_.identity();
  if (images_.size() != spec.generators.size()) {
    throw ConfigError("kernel spec needs one image per generator (" + std::to_string(spec.generators.size()) + ")");
  }
  for (int v : images_)
    if (v < 0 || v >= quotient_.order()) throw ConfigError("kernel image out of range");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[spec.generators.inverse_index(i)] != quotient_.inverse(images_[i])) {
      throw ConfigError("kernel images do not respect inverses at generator " + spec.g().render(spec.generators[i]));
    }
  }
}

KernelSpec KernelSpec::trivial(const GroupSpec& spec) {
  return KernelSpec(FiniteTable::cyclic(1), std::vector<int>(spec.generators.size(), 0), spec);
}

KernelSpec KernelSpec::from_json(const nlohmann::json& j, const GroupSpec& spec) {
  if (!j.is_object() || !j.contains("quotient") || !j.contains("images")) {
    throw ConfigError("kernel spec needs 'quotient' and 'images'");
  }
  FiniteTable q = FiniteTable::from_json(j.at("quotient"));
  std::vector<std::string> names = q.names;
  auto resolve = [&](const nlohmann::json& v) -> int {
    if (v.is_number_integer()) return v.get<int>();
    if (v.is_string()) {
      auto it = std::find(names.begin(), names.end(), v.get<std::string>());
      if (it != names.end()) return static_cast<int>(it - names.begin());
    }
    throw ConfigError("cannot resolve quotient element " + v.dump());
  };
  std::vector<int> images(spec.generators.size(), -1);
  const auto& img = j.at("images");
  if (img.is_array()) {
    if (img.size() != images.size()) throw ConfigError("kernel image list length differs from |S|");
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = resolve(img[i]);
  } else if (img.is_object()) {
    for (const auto& [literal, value] : img.items()) {
      auto idx = spec.generators.index_of(spec.g().parse(literal));
      if (!idx) throw ConfigError("kernel image given for non-generator '" + literal + "'");
      images[*idx] = resolve(value);
    }
    // missing inverses are implied by symmetry
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] >= 0) continue;
      const int partner = images[spec.generators.inverse_index(i)];
      if (partner < 0) throw ConfigError("no kernel image for generator " + spec.g().render(spec.generators[i]));
      images[i] = q.inverse(partner);
    }
  } else {
    throw ConfigError("'images' must be a list or an object");
  }
  return KernelSpec(std::move(q), std::move(images), spec);
}

nlohmann::json KernelSpec::to_json(const GroupSpec& spec) const {
  nlohmann::json images = nlohmann::json::object();
  for (std::size_t i = 0; i < images_.size(); ++i) images[spec.g().render(spec.generators[i])] = images_[i];
  return {{"quotient", quotient_.to_json()}, {"images", images}};
}

// ---------------------------------------------------------------- KeyIndex

void KeyIndex::reserve(std::size_t n) {
  hashes_.reserve(n);
  std::size_t want = std::bit_ceil(std::max<std::size_t>(16, 2 * n));
  if (want > slots_.size()) {
    slots_.assign(want, kEmpty);
    const std::size_t mask = want - 1;
    for (std::uint32_t pos = 0; pos < hashes_.size(); ++pos) {
      std::size_t slot = hashes_[pos] & mask;
      while (slots_[slot] != kEmpty) slot = (slot + 1) & mask;
      slots_[slot] = pos;
    }
  }
}

void KeyIndex::grow(std::span<const Element>) { reserve(std::max<std::size_t>(size_ * 2, 16)); }

std::optional<std::uint32_t> KeyIndex::find(std::span<const Element> elements, const Element& e, std::uint64_t hash) const {
  if (slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t slot = hash & mask;; slot = (slot + 1) & mask) {
    const std::uint32_t pos = slots_[slot];
    if (pos == kEmpty) return std::nullopt;
    if (hashes_[pos] == hash && elements[pos] == e) return pos;
  }
}

void KeyIndex::insert(std::span<const Element> elements, std::uint32_t pos, std::uint64_t hash) {
  if (pos != hashes_.size()) throw InvariantError("key index positions must be inserted in order");
  hashes_.push_back(hash);
  if (2 * (size_ + 1) > slots_.size()) grow(elements);
  const std::size_t mask = slots_.size() - 1;
  std::size_t slot = hash & mask;
  while (slots_[slot] != kEmpty) slot = (slot + 1) & mask;
  slots_[slot] = pos;
  ++size_;
}

// ---------------------------------------------------------------- BallTable

std::span<const Element> BallTable::sphere(int n) const {
  if (n < 0) return {};
  if (n > radius_) throw OutOfBallError("sphere " + std::to_string(n) + " exceeds table radius " + std::to_string(radius_));
  const auto lo = offsets_[static_cast<std::size_t>(n)];
  const auto hi = offsets_[static_cast<std::size_t>(n) + 1];
  return std::span<const Element>(elements_).subspan(lo, hi - lo);
}

std::vector<std::size_t> BallTable::counts() const {
  std::vector<std::size_t> out;
  for (int n = 0; n <= radius_; ++n) out.push_back(sphere_size(n));
  return out;
}

std::size_t BallTable::ball_size(int n) const {
  if (n < 0) return 0;
  if (n > radius_) throw OutOfBallError("ball " + std::to_string(n) + " exceeds table radius " + std::to_string(radius_));
  return offsets_[static_cast<std::size_t>(n) + 1];
}

std::optional<std::size_t> BallTable::index_of(const Element& e) const {
  auto pos = index_.find(elements_, e, e.hash());
  if (!pos) return std::nullopt;
  return *pos;
}

std::optional<int> BallTable::find_norm(const Element& e) const {
  auto idx = index_of(e);
  if (!idx) return std::nullopt;
  return norms_[*idx];
}

int BallTable::norm(const Element& e) const {
  auto n = find_norm(e);
  if (!n) {
    throw OutOfBallError("norm exceeds R=" + std::to_string(radius_) + " (or element outside the subgroup) for " + group().render(e));
  }
  return *n;
}

void BallTable::rebuild_index() {
  index_ = KeyIndex();
  index_.reserve(elements_.size());
  for (std::uint32_t pos = 0; pos < elements_.size(); ++pos) index_.insert(elements_, pos, elements_[pos].hash());
}

BallTable enumerate_ball(const GroupSpec& spec, int radius, const EnumerationOptions& options) {
  if (radius < 0) throw PreconditionError("ball radius must be >= 0");
  const Group& group = spec.g();
  BallTable table;
  table.spec_ = std::make_shared<const GroupSpec>(spec);
  table.radius_ = radius;
  table.offsets_ = {0};

  auto& elements = table.elements_;
  KeyIndex index;
  elements.push_back(group.identity());
  table.norms_.push_back(0);
  index.insert(elements, 0, elements[0].hash());
  table.offsets_.push_back(1);

  const unsigned threads = resolve_threads(options.threads);
  for (int n = 0; n < radius; ++n) {
    const std::size_t lo = table.offsets_[static_cast<std::size_t>(n)];
    const std::size_t hi = table.offsets_[static_cast<std::size_t>(n) + 1];
    std::vector<std::vector<std::pair<Element, std::uint64_t>>> found(threads);
    parallel_chunks(hi - lo, threads, [&](unsigned chunk, std::size_t begin, std::size_t end) {
      auto& out = found[chunk];
      for (std::size_t i = lo + begin; i < lo + end; ++i) {
        for (const Element& s : spec.generators) {
          Element y = group.multiply(s, elements[i]);
          const std::uint64_t h = y.hash();
          if (!index.find(elements, y, h)) out.emplace_back(std::move(y), h);
        }
      }
    });
    for (auto& chunk : found) {
      for (auto& [y, h] : chunk) {
        if (index.find(elements, y, h)) continue;
        if (elements.size() >= options.max_elements) {
          throw ResourceError("element budget of " + std::to_string(options.max_elements) +
                              " exceeded while enumerating sphere " + std::to_string(n + 1) + " of " + spec.describe());
        }
        elements.push_back(std::move(y));
        table.norms_.push_back(n + 1);
        index.insert(elements, static_cast<std::uint32_t>(elements.size() - 1), h);
      }
    }
    table.offsets_.push_back(elements.size());
  }

  for (int n = 0; n <= radius; ++n) {
    auto first = elements.begin() + static_cast<std::ptrdiff_t>(table.offsets_[static_cast<std::size_t>(n)]);
    auto last = elements.begin() + static_cast<std::ptrdiff_t>(table.offsets_[static_cast<std::size_t>(n) + 1]);
    std::sort(first, last);
  }
  table.rebuild_index();
  return table;
}

std::vector<int> kernel_images(const BallTable& table, const KernelSpec& kernel) {
  if (table.filter()) throw PreconditionError("table is already restricted to a kernel");
  const GroupSpec& spec = table.spec();
  const Group& group = spec.g();
  const FiniteTable& q = kernel.quotient();
  std::vector<int> images(table.size(), -1);
  images[0] = kernel.quotient_identity();

  // assign from a predecessor on the previous sphere
  for (int n = 1; n <= table.radius(); ++n) {
    const auto sphere = table.sphere(n);
    const std::size_t base = table.ball_size(n - 1);
    for (std::size_t k = 0; k < sphere.size(); ++k) {
      for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        Element pred = group.multiply(spec.generators[spec.generators.inverse_index(i)], sphere[k]);
        auto idx = table.index_of(pred);
        if (idx && table.norm_at(*idx) == n - 1) {
          images[base + k] = q.mul(kernel.image(i), images[*idx]);
          break;
        }
      }
      if (images[base + k] < 0) throw InvariantError("ball element without predecessor: " + group.render(sphere[k]));
    }
  }
  // every edge inside the table must agree
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    const Element& x = table.elements()[idx];
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
      auto nb = table.index_of(group.multiply(spec.generators[i], x));
      if (nb && images[*nb] != q.mul(kernel.image(i), images[idx])) {
        throw ConfigError("kernel spec is not a homomorphism: images disagree at " + group.render(table.elements()[*nb]));
      }
    }
  }
  return images;
}

BallTable restrict_to_kernel(const BallTable& table, const KernelSpec& kernel) {
  const auto images = kernel_images(table, kernel);
  BallTable out;
  out.spec_ = table.spec_;
  out.radius_ = table.radius_;
  out.filter_ = kernel;
  out.offsets_ = {0};
  for (int n = 0; n <= table.radius_; ++n) {
    for (std::size_t idx = table.offsets_[static_cast<std::size_t>(n)]; idx < table.offsets_[static_cast<std::size_t>(n) + 1]; ++idx) {
      if (images[idx] != kernel.quotient_identity()) continue;
      out.elements_.push_back(table.elements_[idx]);
      out.norms_.push_back(n);
    }
    out.offsets_.push_back(out.elements_.size());
  }
  out.rebuild_index();
  return out;
}

// ---------------------------------------------------------------- targeted norm

int norm_targeted(const GroupSpec& spec, const Element& x, int limit, const TargetedOptions& options) {
  if (limit < 0) throw PreconditionError("norm limit must be >= 0");
  const Group& group = spec.g();
  if (group.is_identity(x)) return 0;

  struct Side {
    std::unordered_map<Element, int, ElementHash> dist;
    std::vector<Element> frontier;
    int depth = 0;
  };
  Side forward;
  Side backward;
  forward.dist.emplace(group.identity(), 0);
  forward.frontier.push_back(group.identity());
  backward.dist.emplace(x, 0);
  backward.frontier.push_back(x);

  while (forward.depth + backward.depth < limit) {
    Side& own = forward.frontier.size() <= backward.frontier.size() ? forward : backward;
    Side& other = &own == &forward ? backward : forward;
    std::vector<Element> next;
    std::optional<int> best;
    for (const Element& u : own.frontier) {
      for (const Element& s : spec.generators) {
        Element v = group.multiply(s, u);
        if (own.dist.contains(v)) continue;
        if (auto it = other.dist.find(v); it != other.dist.end()) {
          const int candidate = own.depth + 1 + it->second;
          best = best ? std::min(*best, candidate) : candidate;
        }
        own.dist.emplace(v, own.depth + 1);
        next.push_back(std::move(v));
      }
    }
    own.depth += 1;
    if (best) return *best;
    if (next.empty()) {
      throw PreconditionError(group.render(x) + " is not reachable from the identity with the given generators");
    }
    if (forward.dist.size() + backward.dist.size() > options.max_elements) {
      throw NormExceedsLimitError("search budget of " + std::to_string(options.max_elements) + " elements exhausted at depth " +
                                  std::to_string(forward.depth + backward.depth) + " for " + group.render(x));
    }
    own.frontier = std::move(next);
  }
  throw NormExceedsLimitError("norm of " + group.render(x) + " exceeds limit " + std::to_string(limit));
}

}  // namespace medcurv
