// Table-given finite groups, direct products and finite-by-D_inf extensions.

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "literal.hpp"
#include "medcurv/error.hpp"
#include "medcurv/families.hpp"

namespace medcurv {

// ---------------------------------------------------------------- FiniteTable

void FiniteTable::validate() const {
  const int n = order();
  if (n < 1) throw ConfigError("finite group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw ConfigError("finite group table is not square");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : row) {
      if (v < 0 || v >= n) throw ConfigError("finite group table entry out of range");
      if (seen[static_cast<std::size_t>(v)]) throw ConfigError("finite group table row is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int r = 0; r < n; ++r) {
      int v = mul(r, c);
      if (seen[static_cast<std::size_t>(v)]) throw ConfigError("finite group table column is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  (void)identity();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw ConfigError("finite group table is not associative");
  if (!names.empty()) {
    if (static_cast<int>(names.size()) != n) throw ConfigError("finite group names do not match the table order");
    std::set<std::string> unique(names.begin(), names.end());
    if (static_cast<int>(unique.size()) != n) throw ConfigError("finite group names are not unique");
  }
}

int FiniteTable::identity() const {
  for (int e = 0; e < order(); ++e) {
    bool neutral = true;
    for (int x = 0; x < order() && neutral; ++x) neutral = mul(e, x) == x && mul(x, e) == x;
    if (neutral) return e;
  }
  throw ConfigError("finite group table has no identity");
}

int FiniteTable::inverse(int g) const {
  const int e = identity();
  for (int h = 0; h < order(); ++h)
    if (mul(g, h) == e) return h;
  throw ConfigError("finite group element has no inverse");
}

nlohmann::json FiniteTable::to_json() const {
  nlohmann::json j = {{"table", table}};
  if (!names.empty()) j["names"] = names;
  return j;
}

FiniteTable FiniteTable::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("table")) throw ConfigError("finite group needs a 'table'");
  FiniteTable t;
  try {
    t.table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("names")) t.names = j.at("names").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed finite group table: ") + e.what());
  }
  t.validate();
  return t;
}

FiniteTable FiniteTable::cyclic(int n) {
  if (n < 1) throw ConfigError("cyclic group order must be >= 1");
  FiniteTable t;
  t.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  t.names.push_back("e");
  for (int i = 1; i < n; ++i) t.names.push_back("g" + std::to_string(i));
  return t;
}

FiniteTable FiniteTable::symmetric3() {
  // permutations of {0,1,2} as images of (0,1,2)
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  FiniteTable t;
  t.names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  t.table.assign(6, std::vector<int>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      // (p q)(x) = p(q(x))
      std::array<int, 3> composed{};
      for (std::size_t x = 0; x < 3; ++x) composed[x] = perms[i][static_cast<std::size_t>(perms[j][x])];
      auto it = std::find(perms.begin(), perms.end(), composed);
      t.table[i][j] = static_cast<int>(it - perms.begin());
    }
  }
  return t;
}

// ---------------------------------------------------------------- FiniteGroup

namespace {

std::uint32_t finite_tag(const FiniteTable& t) {
  std::string key = "finite:";
  for (const auto& row : t.table)
    for (int v : row) key += std::to_string(v) + ",";
  return Group::tag_for(key);
}

std::vector<std::string> default_names(const FiniteTable& t) {
  if (!t.names.empty()) return t.names;
  std::vector<std::string> names;
  const int e = t.identity();
  for (int i = 0; i < t.order(); ++i) names.push_back(i == e ? "e" : "g" + std::to_string(i));
  return names;
}

}  // namespace

FiniteGroup::FiniteGroup(FiniteTable table) : Group(finite_tag(table)), table_(std::move(table)) {
  table_.validate();
  names_ = default_names(table_);
  identity_ = table_.identity();
  for (int x = 0; x < table_.order(); ++x) inverses_.push_back(table_.inverse(x));
  abelian_ = true;
  for (int x = 0; x < table_.order(); ++x)
    for (int y = 0; y < table_.order(); ++y) abelian_ = abelian_ && table_.mul(x, y) == table_.mul(y, x);
}

Element FiniteGroup::at(int index) const {
  if (index < 0 || index >= table_.order()) throw ConfigError("finite group index out of range");
  return make({index});
}

std::string FiniteGroup::describe() const { return "finite(" + std::to_string(table_.order()) + ")"; }

nlohmann::json FiniteGroup::to_json() const {
  FiniteTable echo = table_;
  echo.names = names_;
  return {{"family", "finite"}, {"params", echo.to_json()}};
}

Element FiniteGroup::identity() const { return make({identity_}); }

Element FiniteGroup::multiply_unchecked(const Element& g, const Element& h) const {
  return make({table_.mul(static_cast<int>(g[0]), static_cast<int>(h[0]))});
}

Element FiniteGroup::invert_unchecked(const Element& g) const { return make({inverses_[static_cast<std::size_t>(g[0])]}); }

std::vector<std::int64_t> FiniteGroup::abelianization(const Element& g) const {
  check_member(g);
  return {};
}

std::string FiniteGroup::render(const Element& g) const { return names_[static_cast<std::size_t>(g[0])]; }

std::optional<Element> FiniteGroup::parse_native(std::string_view literal) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == literal) return make({static_cast<std::int64_t>(i)});
  if (literal.size() > 1 && literal.front() == '#') {
    int index = std::stoi(std::string(literal.substr(1)));
    return at(index);
  }
  return std::nullopt;
}

Element FiniteGroup::from_json(const nlohmann::json& value) const {
  if (value.is_number_integer()) return at(value.get<int>());
  return Group::from_json(value);
}

std::vector<std::pair<char, Element>> FiniteGroup::letters() const { return {}; }

std::vector<Element> FiniteGroup::standard_generators() const {
  std::vector<Element> out;
  for (int i = 0; i < table_.order(); ++i)
    if (i != identity_) out.push_back(make({i}));
  return out;
}

// ---------------------------------------------------------------- DirectProduct

namespace {

std::uint32_t product_tag(const GroupPtr& l, const GroupPtr& r) {
  if (!l || !r) throw ConfigError("direct product needs two factors");
  std::string key = "product:" + std::to_string(l->tag()) + ":" + std::to_string(r->tag());
  return Group::tag_for(key);
}

}  // namespace

DirectProductGroup::DirectProductGroup(GroupPtr left, GroupPtr right)
    : Group(product_tag(left, right)), left_(std::move(left)), right_(std::move(right)) {}

Element DirectProductGroup::pair(const Element& l, const Element& r) const {
  if (l.family() != left_->tag() || r.family() != right_->tag()) {
    throw FamilyMismatchError("components do not belong to " + describe());
  }
  std::vector<std::int64_t> payload;
  payload.reserve(1 + l.size() + r.size());
  payload.push_back(static_cast<std::int64_t>(l.size()));
  payload.insert(payload.end(), l.payload().begin(), l.payload().end());
  payload.insert(payload.end(), r.payload().begin(), r.payload().end());
  return make(std::move(payload));
}

Element DirectProductGroup::left_part(const Element& g) const {
  check_member(g);
  auto p = g.payload();
  auto n = static_cast<std::size_t>(p[0]);
  return Element(left_->tag(), std::vector<std::int64_t>(p.begin() + 1, p.begin() + 1 + static_cast<std::ptrdiff_t>(n)));
}

Element DirectProductGroup::right_part(const Element& g) const {
  check_member(g);
  auto p = g.payload();
  auto n = static_cast<std::size_t>(p[0]);
  return Element(right_->tag(), std::vector<std::int64_t>(p.begin() + 1 + static_cast<std::ptrdiff_t>(n), p.end()));
}

std::string DirectProductGroup::describe() const {
  return "product(" + left_->describe() + "," + right_->describe() + ")";
}

nlohmann::json DirectProductGroup::to_json() const {
  return {{"family", "direct_product"}, {"params", {{"left", left_->to_json()}, {"right", right_->to_json()}}}};
}

Element DirectProductGroup::identity() const { return pair(left_->identity(), right_->identity()); }

Element DirectProductGroup::multiply_unchecked(const Element& g, const Element& h) const {
  return pair(left_->multiply(left_part(g), left_part(h)), right_->multiply(right_part(g), right_part(h)));
}

Element DirectProductGroup::invert_unchecked(const Element& g) const {
  return pair(left_->invert(left_part(g)), right_->invert(right_part(g)));
}

std::vector<std::int64_t> DirectProductGroup::abelianization(const Element& g) const {
  auto l = left_->abelianization(left_part(g));
  auto r = right_->abelianization(right_part(g));
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

std::string DirectProductGroup::render(const Element& g) const {
  return "[" + left_->render(left_part(g)) + "|" + right_->render(right_part(g)) + "]";
}

std::optional<Element> DirectProductGroup::parse_native(std::string_view literal) const {
  auto parts = detail::split_bracket_pair(literal, '|');
  if (!parts) return std::nullopt;
  return pair(left_->parse(parts->first), right_->parse(parts->second));
}

Element DirectProductGroup::from_json(const nlohmann::json& value) const {
  if (value.is_array()) {
    if (value.size() != 2) throw ConfigError("direct product literal needs [left, right]");
    return pair(left_->from_json(value[0]), right_->from_json(value[1]));
  }
  return Group::from_json(value);
}

std::vector<std::pair<char, Element>> DirectProductGroup::letters() const { return {}; }

std::vector<Element> DirectProductGroup::standard_generators() const {
  std::vector<Element> out;
  for (const auto& s : left_->standard_generators()) out.push_back(pair(s, right_->identity()));
  for (const auto& t : right_->standard_generators()) out.push_back(pair(left_->identity(), t));
  return out;
}

// ---------------------------------------------------------------- FiniteByDihedral

namespace {

void check_automorphism(const FiniteTable& f, const std::vector<int>& act, const char* what) {
  const int n = f.order();
  if (static_cast<int>(act.size()) != n) throw ConfigError(std::string(what) + " has the wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : act) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw ConfigError(std::string(what) + " is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (act[static_cast<std::size_t>(f.mul(x, y))] != f.mul(act[static_cast<std::size_t>(x)], act[static_cast<std::size_t>(y)]))
        throw ConfigError(std::string(what) + " is not a homomorphism");
}

void check_square(const FiniteTable& f, const std::vector<int>& act, int square, const char* what) {
  if (square < 0 || square >= f.order()) throw ConfigError(std::string(what) + " square out of range");
  if (act[static_cast<std::size_t>(square)] != square) {
    throw ConfigError(std::string(what) + " does not fix its square");
  }
  const int inv = f.inverse(square);
  for (int x = 0; x < f.order(); ++x) {
    int twice = act[static_cast<std::size_t>(act[static_cast<std::size_t>(x)])];
    if (twice != f.mul(f.mul(square, x), inv)) {
      throw ConfigError(std::string(what) + " applied twice is not conjugation by its square");
    }
  }
}

std::vector<std::vector<int>> power_cycle(const std::vector<int>& outer, const std::vector<int>& inner) {
  // powers of (outer o inner) until the identity recurs
  const std::size_t n = outer.size();
  std::vector<int> step(n);
  for (std::size_t x = 0; x < n; ++x) step[x] = outer[static_cast<std::size_t>(inner[x])];
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> powers = {id};
  std::vector<int> current = step;
  while (current != id) {
    powers.push_back(current);
    std::vector<int> next(n);
    for (std::size_t x = 0; x < n; ++x) next[x] = step[static_cast<std::size_t>(current[x])];
    current = std::move(next);
  }
  return powers;
}

}  // namespace

void DihedralExtensionData::validate() const {
  finite.validate();
  check_automorphism(finite, a_action, "a_action");
  check_automorphism(finite, b_action, "b_action");
  check_square(finite, a_action, a_square, "a_action");
  check_square(finite, b_action, b_square, "b_action");
}

nlohmann::json DihedralExtensionData::to_json() const {
  return {{"finite", finite.to_json()},
          {"a_action", a_action},
          {"b_action", b_action},
          {"a_square", a_square},
          {"b_square", b_square}};
}

DihedralExtensionData DihedralExtensionData::from_json(const nlohmann::json& j) {
  DihedralExtensionData d;
  try {
    d.finite = FiniteTable::from_json(j.at("finite"));
    std::vector<int> id(static_cast<std::size_t>(d.finite.order()));
    std::iota(id.begin(), id.end(), 0);
    d.a_action = j.contains("a_action") ? j.at("a_action").get<std::vector<int>>() : id;
    d.b_action = j.contains("b_action") ? j.at("b_action").get<std::vector<int>>() : id;
    d.a_square = j.contains("a_square") ? j.at("a_square").get<int>() : d.finite.identity();
    d.b_square = j.contains("b_square") ? j.at("b_square").get<int>() : d.finite.identity();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed finite_by_dihedral params: ") + e.what());
  }
  d.validate();
  return d;
}

DihedralExtensionData DihedralExtensionData::trivial_product(FiniteTable finite) {
  DihedralExtensionData d;
  d.finite = std::move(finite);
  d.a_action.resize(static_cast<std::size_t>(d.finite.order()));
  std::iota(d.a_action.begin(), d.a_action.end(), 0);
  d.b_action = d.a_action;
  d.a_square = d.finite.identity();
  d.b_square = d.a_square;
  return d;
}

namespace {

std::uint32_t fbd_tag(const DihedralExtensionData& d) {
  std::string key = "fbd:" + d.to_json().dump();
  return Group::tag_for(key);
}

}  // namespace

FiniteByDihedralGroup::FiniteByDihedralGroup(DihedralExtensionData data) : Group(fbd_tag(data)), data_(std::move(data)) {
  data_.validate();
  finite_identity_ = data_.finite.identity();
  for (int x = 0; x < data_.finite.order(); ++x) finite_inverse_.push_back(data_.finite.inverse(x));
  ab_powers_ = power_cycle(data_.a_action, data_.b_action);
  ba_powers_ = power_cycle(data_.b_action, data_.a_action);
}

Element FiniteByDihedralGroup::make_element(int f, std::int64_t k, int reflection) const {
  if (f < 0 || f >= data_.finite.order()) throw ConfigError("finite part out of range");
  if (reflection != 0 && reflection != 1) throw ConfigError("reflection bit must be 0 or 1");
  return make({f, k, reflection});
}

std::pair<std::int64_t, int> FiniteByDihedralGroup::project(const Element& g) const {
  check_member(g);
  return {g[1], static_cast<int>(g[2])};
}

FiniteByDihedralGroup::Alternating FiniteByDihedralGroup::to_alternating(std::int64_t k, int reflection) noexcept {
  if (k >= 0) return {0, 2 * k + reflection};
  return {1, 2 * (-k) - reflection};
}

std::pair<std::int64_t, int> FiniteByDihedralGroup::from_alternating(Alternating w) noexcept {
  if (w.length == 0) return {0, 0};
  if (w.first == 0) return {w.length / 2, static_cast<int>(w.length % 2)};
  if (w.length % 2 == 0) return {-w.length / 2, 0};
  return {-(w.length + 1) / 2, 1};
}

int FiniteByDihedralGroup::act(Alternating w, int f) const {
  if (w.length == 0) return f;
  const auto pairs = static_cast<std::size_t>(w.length / 2);
  if (w.first == 0) {
    int g = w.length % 2 ? data_.a_action[static_cast<std::size_t>(f)] : f;
    const auto& p = ab_powers_[pairs % ab_powers_.size()];
    return p[static_cast<std::size_t>(g)];
  }
  int g = w.length % 2 ? data_.b_action[static_cast<std::size_t>(f)] : f;
  const auto& p = ba_powers_[pairs % ba_powers_.size()];
  return p[static_cast<std::size_t>(g)];
}

Element FiniteByDihedralGroup::identity() const { return make({finite_identity_, 0, 0}); }

Element FiniteByDihedralGroup::multiply_unchecked(const Element& g, const Element& h) const {
  const FiniteTable& f = data_.finite;
  Alternating w1 = to_alternating(g[1], static_cast<int>(g[2]));
  Alternating w2 = to_alternating(h[1], static_cast<int>(h[2]));
  // f1 lift(w1) f2 lift(w2) = f1 act(w1, f2) lift(w1) lift(w2)
  int acc = f.mul(static_cast<int>(g[0]), act(w1, static_cast<int>(h[0])));
  Alternating w{0, 0};
  while (true) {
    if (w1.length == 0) {
      w = w2;
      break;
    }
    if (w2.length == 0) {
      w = w1;
      break;
    }
    const int last = static_cast<int>((w1.first + (w1.length - 1)) % 2);
    if (last != w2.first) {
      w = {w1.first, w1.length + w2.length};
      break;
    }
    // lift(w1') c c lift(w2') = act(w1', c^2) lift(w1') lift(w2')
    w1.length -= 1;
    acc = f.mul(acc, act(w1, square(last)));
    w2 = {1 - w2.first, w2.length - 1};
  }
  auto [k, e] = from_alternating(w);
  return make({acc, k, e});
}

Element FiniteByDihedralGroup::invert_unchecked(const Element& g) const {
  Alternating w = to_alternating(g[1], static_cast<int>(g[2]));
  // lift(w)^-1 = prod over reversed letters of c^-1, and c^-1 = (c^2)^-1 c
  Element acc = identity();
  for (std::int64_t i = w.length - 1; i >= 0; --i) {
    const int letter = static_cast<int>((w.first + i) % 2);
    const int inv_sq = finite_inverse_[static_cast<std::size_t>(square(letter))];
    Element step = letter == 0 ? make({inv_sq, 0, 1}) : make({inv_sq, -1, 1});
    acc = multiply_unchecked(acc, step);
  }
  return multiply_unchecked(acc, make({finite_inverse_[static_cast<std::size_t>(g[0])], 0, 0}));
}

std::vector<std::int64_t> FiniteByDihedralGroup::abelianization(const Element& g) const {
  check_member(g);
  return {};
}

std::string FiniteByDihedralGroup::describe() const {
  return "finite_by_dihedral(" + std::to_string(data_.finite.order()) + ")";
}

nlohmann::json FiniteByDihedralGroup::to_json() const {
  return {{"family", "finite_by_dihedral"}, {"params", data_.to_json()}};
}

std::string FiniteByDihedralGroup::render(const Element& g) const {
  auto names = default_names(data_.finite);
  std::string word;
  Alternating w = to_alternating(g[1], static_cast<int>(g[2]));
  for (std::int64_t i = 0; i < w.length; ++i) word += static_cast<char>('a' + (w.first + i) % 2);
  if (word.empty()) word = "1";
  return names[static_cast<std::size_t>(g[0])] + ":" + word;
}

std::optional<Element> FiniteByDihedralGroup::parse_native(std::string_view literal) const {
  auto colon = literal.rfind(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto names = default_names(data_.finite);
  std::string_view head = detail::trim(literal.substr(0, colon));
  std::string_view word = detail::trim(literal.substr(colon + 1));
  auto it = std::find(names.begin(), names.end(), head);
  if (it == names.end()) throw ConfigError("unknown finite part '" + std::string(head) + "' in " + describe());
  Element result = finite_element(static_cast<int>(it - names.begin()));
  if (word != "1") {
    for (char c : word) {
      Element letter;
      if (c == 'a' || c == 'A') letter = lift_a();
      else if (c == 'b' || c == 'B') letter = lift_b();
      else throw ConfigError("bad letter in " + std::string(literal));
      if (c == 'A' || c == 'B') letter = invert_unchecked(letter);
      result = multiply_unchecked(result, letter);
    }
  }
  return result;
}

std::vector<std::pair<char, Element>> FiniteByDihedralGroup::letters() const { return {{'a', lift_a()}, {'b', lift_b()}}; }

std::vector<Element> FiniteByDihedralGroup::standard_generators() const {
  std::vector<Element> out;
  const int n = data_.finite.order();
  for (int f = 0; f < n; ++f)
    if (f != finite_identity_) out.push_back(finite_element(f));
  for (int f = 0; f < n; ++f) out.push_back(make_element(f, 0, 1));
  for (int f = 0; f < n; ++f) out.push_back(make_element(f, -1, 1));
  return out;
}

}  // namespace medcurv
