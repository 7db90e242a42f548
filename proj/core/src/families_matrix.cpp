#include <cctype>

#include <boost/multiprecision/cpp_int.hpp>

#include "literal.hpp"
#include "medcurv/error.hpp"
#include "medcurv/families.hpp"

namespace medcurv {

namespace {

using boost::multiprecision::cpp_rational;

void encode_entry(const BigInt& value, std::vector<std::int64_t>& out) {
  if (value == 0) {
    out.push_back(0);
    return;
  }
  BigInt magnitude = value < 0 ? BigInt(-value) : value;
  std::vector<std::int64_t> limbs;
  while (magnitude != 0) {
    limbs.push_back(static_cast<std::int64_t>(static_cast<std::uint32_t>(magnitude & 0xffffffffu)));
    magnitude >>= 32;
  }
  const auto count = static_cast<std::int64_t>(limbs.size());
  out.push_back(value < 0 ? -count : count);
  out.insert(out.end(), limbs.begin(), limbs.end());
}

BigInt decode_entry(std::span<const std::int64_t> payload, std::size_t& pos) {
  const std::int64_t head = payload[pos++];
  const std::int64_t count = head < 0 ? -head : head;
  BigInt value = 0;
  for (std::int64_t i = count - 1; i >= 0; --i) {
    value <<= 32;
    value += static_cast<std::uint32_t>(payload[pos + static_cast<std::size_t>(i)]);
  }
  pos += static_cast<std::size_t>(count);
  return head < 0 ? BigInt(-value) : value;
}

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = IntMatrix::identity(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      BigInt sum = 0;
      for (int k = 0; k < a.dim; ++k) sum += a.at(i, k) * b.at(k, j);
      c.at(i, j) = sum;
    }
  }
  return c;
}

/// Inverse over Q by Gauss-Jordan; nullopt when singular or not integral.
std::optional<IntMatrix> integer_inverse(const IntMatrix& m) {
  const int n = m.dim;
  std::vector<std::vector<cpp_rational>> aug(static_cast<std::size_t>(n), std::vector<cpp_rational>(static_cast<std::size_t>(2 * n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cpp_rational(m.at(i, j));
    aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(aug[static_cast<std::size_t>(pivot)], aug[static_cast<std::size_t>(col)]);
    auto& prow = aug[static_cast<std::size_t>(col)];
    const cpp_rational p = prow[static_cast<std::size_t>(col)];
    for (auto& v : prow) v /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      auto& row = aug[static_cast<std::size_t>(r)];
      const cpp_rational factor = row[static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= factor * prow[j];
    }
  }
  IntMatrix inv = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const cpp_rational& v = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
      if (denominator(v) != 1) return std::nullopt;
      inv.at(i, j) = numerator(v);
    }
  }
  return inv;
}

std::string matrix_key(int dim, const std::vector<IntMatrix>& gens) {
  std::string key = "matrix:" + std::to_string(dim);
  for (const auto& g : gens) key += ";" + render_int_matrix(g);
  return key;
}

}  // namespace

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m;
  m.dim = dim;
  m.entries.assign(static_cast<std::size_t>(dim * dim), BigInt(0));
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix parse_int_matrix(std::string_view text) {
  text = detail::trim(text);
  std::vector<std::vector<BigInt>> rows;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) throw ConfigError("malformed matrix literal '" + std::string(text) + "'");
    ++pos;
  };
  expect('[');
  while (true) {
    expect('[');
    std::vector<BigInt> row;
    while (true) {
      skip_ws();
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string digits(text.substr(start, pos - start));
      if (digits.empty() || digits == "-" || digits == "+") throw ConfigError("malformed matrix entry in '" + std::string(text) + "'");
      if (digits.front() == '+') digits.erase(0, 1);
      row.emplace_back(digits);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
    rows.push_back(std::move(row));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    expect(']');
    break;
  }
  skip_ws();
  if (pos != text.size()) throw ConfigError("trailing characters in matrix literal");
  const int dim = static_cast<int>(rows.size());
  IntMatrix m = IntMatrix::identity(dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != dim) throw ConfigError("matrix literal is not square");
    for (int j = 0; j < dim; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

std::string render_int_matrix(const IntMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.dim; ++i) {
    if (i != 0) out += ',';
    out += '[';
    for (int j = 0; j < m.dim; ++j) {
      if (j != 0) out += ',';
      out += m.at(i, j).str();
    }
    out += ']';
  }
  out += ']';
  return out;
}

IntegerMatrixGroup::IntegerMatrixGroup(int dim, std::vector<IntMatrix> generators)
    : Group(tag_for(matrix_key(dim, generators))), dim_(dim), generators_(std::move(generators)) {
  if (dim < 1) throw ConfigError("matrix dimension must be >= 1");
  if (generators_.empty()) throw ConfigError("integer matrix group needs at least one generator");
  if (generators_.size() > 26) throw ConfigError("integer matrix group supports at most 26 named generators");
  for (const auto& g : generators_) {
    if (g.dim != dim) throw ConfigError("generator dimension mismatch");
    if (!integer_inverse(g)) throw ConfigError("generator " + render_int_matrix(g) + " is not invertible over Z");
  }
}

Element IntegerMatrixGroup::from_matrix(const IntMatrix& m) const {
  if (m.dim != dim_) throw ConfigError("matrix dimension mismatch");
  std::vector<std::int64_t> payload;
  for (const auto& v : m.entries) encode_entry(v, payload);
  return make(std::move(payload));
}

IntMatrix IntegerMatrixGroup::to_matrix(const Element& g) const {
  check_member(g);
  IntMatrix m = IntMatrix::identity(dim_);
  std::size_t pos = 0;
  for (auto& v : m.entries) v = decode_entry(g.payload(), pos);
  return m;
}

std::string IntegerMatrixGroup::describe() const { return "matrix(" + std::to_string(dim_) + "," + std::to_string(generators_.size()) + ")"; }

nlohmann::json IntegerMatrixGroup::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators_) gens.push_back(render_int_matrix(g));
  return {{"family", "integer_matrix"}, {"params", {{"dim", dim_}, {"matrices", gens}}}};
}

Element IntegerMatrixGroup::identity() const { return from_matrix(IntMatrix::identity(dim_)); }

Element IntegerMatrixGroup::multiply_unchecked(const Element& g, const Element& h) const {
  return from_matrix(product(to_matrix(g), to_matrix(h)));
}

Element IntegerMatrixGroup::invert_unchecked(const Element& g) const {
  auto inv = integer_inverse(to_matrix(g));
  if (!inv) throw InvariantError("group element is not invertible over Z");
  return from_matrix(*inv);
}

std::vector<std::int64_t> IntegerMatrixGroup::abelianization(const Element& g) const {
  check_member(g);
  return {};
}

std::string IntegerMatrixGroup::render(const Element& g) const { return render_int_matrix(to_matrix(g)); }

std::optional<Element> IntegerMatrixGroup::parse_native(std::string_view literal) const {
  literal = detail::trim(literal);
  if (literal.empty() || literal.front() != '[') return std::nullopt;
  return from_matrix(parse_int_matrix(literal));
}

Element IntegerMatrixGroup::from_json(const nlohmann::json& value) const {
  if (value.is_array()) return from_matrix(parse_int_matrix(value.dump()));
  return Group::from_json(value);
}

std::vector<std::pair<char, Element>> IntegerMatrixGroup::letters() const {
  std::vector<std::pair<char, Element>> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) out.emplace_back(static_cast<char>('a' + i), from_matrix(generators_[i]));
  return out;
}

std::vector<Element> IntegerMatrixGroup::standard_generators() const {
  std::vector<Element> out;
  for (const auto& g : generators_) {
    Element e = from_matrix(g);
    out.push_back(e);
    out.push_back(invert_unchecked(e));
  }
  return out;
}

}  // namespace medcurv
