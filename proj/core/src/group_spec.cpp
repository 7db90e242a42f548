#include "medcurv/group_spec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "medcurv/error.hpp"
#include "medcurv/families.hpp"

namespace medcurv {

GeneratingSet::GeneratingSet(const Group& group, std::vector<Element> elements) {
  for (auto& e : elements) {
    if (e.family() != group.tag()) throw ConfigError("generator does not belong to " + group.describe());
    if (group.is_identity(e)) throw ConfigError("generating set must not contain the identity");
    if (index_.contains(e)) continue;
    index_.emplace(e, elements_.size());
    elements_.push_back(std::move(e));
  }
  if (elements_.empty()) throw ConfigError("generating set is empty");
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto it = index_.find(group.invert(elements_[i]));
    if (it == index_.end()) {
      throw ConfigError("generating set is not symmetric: inverse of " + group.render(elements_[i]) + " is missing");
    }
    inverse_[i] = it->second;
  }
}

std::optional<std::size_t> GeneratingSet::index_of(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string GroupSpec::describe() const {
  return group->describe() + " |S|=" + std::to_string(generators.size());
}

nlohmann::json GroupSpec::to_json() const {
  nlohmann::json j = group->to_json();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& s : generators) gens.push_back(group->render(s));
  j["generators"] = gens;
  return j;
}

GroupSpec make_spec(GroupPtr group) {
  auto gens = group->standard_generators();
  return make_spec(std::move(group), std::move(gens));
}

GroupSpec make_spec(GroupPtr group, std::vector<Element> generators) {
  GeneratingSet set(*group, std::move(generators));
  return {std::move(group), std::move(set)};
}

namespace {

int int_param(const nlohmann::json& params, const char* key) {
  if (!params.contains(key) || !params.at(key).is_number_integer()) {
    throw ConfigError(std::string("missing integer parameter '") + key + "'");
  }
  return params.at(key).get<int>();
}

GroupPtr s3_times_z() {
  return std::make_shared<DirectProductGroup>(std::make_shared<FiniteGroup>(FiniteTable::symmetric3()),
                                              std::make_shared<FreeAbelianGroup>(1));
}

}  // namespace

GroupPtr group_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    throw ConfigError("group config needs a string 'family'");
  }
  const std::string family = j.at("family").get<std::string>();
  const nlohmann::json params = j.contains("params") ? j.at("params") : nlohmann::json::object();
  if (family == "free_abelian" || family == "zn") return std::make_shared<FreeAbelianGroup>(int_param(params, "rank"));
  if (family == "free") return std::make_shared<FreeGroup>(int_param(params, "rank"));
  if (family == "heisenberg3" || family == "heis3") return std::make_shared<Heisenberg3Group>();
  if (family == "infinite_dihedral" || family == "dinf") return std::make_shared<InfiniteDihedralGroup>();
  if (family == "finite") return std::make_shared<FiniteGroup>(FiniteTable::from_json(params));
  if (family == "direct_product" || family == "product") {
    if (!params.contains("left") || !params.contains("right")) throw ConfigError("direct_product needs 'left' and 'right'");
    return std::make_shared<DirectProductGroup>(group_from_json(params.at("left")), group_from_json(params.at("right")));
  }
  if (family == "finite_by_dihedral") {
    return std::make_shared<FiniteByDihedralGroup>(DihedralExtensionData::from_json(params));
  }
  if (family == "integer_matrix") {
    const int dim = int_param(params, "dim");
    if (!params.contains("matrices") || !params.at("matrices").is_array()) throw ConfigError("integer_matrix needs 'matrices'");
    std::vector<IntMatrix> mats;
    for (const auto& m : params.at("matrices")) {
      mats.push_back(parse_int_matrix(m.is_string() ? m.get<std::string>() : m.dump()));
    }
    return std::make_shared<IntegerMatrixGroup>(dim, std::move(mats));
  }
  throw ConfigError("unknown group family '" + family + "'");
}

GroupSpec spec_from_json(const nlohmann::json& j) {
  GroupPtr group = group_from_json(j);
  if (!j.contains("generators")) return make_spec(group);
  const auto& list = j.at("generators");
  if (!list.is_array()) throw ConfigError("'generators' must be a list of element literals");
  std::vector<Element> gens;
  for (const auto& lit : list) gens.push_back(group->from_json(lit));
  if (j.value("symmetrize", false)) {
    const std::size_t n = gens.size();
    for (std::size_t i = 0; i < n; ++i) gens.push_back(group->invert(gens[i]));
  }
  return make_spec(group, std::move(gens));
}

GroupSpec spec_from_shorthand(std::string_view text) {
  auto rank_of = [&](std::string_view prefix) {
    std::string_view digits = text.substr(prefix.size());
    int rank = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) throw ConfigError("bad rank in --group " + std::string(text));
    return rank;
  };
  if (text.starts_with("free:")) return make_spec(std::make_shared<FreeGroup>(rank_of("free:")));
  if (text.starts_with("zn:")) return make_spec(std::make_shared<FreeAbelianGroup>(rank_of("zn:")));
  if (text == "heis3") return make_spec(std::make_shared<Heisenberg3Group>());
  if (text == "dinf") return make_spec(std::make_shared<InfiniteDihedralGroup>());
  if (text == "z2xdinf") {
    return make_spec(std::make_shared<FiniteByDihedralGroup>(DihedralExtensionData::trivial_product(FiniteTable::cyclic(2))));
  }
  if (text == "s3xz") {
    GroupPtr g = s3_times_z();
    std::vector<Element> gens;
    for (const char* lit : {"[(12)|(0)]", "[(123)|(0)]", "[(132)|(0)]", "[e|(1)]", "[e|(-1)]"}) gens.push_back(g->parse(lit));
    return make_spec(g, std::move(gens));
  }
  throw ConfigError("unknown --group shorthand '" + std::string(text) + "'");
}

GroupSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open group config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
  }
  if (j.contains("group") && j.at("group").is_object()) {
    nlohmann::json merged = j.at("group");
    if (j.contains("generators")) merged["generators"] = j.at("generators");
    return spec_from_json(merged);
  }
  return spec_from_json(j);
}

}  // namespace medcurv
