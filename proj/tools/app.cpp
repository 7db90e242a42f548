#include "app.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "medcurv/asymptotics.hpp"
#include "medcurv/ball.hpp"
#include "medcurv/conjugacy.hpp"
#include "medcurv/curvature.hpp"
#include "medcurv/error.hpp"
#include "medcurv/genset.hpp"
#include "medcurv/group_spec.hpp"

namespace medcurv::app {

using nlohmann::json;

const std::vector<std::string>& commands() {
  static const std::vector<std::string> list{"ball",  "norm",  "kappa",          "census",      "annulus",
                                             "orbit", "exits", "reduce",         "boundary-profile",
                                             "stable-norm",    "growth",         "verify-growth",
                                             "closure",        "flat-check"};
  return list;
}

void RunConfig::validate() const {
  const auto& cmds = commands();
  if (std::find(cmds.begin(), cmds.end(), command) == cmds.end()) throw ConfigError("unknown command '" + command + "'");
  for (const auto& f : formats)
    if (f != "json" && f != "csv") throw ConfigError("unknown output format '" + f + "' (expected csv or json)");
  if (threads == 0) throw ConfigError("--threads must be positive");
  if (max_elements && *max_elements == 0) throw ConfigError("--max-elements must be positive");
  if (time_budget && *time_budget <= 0) throw ConfigError("--time-budget must be positive");
  if (budget == 0) throw ConfigError("--budget must be positive");
}

json RunConfig::echo() const {
  json j;
  j["command"] = command;
  j["group"] = group;
  if (genset) j["genset"] = genset->string();
  if (kernel) j["kernel"] = kernel->string();
  if (radius) j["radius"] = *radius;
  if (r1) j["r1"] = *r1;
  if (r2) j["r2"] = *r2;
  if (element) j["element"] = *element;
  if (u) j["u"] = *u;
  if (v) j["v"] = *v;
  if (!m_list.empty()) j["m"] = m_list;
  if (bound) j["bound"] = *bound;
  j["nmax"] = n_max;
  j["limit"] = limit;
  j["budget"] = budget;
  j["cutoff"] = cutoff;
  j["k"] = k;
  j["rkappa"] = r_kappa;
  j["window"] = window;
  j["witnesses"] = witnesses;
  if (max_elements) j["max_elements"] = *max_elements;
  return j;
}

json Report::to_json() const {
  json j;
  j["tool"] = "medcurv";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["config"] = config;
  j["group"] = group;
  j["data"] = data;
  j["run"] = {{"wall_time_s", wall_time_s}, {"peak_elements", peak_elements}};
  return j;
}

namespace {

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

GroupSpec load_group(const RunConfig& cfg) {
  GroupSpec base = [&] {
    const std::filesystem::path p(cfg.group);
    if (p.extension() == ".json" || std::filesystem::is_regular_file(p)) return load_spec_file(p);
    return spec_from_shorthand(cfg.group);
  }();
  if (!cfg.genset) return base;
  const json j = read_json(*cfg.genset);
  if (j.is_array()) {
    std::vector<Element> gens;
    for (const auto& lit : j) gens.push_back(base.g().from_json(lit));
    return base.with_generators(std::move(gens));
  }
  return load_spec_file(*cfg.genset);
}

struct Context {
  const RunConfig& cfg;
  GroupSpec spec;
  EnumerationOptions eo;
  Report& report;

  const Group& g() const { return spec.g(); }
  std::string render(const Element& e) const { return spec.g().render(e); }

  int need(const std::optional<int>& v, const char* flag) const {
    if (!v) throw ConfigError(std::string("command '") + cfg.command + "' needs " + flag);
    return *v;
  }
  Element element() const {
    if (!cfg.element) throw ConfigError("command '" + cfg.command + "' needs --element");
    return spec.g().parse(*cfg.element);
  }
  Element parse(const std::optional<std::string>& lit, const char* flag) const {
    if (!lit) throw ConfigError("command '" + cfg.command + "' needs " + std::string(flag));
    return spec.g().parse(*lit);
  }
  std::optional<KernelSpec> kernel() const {
    if (!cfg.kernel) return std::nullopt;
    return KernelSpec::from_json(read_json(*cfg.kernel), spec);
  }
  BallTable ball(int radius) const {
    BallTable t = enumerate_ball(spec, radius, eo);
    report.peak_elements = std::max(report.peak_elements, t.size());
    return t;
  }
  /// Table around x: radius = |x| + extra, with |x| found by targeted search.
  BallTable ball_around(const Element& x, int extra) const {
    if (cfg.radius) return ball(*cfg.radius);
    return ball(norm_targeted(spec, x, cfg.limit) + extra);
  }
  CensusOptions census_options() const {
    CensusOptions o;
    o.witnesses = cfg.witnesses;
    o.threads = cfg.threads;
    o.enumeration = eo;
    return o;
  }
};

std::string str(std::size_t v) { return std::to_string(v); }

json witnesses_json(const BallTable& table, const std::vector<Element>& list) {
  json arr = json::array();
  for (const Element& w : list) arr.push_back({{"element", table.group().render(w)}, {"kappa", to_string(kappa(table, w))}});
  return arr;
}

json census_json(Context& ctx, const BallTable& table, const CurvatureCensus& c) {
  Table t{{"sphere", "pos", "zero", "neg"}, {}};
  Series pos;
  Series neg;
  json spheres = json::array();
  for (const auto& s : c.spheres) {
    t.rows.push_back({std::to_string(s.sphere), str(s.positive), str(s.zero), str(s.negative)});
    const double total = static_cast<double>(std::max<std::size_t>(1, s.total()));
    pos.points.emplace_back(s.sphere, static_cast<double>(s.positive) / total);
    neg.points.emplace_back(s.sphere, static_cast<double>(s.negative) / total);
    spheres.push_back({{"sphere", s.sphere},
                       {"pos", s.positive},
                       {"zero", s.zero},
                       {"neg", s.negative},
                       {"witnesses",
                        {{"pos", witnesses_json(table, s.positive_witnesses)},
                         {"zero", witnesses_json(table, s.zero_witnesses)},
                         {"neg", witnesses_json(table, s.negative_witnesses)}}}});
  }
  ctx.report.tables["census"] = std::move(t);
  ctx.report.series["census_positive_density"] = std::move(pos);
  ctx.report.series["census_negative_density"] = std::move(neg);
  json j{{"radius", c.radius}, {"generators", c.generator_count}, {"spheres", spheres}};
  j["filter"] = c.filter ? c.filter->to_json(ctx.spec) : json(nullptr);
  return j;
}

json cmd_ball(Context& ctx) {
  const int R = ctx.need(ctx.cfg.radius, "--radius");
  const BallTable table = ctx.ball(R);
  const auto kernel = ctx.kernel();
  std::vector<int> images;
  if (kernel) images = kernel_images(table, *kernel);
  Table rows{{"canonical_key", "norm", "in_kernel"}, {}};
  std::vector<std::size_t> kernel_counts(static_cast<std::size_t>(R) + 1, 0);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const bool in = !kernel || images[i] == kernel->quotient_identity();
    if (in) ++kernel_counts[static_cast<std::size_t>(table.norm_at(i))];
    rows.rows.push_back({ctx.render(table.elements()[i]), std::to_string(table.norm_at(i)), in ? "1" : "0"});
  }
  ctx.report.tables["ball"] = std::move(rows);
  Table spheres{{"n", "sphere_size"}, {}};
  for (int n = 0; n <= R; ++n) spheres.rows.push_back({std::to_string(n), str(table.sphere_size(n))});
  ctx.report.tables["spheres"] = std::move(spheres);
  json j{{"radius", R}, {"counts", table.counts()}, {"total", table.size()}};
  if (kernel) {
    j["kernel_counts"] = kernel_counts;
    j["filter"] = kernel->to_json(ctx.spec);
  }
  return j;
}

json cmd_norm(Context& ctx) {
  const Element x = ctx.element();
  return {{"element", ctx.render(x)}, {"limit", ctx.cfg.limit}, {"norm", norm_targeted(ctx.spec, x, ctx.cfg.limit)}};
}

json cmd_kappa(Context& ctx) {
  const Element x = ctx.element();
  const BallTable table = ctx.ball_around(x, 2);
  json deltas = json::array();
  for (std::size_t i = 0; i < ctx.spec.generators.size(); ++i) {
    const Element& s = ctx.spec.generators[i];
    deltas.push_back({{"generator", ctx.render(s)}, {"delta", delta(table, s, x)}});
  }
  json j{{"element", ctx.render(x)}, {"norm", table.norm(x)}, {"kappa", to_string(kappa(table, x))}, {"deltas", deltas}};
  j["kappa_bar"] = ctx.g().is_identity(x) ? json(nullptr) : json(to_string(kappa_bar(table, x)));
  return j;
}

json cmd_census(Context& ctx) {
  const int R = ctx.need(ctx.cfg.radius, "--radius");
  BallTable table = ctx.ball(R + 2);
  if (auto k = ctx.kernel()) table = restrict_to_kernel(table, *k);
  const auto c = census(table, R, ctx.census_options());
  return census_json(ctx, table, c);
}

json pairs_json(Context& ctx, const std::vector<BoundaryPair>& pairs, const std::string& name) {
  Table t{{"generator", "element", "delta"}, {}};
  for (const auto& p : pairs) t.rows.push_back({ctx.render(ctx.spec.generators[p.generator]), ctx.render(p.x), std::to_string(p.delta)});
  ctx.report.tables[name] = std::move(t);
  std::size_t positive = 0;
  std::size_t negative = 0;
  for (const auto& p : pairs) {
    if (p.delta > 0) ++positive;
    if (p.delta < 0) ++negative;
  }
  return {{"size", pairs.size()}, {"positive", positive}, {"negative", negative}};
}

json cmd_annulus(Context& ctx) {
  const int r1 = ctx.need(ctx.cfg.r1, "--r1");
  const int r2 = ctx.need(ctx.cfg.r2, "--r2");
  if (r1 < 0 || !(r1 < r2 - 4)) throw PreconditionError("annulus needs 0 <= r1 < r2 - 4");
  BallTable table = ctx.ball(ctx.cfg.radius.value_or(r2 + 2));
  if (auto k = ctx.kernel()) table = restrict_to_kernel(table, *k);
  const auto a = annulus_sum(table, r1, r2);
  const auto pc = pair_cancellation(table, r1, r2);
  json j{{"r1", r1},
         {"r2", r2},
         {"table_radius", table.radius()},
         {"lhs", to_string(a.lhs)},
         {"rhs", to_string(a.rhs)},
         {"identity_holds", a.identity_holds},
         {"bound", to_string(a.bound)},
         {"bound_holds", a.bound_holds},
         {"y1", pairs_json(ctx, a.y1, "y1")},
         {"y2", pairs_json(ctx, a.y2, "y2")},
         {"pair_cancellation", {{"checked", pc.checked}, {"violations", pc.violations}}}};
  j["filter"] = table.filter() ? table.filter()->to_json(ctx.spec) : json(nullptr);
  return j;
}

json cmd_orbit(Context& ctx) {
  const Element x = ctx.element();
  const int M = ctx.need(ctx.cfg.bound, "--bound");
  const BallTable table = ctx.ball(ctx.cfg.radius.value_or(M + 1));
  const auto o = orbit(table, x, M);
  Table t{{"element", "norm"}, {}};
  json members = json::array();
  for (const Element& m : o.members) {
    members.push_back(ctx.render(m));
    t.rows.push_back({ctx.render(m), std::to_string(table.norm(m))});
  }
  ctx.report.tables["orbit"] = std::move(t);
  return {{"seed", ctx.render(x)},
          {"bound", M},
          {"members", members},
          {"size", o.members.size()},
          {"frontier_escaped", o.frontier_escaped},
          {"verdict", o.verdict == OrbitVerdict::kEscapesBound ? "escapes-bound" : "closed-within-bound"}};
}

json cmd_exits(Context& ctx) {
  const int R = ctx.need(ctx.cfg.radius, "--radius");
  const auto r = exits_per_sphere(ctx.spec, R, ctx.cfg.k, ctx.eo);
  Table t{{"sphere", "size", "exits", "k_step_exits", "y_size"}, {}};
  json spheres = json::array();
  for (const auto& s : r.spheres) {
    t.rows.push_back({std::to_string(s.sphere), str(s.size), str(s.exits), str(s.k_step_exits), str(s.y_size)});
    spheres.push_back({{"sphere", s.sphere}, {"size", s.size}, {"exits", s.exits}, {"k_step_exits", s.k_step_exits}, {"y_size", s.y_size}});
  }
  ctx.report.tables["exits"] = std::move(t);
  return {{"radius", R},
          {"k", r.k},
          {"spheres", spheres},
          {"L", r.L},
          {"k_step_bound", r.k_step_bound},
          {"exits_bounded", r.exits_bounded(1, R)},
          {"k_step_bounded", r.k_step_bounded(1, R)}};
}

json cmd_reduce(Context& ctx) {
  const Element x = ctx.element();
  const BallTable table = ctx.ball_around(x, 0);
  const auto r = reduce_conjugate(table, x);
  json chain = json::array();
  Table t{{"step", "conjugator", "result", "norm"}, {}};
  for (std::size_t i = 0; i < r.chain.size(); ++i) {
    const auto& step = r.chain[i];
    chain.push_back({{"conjugator", ctx.render(step.conjugator)}, {"result", ctx.render(step.result)}, {"norm", step.norm}});
    t.rows.push_back({str(i + 1), ctx.render(step.conjugator), ctx.render(step.result), std::to_string(step.norm)});
  }
  ctx.report.tables["reduction"] = std::move(t);
  return {{"element", ctx.render(x)},
          {"norm", table.norm(x)},
          {"minimal", ctx.render(r.minimal)},
          {"minimal_norm", r.minimal_norm},
          {"chain", chain}};
}

json cmd_boundary(Context& ctx) {
  const Element x = ctx.element();
  const Element u = ctx.parse(ctx.cfg.u, "--u");
  const Element v = ctx.parse(ctx.cfg.v, "--v");
  if (ctx.cfg.m_list.empty()) throw ConfigError("boundary-profile needs --m");
  BoundaryOptions o;
  o.window = ctx.cfg.window;
  o.enumeration = ctx.eo;
  const auto p = conjugacy_graph_boundary(ctx.spec, x, u, v, ctx.cfg.m_list, o);
  Table t{{"m", "vertices", "boundary", "box_saturated"}, {}};
  json levels = json::array();
  Series s;
  for (const auto& l : p.levels) {
    t.rows.push_back({std::to_string(l.m), str(l.vertices), str(l.boundary), l.box_saturated ? "1" : "0"});
    levels.push_back({{"m", l.m}, {"vertices", l.vertices}, {"boundary", l.boundary}, {"box_saturated", l.box_saturated}});
    s.points.emplace_back(l.m, static_cast<double>(l.boundary));
  }
  ctx.report.tables["boundary"] = std::move(t);
  ctx.report.series["boundary"] = std::move(s);
  return {{"element", ctx.render(x)},
          {"u", ctx.render(u)},
          {"v", ctx.render(v)},
          {"window", p.window},
          {"levels", levels},
          {"injectivity_violations", p.injectivity_violations},
          {"lipschitz", {{"constant", p.lipschitz_constant}, {"checked", p.lipschitz_checked}, {"violations", p.lipschitz_violations}}}};
}

json cmd_stable_norm(Context& ctx) {
  const Element x = ctx.element();
  StableNormOptions o;
  o.threads = ctx.cfg.threads;
  const auto e = stable_norm(ctx.spec, x, ctx.cfg.n_max, ctx.cfg.limit, o);
  Table t{{"n", "norm"}, {}};
  Series s;
  json samples = json::array();
  for (const auto& sample : e.samples) {
    t.rows.push_back({std::to_string(sample.n), sample.norm ? std::to_string(*sample.norm) : ""});
    samples.push_back({{"n", sample.n}, {"norm", sample.norm ? json(*sample.norm) : json(nullptr)}});
    if (sample.norm) s.points.emplace_back(sample.n, static_cast<double>(*sample.norm) / sample.n);
  }
  ctx.report.tables["samples"] = std::move(t);
  ctx.report.series["stable_norm_ratio"] = std::move(s);
  return {{"element", ctx.render(x)},
          {"norm", e.element_norm},
          {"nmax", e.n_max},
          {"limit", e.limit},
          {"samples", samples},
          {"upper", e.upper ? json(to_string(*e.upper)) : json(nullptr)},
          {"lower", to_string(e.lower)},
          {"verdict", verdict_name(e.verdict)},
          {"subadditivity", {{"checked", e.subadditivity_checked}, {"violations", e.subadditivity_violations}}},
          {"commuting_subadditivity", "estimate-level only: no finite certificate"}};
}

json growth_json(Context& ctx, const GrowthReport& r) {
  Table t{{"n", "ball_size"}, {}};
  Series s;
  for (std::size_t n = 0; n < r.ball_sizes.size(); ++n) {
    t.rows.push_back({str(n), str(r.ball_sizes[n])});
    s.points.emplace_back(static_cast<double>(n), static_cast<double>(r.ball_sizes[n]));
  }
  ctx.report.tables["growth"] = std::move(t);
  ctx.report.series["growth"] = std::move(s);
  json j{{"radius", r.radius},
         {"ball_sizes", r.ball_sizes},
         {"fitted_base", r.fitted_base},
         {"guaranteed_base", r.guaranteed_base},
         {"guaranteed_base_squared", to_string(r.guaranteed_base_squared)}};
  j["filter"] = r.filter ? r.filter->to_json(ctx.spec) : json(nullptr);
  return j;
}

json cmd_growth(Context& ctx) {
  const int R = ctx.need(ctx.cfg.radius, "--radius");
  BallTable table = ctx.ball(R);
  if (auto k = ctx.kernel()) table = restrict_to_kernel(table, *k);
  return growth_json(ctx, growth_series(table, R));
}

json cmd_verify_growth(Context& ctx) {
  const int R = ctx.need(ctx.cfg.radius, "--radius");
  const auto v = verify_negative_curvature_growth(ctx.spec, ctx.kernel(), ctx.cfg.r_kappa, R, ctx.census_options());
  ctx.report.peak_elements = std::max(ctx.report.peak_elements, v.growth.ball_sizes.back());
  Table t{{"kind", "n", "left", "right", "holds"}, {}};
  json checks = json::array();
  for (const auto& c : v.checks) {
    const char* kind = c.kind == ChainCheck::Kind::kSphereBound ? "sphere_bound" : "ball_recursion";
    t.rows.push_back({kind, std::to_string(c.n), std::to_string(c.left), std::to_string(c.right), c.holds ? "1" : "0"});
    checks.push_back({{"kind", kind}, {"n", c.n}, {"left", c.left}, {"right", c.right}, {"holds", c.holds}});
  }
  json j{{"rkappa", v.r_kappa},
         {"radius", v.radius},
         {"hypothesis_holds", v.hypothesis_holds},
         {"chain_holds", v.chain_holds ? json(*v.chain_holds) : json(nullptr)},
         {"tight_sphere_bound_holds", v.tight_sphere_bound_holds ? json(*v.tight_sphere_bound_holds) : json(nullptr)},
         {"checks", checks},
         {"base", v.base},
         {"base_squared", to_string(v.base_squared)},
         {"growth", growth_json(ctx, v.growth)}};
  j["first_counterexample_norm"] = v.first_counterexample_norm ? json(*v.first_counterexample_norm) : json(nullptr);
  ctx.report.tables["chain"] = std::move(t);
  return j;
}

json cmd_closure(Context& ctx) {
  const auto r = conjugation_closure(ctx.spec, ctx.cfg.budget);
  json original = json::array();
  json closed = json::array();
  for (const auto& e : r.original) original.push_back(ctx.render(e));
  for (const auto& e : r.closed) closed.push_back(ctx.render(e));
  Table t{{"generator", "orbit_size"}, {}};
  for (std::size_t i = 0; i < r.original.size(); ++i) t.rows.push_back({ctx.render(r.original[i]), str(r.orbit_sizes[i])});
  ctx.report.tables["closure"] = std::move(t);
  json j{{"original", original},
         {"closed", closed},
         {"closed_size", r.closed.size()},
         {"orbit_sizes", r.orbit_sizes},
         {"terminated", r.terminated},
         {"usable", r.terminated}};
  if (ctx.cfg.emit_genset) {
    const GroupSpec closed_spec = r.closed_spec(ctx.spec);
    std::ofstream out(*ctx.cfg.emit_genset);
    if (!out) throw std::runtime_error("cannot write " + ctx.cfg.emit_genset->string());
    json file{{"group", ctx.g().to_json()}, {"generators", closed}};
    out << file.dump(2) << "\n";
    if (closed_spec.generators.size() != r.closed.size()) throw InvariantError("closed set lost elements on reload");
  }
  return j;
}

json cmd_flat_check(Context& ctx) {
  const int R = ctx.need(ctx.cfg.radius, "--radius");
  const int cutoff = ctx.cfg.cutoff;
  if (cutoff < 0 || R < cutoff + 3) throw PreconditionError("flat check needs R >= cutoff + 3");
  const BallTable table = ctx.ball(R + 2);
  const auto c = census(table, R, ctx.census_options());
  json gens = json::array();
  for (const auto& s : ctx.spec.generators) gens.push_back(ctx.render(s));
  return {{"radius", R}, {"cutoff", cutoff}, {"generators", gens}, {"flat", c.flat_between(cutoff, R)}, {"census", census_json(ctx, table, c)}};
}

}  // namespace

Report run(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.command = config.command;
  report.config = config.echo();
  Context ctx{config, load_group(config), {}, report};
  ctx.eo.max_elements = config.max_elements.value_or(default_max_elements());
  ctx.eo.threads = config.threads;
  report.group = ctx.spec.describe();
  report.config["generators"] = ctx.spec.to_json()["generators"];

  const std::string& c = config.command;
  if (c == "ball") report.data = cmd_ball(ctx);
  else if (c == "norm") report.data = cmd_norm(ctx);
  else if (c == "kappa") report.data = cmd_kappa(ctx);
  else if (c == "census") report.data = cmd_census(ctx);
  else if (c == "annulus") report.data = cmd_annulus(ctx);
  else if (c == "orbit") report.data = cmd_orbit(ctx);
  else if (c == "exits") report.data = cmd_exits(ctx);
  else if (c == "reduce") report.data = cmd_reduce(ctx);
  else if (c == "boundary-profile") report.data = cmd_boundary(ctx);
  else if (c == "stable-norm") report.data = cmd_stable_norm(ctx);
  else if (c == "growth") report.data = cmd_growth(ctx);
  else if (c == "verify-growth") report.data = cmd_verify_growth(ctx);
  else if (c == "closure") report.data = cmd_closure(ctx);
  else if (c == "flat-check") report.data = cmd_flat_check(ctx);

  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

std::vector<std::filesystem::path> emit(const Report& report, const std::set<std::string>& formats,
                                        const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  if (formats.contains("json")) {
    written.push_back(dir / "report.json");
    write_file(written.back(), report.to_json().dump(2) + "\n");
  }
  if (formats.contains("csv")) {
    for (const auto& [name, table] : report.tables) {
      std::ostringstream os;
      for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << csv_field(table.header[i]);
      os << "\n";
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
      }
      written.push_back(dir / (name + ".csv"));
      write_file(written.back(), os.str());
    }
  }
  for (const auto& [name, series] : report.series) {
    std::ostringstream os;
    os.precision(10);
    for (const auto& [x, y] : series.points) os << x << " " << y << "\n";
    written.push_back(dir / (name + ".dat"));
    write_file(written.back(), os.str());
  }
  return written;
}

}  // namespace medcurv::app
