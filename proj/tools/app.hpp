#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace medcurv::app {

inline constexpr const char* kToolVersion = "0.3.0";

/// One command invocation with its parameters.
struct RunConfig {
  std::string command;

  // group source: shorthand or JSON config path, optionally overridden by a genset file
  std::string group = "free:2";
  std::optional<std::filesystem::path> genset;
  std::optional<std::filesystem::path> kernel;

  std::optional<int> radius;
  std::optional<int> r1;
  std::optional<int> r2;
  std::optional<std::string> element;
  std::optional<std::string> u;
  std::optional<std::string> v;
  std::vector<int> m_list;
  int n_max = 64;
  int limit = 40;
  std::size_t budget = 10000;
  int cutoff = 3;
  int k = 1;
  std::optional<int> bound;
  int r_kappa = 0;
  int window = 0;
  std::size_t witnesses = 10;
  std::optional<std::filesystem::path> emit_genset;

  std::optional<std::filesystem::path> out;
  std::set<std::string> formats{"json"};
  unsigned threads = 1;
  std::optional<std::size_t> max_elements;
  std::optional<double> time_budget;

  /// Throws ConfigError on unknown commands, unknown formats or non-positive caps.
  void validate() const;
  /// Parameters that affect the result; thread count and output location are excluded.
  nlohmann::json echo() const;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Two-column plot data (n, value).
struct Series {
  std::vector<std::pair<double, double>> points;
};

struct Report {
  std::string command;
  nlohmann::json config;
  std::string group;
  nlohmann::json data;  // deterministic for a given config
  std::map<std::string, Table> tables;
  std::map<std::string, Series> series;
  double wall_time_s = 0.0;
  std::size_t peak_elements = 0;

  /// {"tool", "version", "command", "config", "group", "data", "run": {...}}
  nlohmann::json to_json() const;
};

const std::vector<std::string>& commands();

Report run(const RunConfig& config);

/// Writes report.json, one CSV per table and one .dat file per series into `dir`.
/// Returns the written paths.
std::vector<std::filesystem::path> emit(const Report& report, const std::set<std::string>& formats,
                                        const std::filesystem::path& dir);

}  // namespace medcurv::app
