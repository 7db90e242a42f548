#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "app.hpp"
#include "medcurv/error.hpp"

namespace {

void add_common(CLI::App& sub, medcurv::app::RunConfig& cfg) {
  sub.add_option("--group", cfg.group, "Group shorthand (free:K, zn:N, heis3, dinf, z2xdinf, s3xz) or JSON config path");
  sub.add_option("--genset", cfg.genset, "Generating set file (JSON list of literals, or group + generators)");
  sub.add_option("--kernel", cfg.kernel, "Kernel spec JSON (finite quotient table + generator images)");
  sub.add_option("--radius", cfg.radius, "Radius R");
  sub.add_option("--element", cfg.element, "Element literal");
  sub.add_option("--limit", cfg.limit, "Length limit for targeted norm searches");
  sub.add_option("--out", cfg.out, "Output directory (report printed to stdout when absent)");
  sub.add_option("--format", cfg.formats, "Output formats: csv,json")->delimiter(',');
  sub.add_option("--threads", cfg.threads, "Worker threads");
  sub.add_option("--max-elements", cfg.max_elements, "Element budget (default 5e7 or CURV_MAX_ELEMENTS)");
  sub.add_option("--time-budget", cfg.time_budget, "Wall-time cap in seconds");
  sub.add_option("--witnesses", cfg.witnesses, "Witnesses per sign per sphere");
}

}  // namespace

int main(int argc, char** argv) {
  using medcurv::app::RunConfig;
  CLI::App cli{"Medium-scale curvature of Cayley graphs"};
  cli.require_subcommand(1);
  cli.set_version_flag("--version", medcurv::app::kToolVersion);
  RunConfig cfg;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = cli.add_subcommand(name, help);
    add_common(*s, cfg);
    s->callback([&cfg, name] { cfg.command = name; });
    return s;
  };

  sub("ball", "Enumerate B(R) and its spheres");
  sub("norm", "Word norm of one element by bidirectional search");
  sub("kappa", "Curvature of one element");
  sub("census", "Sign census of kappa per sphere");
  auto* annulus = sub("annulus", "Annulus sum identity with boundary pairs");
  annulus->add_option("--r1", cfg.r1)->required();
  annulus->add_option("--r2", cfg.r2)->required();
  sub("orbit", "Conjugacy orbit truncated at a norm bound")->add_option("--bound", cfg.bound, "Norm bound M")->required();
  sub("exits", "Exits and k-step exits per sphere")->add_option("--k", cfg.k);
  sub("reduce", "Greedy descent to a short conjugate");
  auto* boundary = sub("boundary-profile", "Boundary sizes of the conjugation graph over a (u,v) lattice");
  boundary->add_option("--u", cfg.u)->required();
  boundary->add_option("--v", cfg.v)->required();
  boundary->add_option("--m", cfg.m_list, "Radii, e.g. 4,6,8")->delimiter(',')->required();
  boundary->add_option("--window", cfg.window, "Lattice half-width (0 = automatic)");
  sub("stable-norm", "Stable norm estimate from sampled powers")->add_option("--nmax", cfg.n_max);
  sub("growth", "Ball sizes and fitted growth base");
  sub("verify-growth", "Check the negative-curvature growth inequalities")->add_option("--rkappa", cfg.r_kappa);
  auto* closure = sub("closure", "Conjugation closure of the generating set");
  closure->add_option("--budget", cfg.budget, "Maximum closed-set size");
  closure->add_option("--emit-genset", cfg.emit_genset, "Write the closed set as a genset file");
  sub("flat-check", "Is kappa zero beyond the cutoff?")->add_option("--cutoff", cfg.cutoff);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = cli.exit(e);
    return rc == 0 ? 0 : static_cast<int>(medcurv::ErrorCode::kConfig);
  }

  if (cfg.time_budget) {
    const double secs = *cfg.time_budget;
    std::thread([secs] {
      std::this_thread::sleep_for(std::chrono::duration<double>(secs));
      std::fprintf(stderr, "error: time budget of %g s exceeded\n", secs);
      std::_Exit(static_cast<int>(medcurv::ErrorCode::kResource));
    }).detach();
  }

  try {
    const auto report = medcurv::app::run(cfg);
    if (cfg.out) {
      for (const auto& p : medcurv::app::emit(report, cfg.formats, *cfg.out)) std::cerr << "wrote " << p.string() << "\n";
    } else {
      std::cout << report.to_json().dump(2) << "\n";
    }
  } catch (const medcurv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return static_cast<int>(medcurv::ErrorCode::kResource);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
