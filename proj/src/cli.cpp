#include "tangleroof/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tangleroof/analytic_roof.hpp"
#include "tangleroof/roof_oracle.hpp"
#include "tangleroof/serialize.hpp"

namespace tangleroof::cli {

std::uint64_t default_seed() {
  const char* env = std::getenv("TANGLEROOF_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  std::uint64_t seed = 0;
  const char* end = env + std::strlen(env);
  const auto res = std::from_chars(env, end, seed);
  if (res.ec != std::errc() || res.ptr != end) return kDefaultSeed;
  return seed;
}

namespace {

using nlohmann::json;

struct FamilyFlags {
  std::optional<double> a, b, c, d, f;
  std::optional<double> s, tau_ghz;

  void attach(CLI::App& app) {
    app.add_option("--a", a, "gGHZ coefficient of |000>");
    app.add_option("--b", b, "gGHZ coefficient of |111>");
    app.add_option("--c", c, "gW coefficient of |001>");
    app.add_option("--d", d, "gW coefficient of |010>");
    app.add_option("--f", f, "gW coefficient of |100>");
    app.add_option("--s", s, "s = 4cdf/(a^2 b); use together with --tau-ghz");
    app.add_option("--tau-ghz", tau_ghz, "three-tangle of the gGHZ state, 4a^2b^2");
  }

  FamilyParams resolve() const {
    const bool any_coef = a || b || c || d || f;
    const bool all_coef = a && b && c && d && f;
    const bool any_pair = s || tau_ghz;
    if (any_coef && any_pair) {
      throw std::invalid_argument("give either --a --b --c --d --f or --s --tau-ghz, not both");
    }
    if (any_pair) {
      if (!(s && tau_ghz)) throw std::invalid_argument("--s and --tau-ghz must be given together");
      return solve_coefficients(*s, *tau_ghz);
    }
    if (!all_coef) {
      throw std::invalid_argument(
          "family required: all of --a --b --c --d --f, or --s with --tau-ghz");
    }
    return FamilyParams(*a, *b, *c, *d, *f);
  }
};

json number(double v) {
  // Non-finite values (s for a product gGHZ state) become null.
  return std::isfinite(v) ? json(v) : json(nullptr);
}

json family_json(const FamilyParams& fam) {
  return {{"a", fam.a()},         {"b", fam.b()},
          {"c", fam.c()},         {"d", fam.d()},
          {"f", fam.f()},         {"s", number(fam.s())},
          {"tau_ghz", fam.tau_ghz()}};
}

// Writes through `out` or to `path` when non-empty.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  writer(file);
  if (!file) throw std::runtime_error("failed writing " + path);
}

std::string tangle_text(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.15g", value);
  return buf;
}

void print_thresholds(std::ostream& os, const FamilyParams& fam) {
  const RoofThresholds th = roof_thresholds(fam);
  os << "s=" << format_double(fam.s()) << '\n'
     << "tau_ghz=" << format_double(fam.tau_ghz()) << '\n'
     << "p0=" << format_double(th.p0) << '\n'
     << "p1=" << format_double(th.p1) << '\n';
}

void write_curve(const FamilyParams& fam, int grid, int phi_grid, const std::string& path,
                 std::ostream& out) {
  const auto rows = roof_curve(fam, grid, phi_grid);
  emit(path, out, [&](std::ostream& os) { write_curve_csv(os, rows); });
}

struct FigurePanel {
  const char* name;
  const char* file;
  double s;
};

constexpr double kFigureTauGhz = 0.0396;
constexpr FigurePanel kFigurePanels[] = {{"a", "figure1a.csv", 7.0}, {"b", "figure1b.csv", 2.3}};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex-roof three-tangle of gGHZ/gW mixtures", "tangleroof"};
  app.require_subcommand(1);

  // tangle
  std::string state_file;
  auto* tangle_cmd = app.add_subcommand("tangle", "three-tangle of a pure state JSON file");
  tangle_cmd->add_option("state-file", state_file, "JSON array of 8 {re, im} amplitudes")
      ->required();

  // roof
  FamilyFlags roof_family;
  int roof_grid = 1001;
  int roof_phi_grid = 720;
  std::string roof_out;
  auto* roof_cmd = app.add_subcommand("roof", "tabulate the roof and characteristic curves");
  roof_family.attach(*roof_cmd);
  roof_cmd->add_option("--grid", roof_grid, "number of p values on [0,1]")->capture_default_str();
  roof_cmd->add_option("--phi-grid", roof_phi_grid, "phi grid for the characteristic minimum")
      ->capture_default_str();
  roof_cmd->add_option("--out", roof_out, "CSV output file (default: stdout)");

  // verify
  FamilyFlags verify_family_flags;
  VerifyOptions verify_opts;
  verify_opts.oracle.seed = default_seed();
  std::string verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "compare the analytic roof with the optimizer");
  verify_family_flags.attach(*verify_cmd);
  verify_cmd->add_option("--p-grid", verify_opts.p_grid, "number of p values on [0,1]")
      ->capture_default_str();
  verify_cmd->add_option("--sizes", verify_opts.oracle.sizes, "decomposition lengths")
      ->delimiter(',')
      ->capture_default_str();
  verify_cmd->add_option("--restarts", verify_opts.oracle.restarts, "restarts per length")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_opts.oracle.seed, "base seed (env TANGLEROOF_SEED)")
      ->capture_default_str();
  verify_cmd->add_option("--tol", verify_opts.tol_gap, "allowed |analytic - oracle|")
      ->capture_default_str();
  verify_cmd->add_option("--phi-grid", verify_opts.phi_grid, "phi grid for char_min")
      ->capture_default_str();
  verify_cmd->add_option("--threads", verify_opts.oracle.threads, "worker threads (0 = all)")
      ->capture_default_str();
  verify_cmd->add_option("--out", verify_out, "JSON output file (default: stdout)");

  // decomposition
  FamilyFlags decomp_family;
  double decomp_p = 0.0;
  std::string decomp_out;
  auto* decomp_cmd = app.add_subcommand("decomposition", "optimal decomposition of rho(p)");
  decomp_family.attach(*decomp_cmd);
  decomp_cmd->add_option("--p", decomp_p, "gGHZ weight p in [0,1]")->required();
  decomp_cmd->add_option("--out", decomp_out, "JSON output file (default: stdout)");

  // figure1
  std::string figure_dir = ".";
  int figure_grid = 1001;
  int figure_phi_grid = 720;
  auto* figure_cmd =
      app.add_subcommand("figure1", "curves for s = 7 and s = 2.3 at tau_ghz = 0.0396");
  figure_cmd->add_option("--out-dir", figure_dir, "directory for figure1a.csv, figure1b.csv")
      ->capture_default_str();
  figure_cmd->add_option("--grid", figure_grid, "number of p values")->capture_default_str();
  figure_cmd->add_option("--phi-grid", figure_phi_grid, "phi grid")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (tangle_cmd->parsed()) {
      out << tangle_text(three_tangle(read_state_file(state_file))) << '\n';
      return kExitOk;
    }

    if (roof_cmd->parsed()) {
      const FamilyParams fam = roof_family.resolve();
      write_curve(fam, roof_grid, roof_phi_grid, roof_out, out);
      print_thresholds(roof_out.empty() ? err : out, fam);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const FamilyParams fam = verify_family_flags.resolve();
      const auto rows = verify_family(fam, verify_opts);
      json jrows = json::array();
      double max_gap = 0.0;
      bool falsified = false;
      int loose = 0;
      for (const auto& r : rows) {
        max_gap = std::max(max_gap, std::abs(r.oracle - r.analytic));
        falsified = falsified || r.flag == GapFlag::Falsified;
        loose += r.flag == GapFlag::Loose ? 1 : 0;
        jrows.push_back({{"p", r.p},
                         {"region", region_label(r.region)},
                         {"analytic", r.analytic},
                         {"oracle", r.oracle},
                         {"char_min", r.char_min},
                         {"flag", flag_label(r.flag)}});
      }
      json params = family_json(fam);
      params["p_grid"] = verify_opts.p_grid;
      params["sizes"] = verify_opts.oracle.sizes;
      params["restarts"] = verify_opts.oracle.restarts;
      params["seed"] = verify_opts.oracle.seed;
      params["tol"] = verify_opts.tol_gap;
      const json report = {
          {"params", params},
          {"rows", jrows},
          {"summary", {{"max_gap", max_gap}, {"falsified", falsified}, {"loose", loose}}}};
      emit(verify_out, out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
      if (falsified) {
        err << "verification failed: oracle below the analytic roof\n";
        return kExitFalsified;
      }
      return kExitOk;
    }

    if (decomp_cmd->parsed()) {
      const FamilyParams fam = decomp_family.resolve();
      const OptimalDecomposition opt = optimal_decomposition(fam, decomp_p);
      const double residual = frobenius_distance(opt.decomposition.density_matrix(),
                                                 family_density(fam, decomp_p));
      if (!(residual <= 1e-12)) {
        throw std::runtime_error("decomposition does not reconstruct rho(p): residual " +
                                 format_double(residual));
      }
      json members = json::array();
      json weights = json::array();
      for (const auto& m : opt.decomposition.members()) {
        weights.push_back(m.weight);
        members.push_back({{"weight", m.weight},
                           {"tangle", three_tangle(m.state)},
                           {"amplitudes", state_to_json(m.state)}});
      }
      const json doc = {{"params", family_json(fam)},
                        {"p", decomp_p},
                        {"region", region_label(opt.region)},
                        {"degenerate", opt.degenerate},
                        {"p0", opt.thresholds.p0},
                        {"p1", opt.thresholds.p1},
                        {"weights", weights},
                        {"members", members},
                        {"residual", residual},
                        {"average_tangle", opt.decomposition.average_tangle()},
                        {"roof_value", roof_value(fam, decomp_p)}};
      emit(decomp_out, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
      return kExitOk;
    }

    if (figure_cmd->parsed()) {
      for (const auto& panel : kFigurePanels) {
        const FamilyParams fam = solve_coefficients(panel.s, kFigureTauGhz);
        const std::string path = (std::filesystem::path(figure_dir) / panel.file).string();
        write_curve(fam, figure_grid, figure_phi_grid, path, out);
        const RoofThresholds th = roof_thresholds(fam);
        out << "panel " << panel.name << ": s=" << format_double(panel.s)
            << " tau_ghz=" << format_double(fam.tau_ghz()) << " p0=" << format_double(th.p0)
            << " p1_noabs=" << format_double(p_one_unconstrained(fam.s()))
            << " p1=" << format_double(th.p1)
            << " p_inflection=" << format_double(inflection_point(fam)) << " -> " << path
            << '\n';
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tangleroof::cli
