#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "univrad/bounds.hpp"
#include "univrad/commands.hpp"
#include "univrad/report.hpp"

namespace {

int emit(const univrad::Report& rep, bool json, bool csv, bool strict) {
  const std::string text = json  ? univrad::to_json_text(rep) + "\n"
                           : csv ? univrad::to_csv(rep)
                                 : univrad::to_table(rep);
  std::fwrite(text.data(), 1, text.size(), stdout);
  std::fflush(stdout);
  if (strict && univrad::strict_failure(rep)) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified radii of univalence for products z^3/(f(z) g(z))"};
  app.require_subcommand(1);

  bool json = false, csv = false;
  univrad::Options opts;
  auto* json_flag = app.add_flag("--json", json, "emit the report as JSON");
  auto* csv_flag = app.add_flag("--csv", csv, "emit the report as CSV");
  json_flag->excludes(csv_flag);
  app.add_option("--trunc", opts.trunc, "series truncation order")
      ->check(CLI::Range(2, 65536))
      ->capture_default_str();
  app.add_option("--samples", opts.samples, "circle scan sample count")
      ->check(CLI::Range(16, 1 << 22))
      ->capture_default_str();
  app.add_option("--tol", opts.tol, "solver and verdict tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--strict", opts.strict,
               "exit 2 on inconclusive verdicts or missing crossings");

  auto* radii =
      app.add_subcommand("radii", "critical radii of the nine catalog cases");
  auto* sharpness =
      app.add_subcommand("sharpness", "extremal |F'| at each critical radius");

  auto* scan =
      app.add_subcommand("scan", "sample a pair bound over a radius range");
  std::string class_f_name, class_g_name;
  double r_min = 0.0, r_max = 0.4;
  int steps = 41;
  scan->add_option("--class-f", class_f_name,
                   "coefficient class of f (preset name, K1_ALPHA:x, or a,b,c)")
      ->required();
  scan->add_option("--class-g", class_g_name, "coefficient class of g")->required();
  scan->add_option("--r-min", r_min, "lower end of the radius range")
      ->capture_default_str();
  scan->add_option("--r-max", r_max, "upper end of the radius range")
      ->capture_default_str();
  scan->add_option("--steps", steps, "number of sample points")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();

  auto* bessel = app.add_subcommand("bessel", "normalized Bessel-derived products");
  bessel->require_subcommand(1);
  auto* b_star = bessel->add_subcommand("nu-star", "convexity threshold order");
  auto* b_thresholds =
      bessel->add_subcommand("thresholds", "envelope and convexity thresholds");
  double nu = 0.0, mu = 0.0, r_verify = 0.0;
  auto* b_radius =
      bessel->add_subcommand("radius", "certified radius for a pair of orders");
  b_radius->add_option("nu", nu, "first order parameter")->required();
  b_radius->add_option("mu", mu, "second order parameter")->required();
  auto* b_verify =
      bessel->add_subcommand("verify", "scan |U_F| on the circle of radius r");
  b_verify->add_option("nu", nu, "first order parameter")->required();
  b_verify->add_option("mu", mu, "second order parameter")->required();
  b_verify->add_option("r", r_verify, "scan radius in (0, 1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    univrad::Report rep;
    if (*radii) {
      rep = univrad::cmd_radii(opts);
    } else if (*sharpness) {
      rep = univrad::cmd_sharpness(opts);
    } else if (*scan) {
      const auto f_cls = univrad::parse_class(class_f_name);
      const auto g_cls = univrad::parse_class(class_g_name);
      if (!f_cls || !g_cls) {
        std::fprintf(stderr, "error: unrecognized coefficient class '%s'\n",
                     (!f_cls ? class_f_name : class_g_name).c_str());
        return 1;
      }
      rep = univrad::cmd_scan(*f_cls, *g_cls, r_min, r_max, steps, opts);
    } else if (*b_star) {
      rep = univrad::cmd_bessel_nu_star(opts);
    } else if (*b_thresholds) {
      rep = univrad::cmd_bessel_thresholds(opts);
    } else if (*b_radius) {
      rep = univrad::cmd_bessel_radius(nu, mu, opts);
    } else {
      rep = univrad::cmd_bessel_verify(nu, mu, r_verify, opts);
    }
    return emit(rep, json, csv, opts.strict);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
