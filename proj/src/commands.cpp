#include "univrad/commands.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "univrad/bessel.hpp"
#include "univrad/errors.hpp"
#include "univrad/extremal.hpp"
#include "univrad/radii.hpp"
#include "univrad/ufunc.hpp"

namespace univrad {

namespace {

std::string pair_label(const CoeffClass& f_cls, const CoeffClass& g_cls) {
  return f_cls.name + " x " + g_cls.name;
}

}  // namespace

Report cmd_radii(const Options& opts) {
  Report rep;
  rep.command = "radii";
  rep.inputs = {{"tol", format_double(opts.tol)}};
  rep.columns = {"case", "classes", "value", "method", "residual", "generic", "diff"};
  rep.csv_columns = {"case", "value", "method", "residual"};
  for (Case c : kAllCases) {
    const RadiusResult dedicated = dedicated_radius(c, opts.tol);
    const auto [cf, cg] = case_classes(c);
    const RadiusResult generic = radius_from_bound(cf, cg, opts.tol);
    rep.rows.push_back({std::string(case_name(c)), pair_label(cf, cg), dedicated.value,
                        std::string(method_name(dedicated.method)), dedicated.residual,
                        generic.value, std::abs(generic.value - dedicated.value)});
  }
  return rep;
}

Report cmd_sharpness(const Options& opts) {
  Report rep;
  rep.command = "sharpness";
  rep.inputs = {{"trunc", std::to_string(opts.trunc)}, {"tol", format_double(opts.tol)}};
  rep.columns = {"case", "radius", "fprime_at_radius", "floor_inside"};
  for (Case c : kAllCases) {
    const ExtremalPair pair = build_extremal(c, opts.trunc);
    const double fprime = sharpness_check(pair);
    const double floor = local_univalence_floor(pair, 0.98 * pair.radius.value);
    rep.rows.push_back({std::string(case_name(c)), pair.radius.value, fprime, floor});
  }
  return rep;
}

Report cmd_scan(const CoeffClass& f_cls, const CoeffClass& g_cls, double r_min, double r_max,
                int steps, const Options&) {
  if (!(r_min >= 0.0) || !(r_max >= r_min) || !(r_max < 1.0)) {
    throw invalid_radius("scan range must satisfy 0 <= r_min <= r_max < 1");
  }
  if (steps < 1) throw std::invalid_argument("scan needs at least one step");

  Report rep;
  rep.command = "scan";
  rep.inputs = {{"class_f", f_cls.name},
                {"class_g", g_cls.name},
                {"r_min", format_double(r_min)},
                {"r_max", format_double(r_max)},
                {"steps", std::to_string(steps)}};
  rep.columns = {"r", "bound", "crossed"};
  for (int i = 0; i < steps; ++i) {
    const double r =
        steps == 1 ? r_min : r_min + (r_max - r_min) * (double(i) / (steps - 1));
    const double bound = uF_bound(f_cls, g_cls, r);
    rep.rows.push_back({r, bound, bound >= 1.0});
  }
  return rep;
}

Report cmd_bessel_nu_star(const Options& opts) {
  const double star = nu_star(opts.tol);
  const double residual =
      (2.0 * star - 5.0) * j_nu_at_one(star + 1.0) + 5.0 * j_nu_at_one(star);
  Report rep;
  rep.command = "bessel nu-star";
  rep.inputs = {{"tol", format_double(opts.tol)}};
  rep.columns = {"nu_star", "residual"};
  rep.rows.push_back({star, std::abs(residual)});
  return rep;
}

Report cmd_bessel_thresholds(const Options& opts) {
  Report rep;
  rep.command = "bessel thresholds";
  rep.columns = {"hypothesis", "nu"};
  rep.rows.push_back({std::string("abs_le_1"), -0.75});
  rep.rows.push_back({std::string("abs_le_n"), -0.875});
  rep.rows.push_back({std::string("convexity"), nu_star(opts.tol)});
  return rep;
}

Report cmd_bessel_radius(double nu, double mu, const Options&) {
  const auto res = f_nu_mu_radius(nu, mu);
  Report rep;
  rep.command = "bessel radius";
  rep.inputs = {{"nu", format_double(nu)}, {"mu", format_double(mu)}};
  rep.columns = {"applicable", "case", "value", "method", "residual"};
  if (res) {
    rep.rows.push_back({true, res->case_id, res->value,
                        std::string(method_name(res->method)), res->residual});
  } else {
    rep.rows.push_back({false, std::string(), 0.0, std::string(), 0.0});
  }
  return rep;
}

Report cmd_bessel_verify(double nu, double mu, double r, const Options& opts) {
  const BesselVerification v =
      verify_bessel_membership(nu, mu, r, opts.trunc, opts.samples, opts.tol);
  Report rep;
  rep.command = "bessel verify";
  rep.inputs = {{"nu", format_double(nu)},
                {"mu", format_double(mu)},
                {"r", format_double(r)},
                {"trunc", std::to_string(opts.trunc)},
                {"samples", std::to_string(opts.samples)},
                {"tol", format_double(opts.tol)}};
  rep.columns = {"verdict", "max_modulus", "argmax_angle", "has_tail", "tail_bound"};
  rep.rows.push_back({std::string(verdict_name(v.verdict)), v.scan.max_modulus,
                      v.scan.argmax_angle, v.scan.tail_bound.has_value(),
                      v.scan.tail_bound.value_or(0.0)});
  return rep;
}

bool strict_failure(const Report& r) {
  for (size_t j = 0; j < r.columns.size(); ++j) {
    for (const auto& row : r.rows) {
      if (j >= row.size()) continue;
      const Cell& cell = row[j];
      if (r.columns[j] == "method" || r.columns[j] == "verdict") {
        if (const auto* s = std::get_if<std::string>(&cell)) {
          if (*s == "no_crossing" || *s == "inconclusive") return true;
        }
      } else if (r.columns[j] == "applicable") {
        if (const auto* b = std::get_if<bool>(&cell); b && !*b) return true;
      }
    }
  }
  return false;
}

}  // namespace univrad
