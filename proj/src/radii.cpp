#include "univrad/radii.hpp"

#include <cmath>
#include <limits>

namespace univrad {

namespace {

void require_open_unit(double r) {
  if (!(r > 0.0) || r >= 1.0) throw invalid_radius("radius equation: r must lie in (0, 1)");
}

}  // namespace

std::string_view case_name(Case c) {
  switch (c) {
    case Case::T1a: return "T1a";
    case Case::T1b: return "T1b";
    case Case::T1c: return "T1c";
    case Case::T2a: return "T2a";
    case Case::T2b: return "T2b";
    case Case::T2c: return "T2c";
    case Case::T3a: return "T3a";
    case Case::T3b: return "T3b";
    case Case::T3c: return "T3c";
  }
  throw unknown_case("case_name: bad enum value");
}

Case case_from_name(std::string_view name) {
  for (Case c : kAllCases)
    if (case_name(c) == name) return c;
  throw unknown_case("case_from_name: " + std::string(name));
}

std::pair<CoeffClass, CoeffClass> case_classes(Case c) {
  switch (c) {
    case Case::T1a: return {classes::one(), classes::one()};
    case Case::T1b: return {classes::n(), classes::one()};
    case Case::T1c: return {classes::n(), classes::n()};
    case Case::T2a: return {classes::one(), classes::two_over_n()};
    case Case::T2b: return {classes::n(), classes::two_over_n()};
    case Case::T2c: return {classes::two_over_n(), classes::two_over_n()};
    case Case::T3a: return {classes::half_n_plus_1(), classes::one()};
    case Case::T3b: return {classes::half_n_plus_1(), classes::n()};
    case Case::T3c: return {classes::half_n_plus_1(), classes::two_over_n()};
  }
  throw unknown_case("case_classes: bad enum value");
}

std::string_view method_name(RadiusMethod m) {
  switch (m) {
    case RadiusMethod::closed_form: return "closed_form";
    case RadiusMethod::root_found: return "root_found";
    case RadiusMethod::no_crossing: return "no_crossing";
  }
  return "unknown";
}

RadiusResult closed_form_radius(Case c) {
  double value = 0.0;
  switch (c) {
    case Case::T1a: value = 1.0 / 3.0; break;
    case Case::T1b: value = 0.25; break;
    case Case::T1c: value = 0.2; break;
    case Case::T3a: value = (4.0 - std::sqrt(10.0)) / 3.0; break;
    case Case::T3b: value = (5.0 - std::sqrt(17.0)) / 4.0; break;
    default:
      throw unknown_case("closed_form_radius: case has no algebraic radius");
  }
  return RadiusResult{value, RadiusMethod::closed_form, 0.0, std::string(case_name(c)), false};
}

double phi1(double r) {
  require_open_unit(r);
  return 2.0 * r - 3.0 + 2.0 * (3.0 * r - 2.0) * log1m_over_r(r);
}

double phi2(double r) {
  require_open_unit(r);
  return 3.0 * (1.0 - r) - 4.0 * (2.0 * r - 1.0) * log1m_over_r(r);
}

double phi3(double r) {
  require_open_unit(r);
  return (5.0 - r) / (1.0 - r) + 6.0 * log1m_over_r(r);
}

double psi(double r) {
  require_open_unit(r);
  return (r - 3.0) * (1.0 - r) - (4.0 - 9.0 * r + 3.0 * r * r) * log1m_over_r(r);
}

RadiusResult root_in_unit_interval(const std::function<double(double)>& fn, double lo, double hi,
                                   double tol, std::string case_id) {
  if (!(lo > 0.0) || !(hi < 1.0) || !(lo < hi))
    throw invalid_radius("root_in_unit_interval: need 0 < lo < hi < 1");
  if (!(tol > 0.0)) throw std::invalid_argument("root_in_unit_interval: tol must be positive");

  double a = lo, b = hi;
  double fa = fn(a), fb = fn(b);
  auto result = [&case_id](double x, double fx) {
    return RadiusResult{x, RadiusMethod::root_found, std::abs(fx), case_id, false};
  };
  if (fa == 0.0) return result(a, fa);
  if (fb == 0.0) return result(b, fb);
  if ((fa > 0.0) == (fb > 0.0))
    throw no_sign_change("root_in_unit_interval: endpoints have equal signs");

  double best_x = std::abs(fa) < std::abs(fb) ? a : b;
  double best_f = std::abs(fa) < std::abs(fb) ? fa : fb;
  for (int iter = 0; iter < 400; ++iter) {
    const double width = b - a;
    double x = a + 0.5 * width;  // bisection fallback
    if (fb != fa && iter % 3 != 2) {
      // secant candidate, accepted only strictly inside the bracket;
      // every third step bisects so the bracket cannot creep
      const double s = b - fb * (b - a) / (fb - fa);
      const double margin = 0.01 * width;
      if (s > a + margin && s < b - margin) x = s;
    }
    const double fx = fn(x);
    if (std::abs(fx) < std::abs(best_f)) {
      best_x = x;
      best_f = fx;
    }
    if (fx == 0.0) return result(x, fx);
    if ((fx > 0.0) == (fa > 0.0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
    const double eps_floor = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, b);
    if ((b - a < tol && std::abs(best_f) < tol) || b - a < eps_floor) break;
  }
  return result(best_x, best_f);
}

RadiusResult dedicated_radius(Case c, double tol) {
  switch (c) {
    case Case::T1a:
    case Case::T1b:
    case Case::T1c:
    case Case::T3a:
    case Case::T3b: return closed_form_radius(c);
    case Case::T2a: {
      RadiusResult r = root_in_unit_interval(phi1, 0.01, 0.9, tol, "T2a");
      return r;
    }
    case Case::T2b: return root_in_unit_interval(phi2, 0.01, 0.9, tol, "T2b");
    case Case::T2c: return root_in_unit_interval(phi3, 0.01, 0.9, tol, "T2c");
    case Case::T3c: return root_in_unit_interval(psi, 0.01, 0.9, tol, "T3c");
  }
  throw unknown_case("dedicated_radius: bad enum value");
}

RadiusResult radius_from_bound(const CoeffClass& f_cls, const CoeffClass& g_cls, double tol) {
  const double hi_cap = 1.0 - 1e-6;
  auto gap = [&](double r) { return uF_bound(f_cls, g_cls, r) - 1.0; };

  const std::string label =
      (f_cls.name.empty() ? "(ad hoc)" : f_cls.name) + "x" +
      (g_cls.name.empty() ? "(ad hoc)" : g_cls.name);

  // outward scan in steps of 1e-3; the bound starts at -1 below r = 0+
  double prev_r = 1e-9;
  double prev_g = gap(prev_r);
  if (prev_g >= 0.0) {
    // enormous classes cross before the first scan point
    RadiusResult res = root_in_unit_interval(gap, 1e-300, prev_r, tol, label);
    res.case_id = label;
    return res;
  }
  double cross_lo = 0.0, cross_hi = 0.0;
  bool found = false;
  int sign_changes = 0;
  for (int k = 1;; ++k) {
    double r = 1e-3 * k;
    if (r >= hi_cap) r = hi_cap;
    const double cur = gap(r);
    if ((cur >= 0.0) != (prev_g >= 0.0)) {
      ++sign_changes;
      if (!found) {
        cross_lo = prev_r;
        cross_hi = r;
        found = true;
      }
    }
    prev_r = r;
    prev_g = cur;
    if (r >= hi_cap) break;
  }

  if (!found) {
    RadiusResult res{hi_cap, RadiusMethod::no_crossing, std::abs(gap(hi_cap)), label, false};
    return res;
  }

  RadiusResult res = gap(cross_hi) == 0.0
                         ? RadiusResult{cross_hi, RadiusMethod::root_found, 0.0, label, false}
                         : root_in_unit_interval(gap, cross_lo, cross_hi, tol, label);
  res.case_id = label;
  res.multiple_crossings = sign_changes > 1;
  return res;
}

}  // namespace univrad
