#include "univrad/bounds.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <utility>

namespace univrad {

namespace {

void require_unit_range(double r) {
  if (!(r >= 0.0) || r >= 1.0) throw invalid_radius("bound: r must lie in [0, 1)");
}

std::string fmt_g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

}  // namespace

CoeffClass coeff_class(double a, double b, double c, std::string name) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw std::invalid_argument("coeff_class: non-finite parameter");
  if (c < 0.0) throw std::invalid_argument("coeff_class: c must be >= 0");
  if (!(a + b / 2.0 + 2.0 * c > 0.0))
    throw std::invalid_argument("coeff_class: requires A_2 = a + b/2 + 2c > 0");
  return CoeffClass{a, b, c, std::move(name)};
}

double coeff_value(const CoeffClass& cls, int n) {
  if (n < 2) throw std::invalid_argument("coeff_value: n must be >= 2");
  return cls.a + cls.b / static_cast<double>(n) + cls.c * static_cast<double>(n);
}

namespace classes {

CoeffClass one() { return coeff_class(1.0, 0.0, 0.0, "ONE"); }
CoeffClass n() { return coeff_class(0.0, 0.0, 1.0, "N"); }
CoeffClass two_over_n() { return coeff_class(0.0, 2.0, 0.0, "TWO_OVER_N"); }
CoeffClass half_n_plus_1() { return coeff_class(0.5, 0.0, 0.5, "HALF_N_PLUS_1"); }

CoeffClass k1_alpha(double alpha) {
  if (!(alpha >= 0.0) || alpha >= 1.0)
    throw std::invalid_argument("k1_alpha: alpha must lie in [0, 1)");
  return coeff_class(0.0, 2.0 * (1.0 - alpha), 0.0, "K1_ALPHA:" + fmt_g(alpha));
}

}  // namespace classes

std::optional<CoeffClass> parse_class(std::string_view text) {
  try {
    if (text == "ONE") return classes::one();
    if (text == "N") return classes::n();
    if (text == "TWO_OVER_N") return classes::two_over_n();
    if (text == "HALF_N_PLUS_1") return classes::half_n_plus_1();
    if (text.rfind("K1_ALPHA:", 0) == 0)
      return classes::k1_alpha(std::stod(std::string(text.substr(9))));
    // ad hoc "a,b,c"
    const auto c1 = text.find(',');
    const auto c2 = text.find(',', c1 == std::string_view::npos ? c1 : c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos) return std::nullopt;
    const double a = std::stod(std::string(text.substr(0, c1)));
    const double b = std::stod(std::string(text.substr(c1 + 1, c2 - c1 - 1)));
    const double c = std::stod(std::string(text.substr(c2 + 1)));
    return coeff_class(a, b, c, fmt_g(a) + "," + fmt_g(b) + "," + fmt_g(c));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

double log1m_over_r(double r) {
  if (r < 1e-4) {
    // log(1-r)/r = -(1 + r/2 + r^2/3 + ...) to eight terms
    double acc = 1.0 / 8.0;
    for (int k = 7; k >= 1; --k) acc = acc * r + 1.0 / static_cast<double>(k);
    return -acc;
  }
  return std::log1p(-r) / r;
}

double dist_bound(const CoeffClass& cls, double r) {
  require_unit_range(r);
  if (r == 0.0) return 0.0;
  const double s = 1.0 / (1.0 - r);
  return -(cls.a + cls.b + cls.c) + cls.a * s - cls.b * log1m_over_r(r) + cls.c * s * s;
}

double mod_bound(const CoeffClass& cls, double r) { return 1.0 + dist_bound(cls, r); }

double resid_bound(const CoeffClass& cls, double r) {
  require_unit_range(r);
  if (r == 0.0) return 0.0;
  const double s = 1.0 / (1.0 - r);
  return (cls.a + cls.b + cls.c) - (2.0 * cls.a - cls.b) * s + (cls.a - 2.0 * cls.c) * s * s +
         cls.c * (1.0 + r) * s * s * s + 2.0 * cls.b * log1m_over_r(r);
}

double uF_bound(const CoeffClass& f_cls, const CoeffClass& g_cls, double r) {
  return mod_bound(g_cls, r) * resid_bound(f_cls, r) +
         mod_bound(f_cls, r) * resid_bound(g_cls, r) +
         dist_bound(f_cls, r) * dist_bound(g_cls, r);
}

double coeff_tail(const CoeffClass& cls, double r, int upto) {
  require_unit_range(r);
  if (upto < 1) throw std::invalid_argument("coeff_tail: upto must be >= 1");
  long double partial = 0.0L;
  long double p = static_cast<long double>(r);  // r^(n-1) at n = 2
  for (int n = 2; n <= upto; ++n) {
    partial += static_cast<long double>(coeff_value(cls, n)) * p;
    p *= r;
  }
  const double tail = dist_bound(cls, r) - static_cast<double>(partial);
  return tail > 0.0 ? tail : 0.0;
}

}  // namespace univrad
