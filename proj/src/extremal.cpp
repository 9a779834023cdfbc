#include "univrad/extremal.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace univrad {

namespace {

// z/(1-z); saturates A_n = 1.
NormalizedSeries geom_witness(int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 1.0);
  c[0] = 0.0;
  return NormalizedSeries(Series::from_real(c));
}

// z/(1-z)^2; saturates A_n = n.
NormalizedSeries koebe_witness(int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = n;
  return NormalizedSeries(Series::from_real(c));
}

// -z - 2 log(1-z); saturates A_n = 2/n.
NormalizedSeries log_witness(int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  c[1] = 1.0;
  for (int n = 2; n <= order; ++n) c[static_cast<std::size_t>(n)] = 2.0 / n;
  return NormalizedSeries(Series::from_real(c));
}

// z(2-z)/(2(1-z)^2); saturates A_n = (n+1)/2.
NormalizedSeries convex_witness(int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = (n + 1) / 2.0;
  return NormalizedSeries(Series::from_real(c));
}

// g(x)/x = -1 - (2/x) log(1-x) for the log witness.
double m_of(double x) { return -1.0 - 2.0 * log1m_over_r(x); }

std::function<double(double)> closed_fprime(Case c) {
  switch (c) {
    case Case::T1a:
      return [](double x) { return 1.0 - 4.0 * x + 3.0 * x * x; };
    case Case::T1b:
      return [](double x) { return (1.0 - 4.0 * x) * (1.0 - x) * (1.0 - x); };
    case Case::T1c:
      return [](double x) { return (1.0 - 5.0 * x) * std::pow(1.0 - x, 3); };
    case Case::T2a:
      return [](double x) {
        if (x == 0.0) return 1.0;
        const double m = m_of(x);
        return phi1(x) / (m * m);
      };
    case Case::T2b:
      return [](double x) {
        if (x == 0.0) return 1.0;
        const double m = m_of(x);
        return -(1.0 - x) * phi2(x) / (m * m);
      };
    case Case::T2c:
      return [](double x) {
        if (x == 0.0) return 1.0;
        const double m = m_of(x);
        return -phi3(x) / (m * m * m);
      };
    case Case::T3a:
      return [](double x) {
        const double d = 2.0 - x;
        return 2.0 * (1.0 - x) * (1.0 - x) * (3.0 * x * x - 8.0 * x + 2.0) / (d * d);
      };
    case Case::T3b:
      return [](double x) {
        const double d = 2.0 - x;
        return 4.0 * std::pow(1.0 - x, 3) * (2.0 * x * x - 5.0 * x + 1.0) / (d * d);
      };
    case Case::T3c:
      return [](double x) {
        if (x == 0.0) return 1.0;
        const double d = (1.0 - 0.5 * x) * m_of(x);
        return (1.0 - x) * psi(x) / (d * d);
      };
  }
  throw unknown_case("closed_fprime: bad enum value");
}

NormalizedSeries witness_for(const CoeffClass& cls, int order) {
  if (cls.name == "ONE") return geom_witness(order);
  if (cls.name == "N") return koebe_witness(order);
  if (cls.name == "TWO_OVER_N") return log_witness(order);
  if (cls.name == "HALF_N_PLUS_1") return convex_witness(order);
  throw unknown_case("witness_for: no witness for class " + cls.name);
}

}  // namespace

ExtremalPair build_extremal(Case c, int order) {
  if (order < 2) throw invalid_order_param("build_extremal: order must be >= 2");
  const auto [f_cls, g_cls] = case_classes(c);
  return ExtremalPair{c, witness_for(f_cls, order), witness_for(g_cls, order),
                      dedicated_radius(c), closed_fprime(c)};
}

NormalizedSeries F_of_pair(const ExtremalPair& pair) {
  const Series prod = mul(shift_down(pair.f.series()), shift_down(pair.g.series()));
  return NormalizedSeries(shift_up(reciprocal(prod)));
}

double sharpness_check(const ExtremalPair& pair) {
  if (pair.f.order() < kSharpnessOrder)
    throw invalid_order_param("sharpness_check: pair must be built at order >= 128");
  const Series fprime = derivative(F_of_pair(pair).series());
  return std::abs(eval(fprime, Complex(pair.radius.value, 0.0)));
}

double local_univalence_floor(const ExtremalPair& pair, double r, int grid) {
  if (!(r > 0.0) || r >= pair.radius.value)
    throw invalid_radius("local_univalence_floor: need 0 < r < critical radius");
  if (grid < 1) throw std::invalid_argument("local_univalence_floor: grid must be >= 1");
  const Series fprime = derivative(F_of_pair(pair).series());
  double floor = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= grid; ++i) {
    const double rho = r * i / grid;
    for (int j = 0; j < grid; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / grid;
      const Complex z(rho * std::cos(theta), rho * std::sin(theta));
      floor = std::min(floor, std::abs(eval(fprime, z)));
    }
  }
  return floor;
}

}  // namespace univrad
