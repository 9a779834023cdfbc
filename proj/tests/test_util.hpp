#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "univrad/series.hpp"

namespace univrad::testutil {

inline Complex random_unit_disk(std::mt19937& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double rho = std::sqrt(unif(rng));
  const double ang = 2.0 * 3.14159265358979323846 * unif(rng);
  return Complex(rho * std::cos(ang), rho * std::sin(ang));
}

// Random invertible series with |c0| in [c0_min, c0_max] and geometrically
// damped higher coefficients, so 1/s converges on the closed unit disk and
// the reciprocal recursion stays well conditioned.
inline Series random_tame_series(std::mt19937& rng, int order, double c0_min, double c0_max,
                                 double damp = 0.35) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  const double mag = c0_min + (c0_max - c0_min) * unif(rng);
  const double ang = 2.0 * 3.14159265358979323846 * unif(rng);
  c[0] = Complex(mag * std::cos(ang), mag * std::sin(ang));
  double p = damp;
  for (int k = 1; k <= order; ++k) {
    c[static_cast<std::size_t>(k)] = random_unit_disk(rng) * (mag * p);
    p *= damp;
  }
  return Series(std::move(c));
}

// Random normalized series with |a_n| <= damp^(n-2) <= 1 for n >= 2; f(z)/z
// then stays zero-free on the closed unit disk.
inline NormalizedSeries random_tame_normalized(std::mt19937& rng, int order, double damp = 0.4) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  c[0] = Complex(0.0, 0.0);
  c[1] = Complex(1.0, 0.0);
  double p = 1.0;
  for (int n = 2; n <= order; ++n) {
    c[static_cast<std::size_t>(n)] = random_unit_disk(rng) * (0.45 * p);
    p *= damp;
  }
  return NormalizedSeries(Series(std::move(c)));
}

inline double max_coeff_dist(const Series& s, const Series& t) {
  double worst = 0.0;
  const int n = std::max(s.order(), t.order());
  for (int k = 0; k <= n; ++k) worst = std::max(worst, std::abs(s.coeff(k) - t.coeff(k)));
  return worst;
}

}  // namespace univrad::testutil
