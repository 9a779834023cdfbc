#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "univrad/extremal.hpp"
#include "univrad/ufunc.hpp"

using namespace univrad;
using testutil::max_coeff_dist;

TEST_CASE("witness coefficients saturate their class envelopes exactly") {
  for (Case c : kAllCases) {
    const ExtremalPair pair = build_extremal(c, 64);
    const auto [f_cls, g_cls] = case_classes(c);
    CHECK(pair.f.coeff(1) == Complex(1.0, 0.0));
    CHECK(pair.g.coeff(1) == Complex(1.0, 0.0));
    for (int n = 2; n <= 64; ++n) {
      CHECK(pair.f.coeff(n) == Complex(coeff_value(f_cls, n), 0.0));
      CHECK(pair.g.coeff(n) == Complex(coeff_value(g_cls, n), 0.0));
    }
  }
}

TEST_CASE("product maps of the polynomial cases") {
  // T1a: F = z(1-z)^2, T1b: F = z(1-z)^3, T1c: F = z(1-z)^4
  struct Want {
    Case c;
    std::vector<double> coeffs;
  };
  const std::vector<Want> wants = {
      {Case::T1a, {0.0, 1.0, -2.0, 1.0}},
      {Case::T1b, {0.0, 1.0, -3.0, 3.0, -1.0}},
      {Case::T1c, {0.0, 1.0, -4.0, 6.0, -4.0, 1.0}},
  };
  for (const Want& want : wants) {
    const NormalizedSeries F = F_of_pair(build_extremal(want.c, 64));
    for (std::size_t k = 0; k < want.coeffs.size(); ++k)
      CHECK(std::abs(F.coeff(static_cast<int>(k)) - Complex(want.coeffs[k], 0.0)) < 1e-12);
    for (int k = static_cast<int>(want.coeffs.size()); k <= F.order(); ++k)
      CHECK(std::abs(F.coeff(k)) < 1e-12);
  }
}

TEST_CASE("derivative vanishes at the critical radius") {
  for (Case c : kAllCases) {
    const ExtremalPair pair = build_extremal(c);
    CHECK(sharpness_check(pair) < 1e-8);
  }
}

TEST_CASE("sharpness requires the finer truncation") {
  CHECK_THROWS_AS(sharpness_check(build_extremal(Case::T1a, 64)), invalid_order_param);
}

TEST_CASE("series derivative matches the printed closed forms") {
  for (Case c : kAllCases) {
    const ExtremalPair pair = build_extremal(c);
    const Series fprime = derivative(F_of_pair(pair).series());
    for (int i = 0; i < 50; ++i) {
      const double x = pair.radius.value * i / 49.0;
      const double series_val = eval(fprime, Complex(x, 0.0)).real();
      CHECK(std::abs(series_val - pair.closed_form_fprime(x)) < 1e-10);
    }
  }
}

TEST_CASE("derivative stays bounded away from zero strictly inside") {
  const ExtremalPair t1a = build_extremal(Case::T1a);
  CHECK(local_univalence_floor(t1a, 0.3, 64) > 0.0);
  for (Case c : kAllCases) {
    const ExtremalPair pair = build_extremal(c);
    CHECK(local_univalence_floor(pair, 0.98 * pair.radius.value, 64) > 0.0);
    CHECK(std::abs(local_univalence_floor(pair, 0.01, 16) - 1.0) < 0.1);
  }
}

TEST_CASE("floor validates the radius") {
  const ExtremalPair pair = build_extremal(Case::T1b, 64);
  CHECK_THROWS_AS(local_univalence_floor(pair, 0.25, 8), invalid_radius);
  CHECK_THROWS_AS(local_univalence_floor(pair, 0.0, 8), invalid_radius);
  CHECK_THROWS_AS(local_univalence_floor(pair, 0.1, 0), std::invalid_argument);
}

TEST_CASE("first witness pair sits on the class boundary at its radius") {
  const ExtremalPair pair = build_extremal(Case::T1a);
  const Series u = u_of_product(pair.f, pair.g);
  const UScanResult at_radius = max_modulus_on_circle(u, 1.0 / 3.0);
  CHECK(std::abs(at_radius.max_modulus - 1.0) < 1e-9);
  CHECK(at_radius.argmax_angle == 0.0);
  const UScanResult inside = max_modulus_on_circle(u, 0.33);
  CHECK(inside.max_modulus < 1.0);
}
