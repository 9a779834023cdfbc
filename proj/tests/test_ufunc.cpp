#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "univrad/radii.hpp"
#include "univrad/ufunc.hpp"

using namespace univrad;
using testutil::max_coeff_dist;
using testutil::random_tame_normalized;

namespace {

// z/(1-z): all coefficients one.
NormalizedSeries geom_map(int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 1.0);
  c[0] = 0.0;
  return NormalizedSeries(Series::from_real(c));
}

// z/(1-z)^2: coefficients n.
NormalizedSeries koebe_map(int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = n;
  return NormalizedSeries(Series::from_real(c));
}

// z / q(z) for a polynomial q with q(0) = 1, truncated at `order`.
NormalizedSeries z_over(const std::vector<double>& q, int order) {
  std::vector<Complex> padded(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < q.size(); ++i) padded[i] = q[i];
  return NormalizedSeries(shift_up(reciprocal(Series(std::move(padded)))));
}

}  // namespace

TEST_CASE("u functional of simple maps") {
  // Koebe: U = -z^2 exactly
  const Series u = u_functional(koebe_map(64));
  CHECK(u.coeff(0) == Complex(0.0, 0.0));
  CHECK(std::abs(u.coeff(2) - Complex(-1.0, 0.0)) < 1e-12);
  for (int k = 0; k <= u.order(); ++k)
    if (k != 2) CHECK(std::abs(u.coeff(k)) < 1e-12);

  // half-plane map: U = 0
  const Series u0 = u_functional(geom_map(64));
  for (int k = 0; k <= u0.order(); ++k) CHECK(std::abs(u0.coeff(k)) < 1e-12);
}

TEST_CASE("u functional constant term vanishes") {
  std::mt19937 rng(31337u);
  for (int trial = 0; trial < 50; ++trial) {
    const Series u = u_functional(random_tame_normalized(rng, 48));
    CHECK(std::abs(u.coeff(0)) <= 1e-14);
    CHECK(u.order() == 47);
  }
}

TEST_CASE("product functional matches the rational closed form") {
  // f = g = z/(1-z): U_F = z^2 (z-3) / (1-z)^3
  const Series u = u_of_product(geom_map(64), geom_map(64));
  std::vector<Complex> cube(64, Complex(0.0, 0.0));
  cube[0] = 1.0;
  cube[1] = -3.0;
  cube[2] = 3.0;
  cube[3] = -1.0;
  const Series oracle =
      mul(Series::from_real({0.0, 0.0, -3.0, 1.0}), reciprocal(Series(std::move(cube))), 63);
  CHECK(max_coeff_dist(u, oracle) < 1e-12);
  CHECK(std::abs(eval(u, Complex(1.0 / 3.0, 0.0)) - Complex(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("decomposition agrees with the direct functional") {
  // dedicated pairing: f = z/(1-z)^2, g = z/(1-z) gives F = z(1-z)^3
  const Series via_parts = u_of_product(koebe_map(64), geom_map(64));
  std::vector<double> fc = {0.0, 1.0, -3.0, 3.0, -1.0};
  fc.resize(65, 0.0);
  const Series direct = u_functional(NormalizedSeries(Series::from_real(fc)));
  CHECK(max_coeff_dist(via_parts, direct) < 1e-10);

  // random pairs, both routes through order 63
  std::mt19937 rng(2024u);
  for (int trial = 0; trial < 100; ++trial) {
    const NormalizedSeries f = random_tame_normalized(rng, 64);
    const NormalizedSeries g = random_tame_normalized(rng, 64);
    const Series split = u_of_product(f, g);
    const Series prod = mul(shift_down(f.series()), shift_down(g.series()));
    const Series big_f = shift_up(reciprocal(prod));
    const Series whole = u_functional(NormalizedSeries(big_f));
    CHECK(max_coeff_dist(split, whole) < 1e-10);
  }
}

TEST_CASE("circle scan of polynomials") {
  // |1 + z/2| peaks at angle 0
  const UScanResult plus = max_modulus_on_circle(Series::from_real({1.0, 1.0}), 0.5, 64);
  CHECK(plus.max_modulus == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(plus.argmax_angle == 0.0);
  CHECK(plus.samples == 64);

  // |1 - z/2| peaks at angle pi, which the even grid contains exactly
  const UScanResult minus = max_modulus_on_circle(Series::from_real({1.0, -1.0}), 0.5, 64);
  CHECK(minus.max_modulus == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(minus.argmax_angle == doctest::Approx(3.14159265358979312).epsilon(1e-12));

  // peak at an off-grid angle is recovered by the refinement
  const double phase = 0.731;
  const Series rotated(
      std::vector<Complex>{Complex(1.0, 0.0), Complex(std::cos(phase), std::sin(phase))});
  const UScanResult rot = max_modulus_on_circle(rotated, 0.5, 64);
  CHECK(std::abs(rot.max_modulus - 1.5) < 1e-12);
  CHECK(std::abs(rot.argmax_angle - (2.0 * 3.14159265358979312 - phase)) < 1e-4);
}

TEST_CASE("circle scan dominates every sampled angle") {
  std::mt19937 rng(8u);
  const Series s = random_tame_normalized(rng, 32).series();
  const UScanResult scan = max_modulus_on_circle(s, 0.8, 128);
  for (int j = 0; j < scan.samples; ++j) {
    const double theta = 2.0 * 3.14159265358979312 * j / scan.samples;
    const Complex z(0.8 * std::cos(theta), 0.8 * std::sin(theta));
    CHECK(scan.max_modulus >= std::abs(eval(s, z)) - 1e-15);
  }
  CHECK(scan.argmax_angle >= 0.0);
  CHECK(scan.argmax_angle < 2.0 * 3.14159265358979312);
}

TEST_CASE("scan validates its arguments") {
  const Series s = Series::from_real({1.0, 1.0});
  CHECK_THROWS_AS(max_modulus_on_circle(s, 0.0, 64), invalid_radius);
  CHECK_THROWS_AS(max_modulus_on_circle(s, 1.0, 64), invalid_radius);
  CHECK_THROWS_AS(max_modulus_on_circle(s, 0.5, 8), std::invalid_argument);
  // odd sample counts are rounded up to keep pi on the grid
  CHECK(max_modulus_on_circle(s, 0.5, 17).samples == 18);
}

TEST_CASE("membership verdicts") {
  const NormalizedSeries koebe = koebe_map(64);
  CHECK(in_class_U(koebe, 0.9, 1.0) == Verdict::member);

  // z(1-z)^2 = z^3/(f g) for two half-plane maps; outside the class at 0.35
  std::vector<double> fc = {0.0, 1.0, -2.0, 1.0};
  fc.resize(65, 0.0);
  const NormalizedSeries zsq(Series::from_real(fc));
  CHECK(in_class_U(zsq, 0.35, 1.0) == Verdict::nonmember);

  // |U| = r^2 lands within tol of lambda = 0.5 at r = sqrt(0.5)
  CHECK(in_class_U(koebe, std::sqrt(0.5), 0.5) == Verdict::inconclusive);

  // a certified tail pushes a borderline member to inconclusive
  CHECK(in_class_U(koebe, 0.9, 1.0, 1e-9, 0.5) == Verdict::inconclusive);

  CHECK_THROWS_AS(in_class_U(koebe, 0.5, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(in_class_U(koebe, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("membership is scale covariant") {
  std::mt19937 rng(55u);
  for (int trial = 0; trial < 10; ++trial) {
    const NormalizedSeries f = random_tame_normalized(rng, 48, 0.9);
    const NormalizedSeries half(rescale(f.series(), 0.5));
    for (const double lambda : {1.0, 0.25}) {
      CHECK(in_class_U(f, 0.25, lambda) == in_class_U(half, 0.5, lambda));
    }
  }
}

TEST_CASE("classical maps stay members deep into the disk") {
  const int order = 64;
  std::vector<NormalizedSeries> family;
  std::vector<double> ident(order + 1, 0.0);
  ident[1] = 1.0;
  family.emplace_back(Series::from_real(ident));
  family.push_back(z_over({1.0, -1.0}, order));            // z/(1-z)
  family.push_back(z_over({1.0, 1.0}, order));             // z/(1+z)
  family.push_back(z_over({1.0, -2.0, 1.0}, order));       // z/(1-z)^2
  family.push_back(z_over({1.0, 2.0, 1.0}, order));        // z/(1+z)^2
  family.push_back(z_over({1.0, -1.0, 1.0}, order));       // z/(1-z+z^2)
  family.push_back(z_over({1.0, 1.0, 1.0}, order));        // z/(1+z+z^2)
  family.push_back(z_over({1.0, 0.0, -1.0}, order));       // z/(1-z^2)
  family.push_back(z_over({1.0, 0.0, 1.0}, order));        // z/(1+z^2)
  for (const NormalizedSeries& f : family) {
    CHECK(in_class_U(f, 0.99, 1.0, 1e-6) == Verdict::member);
  }
}

TEST_CASE("pair truncation tail") {
  const CoeffClass one = classes::one();
  // degree-2 majorant coefficient is 3, so the tail past order 2 is
  // uF_bound(r) - 3 r^2
  const double t2 = u_product_tail(one, one, 0.2, 2);
  CHECK(t2 == doctest::Approx(uF_bound(one, one, 0.2) - 3.0 * 0.04).epsilon(1e-12));
  // tails shrink as the kept order grows, and vanish numerically by 127
  double prev = t2;
  for (int upto : {4, 8, 16, 32, 64, 127}) {
    const double t = u_product_tail(one, one, 0.2, upto);
    CHECK(t <= prev + 1e-18);
    prev = t;
  }
  CHECK(u_product_tail(one, one, 0.33, 127) < 1e-40);
  CHECK_THROWS_AS(u_product_tail(one, one, 1.0, 16), invalid_radius);
}
