#include "univrad/ufunc.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace univrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_open_unit(double r) {
  if (!(r > 0.0) || r >= 1.0) throw invalid_radius("scan: r must lie in (0, 1)");
}

// h/z - 1 for normalized h, as a series of order(h) - 1.
Series dist_part(const Series& q) {
  std::vector<Complex> c = q.coeffs();
  c[0] -= 1.0;
  return Series(std::move(c));
}

// h/z - z (h/z)' - 1 for normalized h: degree-k coefficient (1-k) q_k.
Series resid_part(const Series& q) {
  std::vector<Complex> c(q.coeffs().size());
  for (int k = 1; k <= q.order(); ++k)
    c[static_cast<std::size_t>(k)] = (1.0 - static_cast<double>(k)) * q.coeff(k);
  return Series(std::move(c));
}

}  // namespace

Series u_functional(const NormalizedSeries& f) {
  const Series q = shift_down(f.series());  // f/z
  const Series w = reciprocal(q);           // z/f
  Series u = mul(mul(derivative(f.series()), w), w);
  std::vector<Complex> c = u.coeffs();
  c[0] -= 1.0;
  return Series(std::move(c));
}

Series u_of_product(const NormalizedSeries& f, const NormalizedSeries& g) {
  const Series qf = shift_down(f.series());
  const Series qg = shift_down(g.series());
  const Series term = add(mul(qg, resid_part(qf)), mul(qf, resid_part(qg)));
  return sub(term, mul(dist_part(qf), dist_part(qg)));
}

UScanResult max_modulus_on_circle(const Series& s, double r, int samples) {
  require_open_unit(r);
  if (samples < 16) throw std::invalid_argument("scan: need at least 16 samples");
  const int count = samples % 2 == 0 ? samples : samples + 1;

  auto modulus_at = [&](double theta) {
    return std::abs(eval(s, Complex(r * std::cos(theta), r * std::sin(theta))));
  };

  double best = -1.0;
  double best_angle = 0.0;
  for (int j = 0; j < count; ++j) {
    const double theta = kTwoPi * j / count;
    const double m = modulus_at(theta);
    if (m > best) {
      best = m;
      best_angle = theta;
    }
  }

  // ternary refinement around the best grid angle
  double lo = best_angle - kTwoPi / count;
  double hi = best_angle + kTwoPi / count;
  while (hi - lo > 1e-13) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (modulus_at(m1) < modulus_at(m2))
      lo = m1;
    else
      hi = m2;
  }
  const double refined_angle = 0.5 * (lo + hi);
  const double refined = modulus_at(refined_angle);

  UScanResult out;
  out.radius = r;
  out.samples = count;
  // keep the grid angle unless the refinement improves beyond rounding noise
  if (refined - best > 4e-13 * std::max(1.0, best)) {
    out.max_modulus = refined;
    out.argmax_angle = std::fmod(refined_angle + kTwoPi, kTwoPi);
  } else {
    out.max_modulus = best;
    out.argmax_angle = best_angle;
  }
  return out;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::member: return "member";
    case Verdict::nonmember: return "nonmember";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

Verdict classify_scan(const UScanResult& scan, double lambda, double tol) {
  if (!(lambda > 0.0) || lambda > 1.0)
    throw std::invalid_argument("classify: lambda must lie in (0, 1]");
  const double tail = scan.tail_bound.value_or(0.0);
  if (scan.max_modulus + tail < lambda - tol) return Verdict::member;
  if (scan.max_modulus > lambda + tol) return Verdict::nonmember;
  return Verdict::inconclusive;
}

Verdict in_class_U(const NormalizedSeries& f, double r, double lambda, double tol,
                   std::optional<double> tail, int samples) {
  UScanResult scan = max_modulus_on_circle(u_functional(f), r, samples);
  scan.tail_bound = tail;
  return classify_scan(scan, lambda, tol);
}

double u_product_tail(const CoeffClass& f_cls, const CoeffClass& g_cls, double r, int upto) {
  require_open_unit(r);
  if (upto < 1) throw std::invalid_argument("u_product_tail: upto must be >= 1");

  // Majorant series with degree-k coefficient A_{k+1}: their pair
  // combination dominates U_F coefficient-by-coefficient and sums to the
  // closed-form pair bound at radius r.
  auto majorants = [upto](const CoeffClass& cls) {
    std::vector<Complex> d(static_cast<std::size_t>(upto) + 1);
    for (int k = 1; k <= upto; ++k)
      d[static_cast<std::size_t>(k)] = coeff_value(cls, k + 1);
    Series dist(std::move(d));
    Series mod = add(dist, Series::from_real({1.0}));
    return std::pair<Series, Series>(std::move(dist), std::move(mod));
  };
  auto [dist_f, mod_f] = majorants(f_cls);
  auto [dist_g, mod_g] = majorants(g_cls);
  auto resid_of = [upto](const Series& dist) {
    std::vector<Complex> c(static_cast<std::size_t>(upto) + 1);
    for (int k = 2; k <= upto; ++k)
      c[static_cast<std::size_t>(k)] = (static_cast<double>(k) - 1.0) * dist.coeff(k);
    return Series(std::move(c));
  };
  const Series total = add(add(mul(mod_g, resid_of(dist_f), upto), mul(mod_f, resid_of(dist_g), upto)),
                           mul(dist_f, dist_g, upto));
  const double partial = eval(total, Complex(r, 0.0)).real();
  const double tail = uF_bound(f_cls, g_cls, r) - partial;
  return tail > 0.0 ? tail : 0.0;
}

}  // namespace univrad
