#include "univrad/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "univrad/bounds.hpp"
#include "univrad/errors.hpp"

namespace univrad {

namespace {

void require_order_param(double nu) {
  if (!(nu > -1.0) || !std::isfinite(nu)) {
    throw invalid_order_param("order parameter must satisfy nu > -1");
  }
}

constexpr double kSaturation = 1e100;

}  // namespace

NormalizedSeries bessel_series(double nu, int order) {
  require_order_param(nu);
  if (order < 2) throw invalid_order_param("series order must be at least 2");
  std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
  c[1] = Complex(1.0);
  double a = 1.0;
  for (int n = 1; n < order; ++n) {
    a /= -4.0 * n * (nu + n);
    c[static_cast<size_t>(n) + 1] = Complex(a);
  }
  return NormalizedSeries(Series(std::move(c)));
}

bool coeff_hypothesis(double nu, CoeffHypothesis kind, int depth) {
  require_order_param(nu);
  if (depth < 2) throw std::invalid_argument("hypothesis depth must be >= 2");
  double lhs = (kind == CoeffHypothesis::le_1 ? 4.0 : 8.0) * (nu + 1.0);
  bool ok = lhs >= 1.0;
  double prev = lhs;
  for (int n = 3; n <= depth && ok; ++n) {
    const double factor = kind == CoeffHypothesis::le_1
                              ? 4.0 * (n - 1.0) * (nu + n - 1.0)
                              : 4.0 * n * (nu + n - 1.0);
    lhs *= factor;
    if (lhs >= kSaturation) return true;  // factors only grow from here
    if (!(lhs > prev)) {
      throw std::logic_error("envelope left-hand side failed to increase");
    }
    prev = lhs;
    ok = lhs >= 1.0;
  }
  return ok;
}

BesselParams bessel_params(double nu, int depth) {
  BesselParams p;
  p.nu = nu;
  p.satisfies_abs_le_1 = coeff_hypothesis(nu, CoeffHypothesis::le_1, depth);
  p.satisfies_abs_le_n = coeff_hypothesis(nu, CoeffHypothesis::le_n, depth);
  if (p.satisfies_abs_le_1 && !p.satisfies_abs_le_n) {
    throw std::logic_error("unit envelope must imply the linear envelope");
  }
  return p;
}

double j_nu_at_one(double nu) {
  require_order_param(nu);
  double term = std::exp2(-nu) / std::tgamma(nu + 1.0);
  double sum = term;
  for (int m = 1; m < 64; ++m) {
    term /= -4.0 * m * (nu + m);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double nu_star(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  auto h = [](double nu) {
    return (2.0 * nu - 5.0) * j_nu_at_one(nu + 1.0) + 5.0 * j_nu_at_one(nu);
  };
  double lo = -0.5, hi = 0.0;
  double flo = h(lo);
  const double fhi = h(hi);
  if (!(flo < 0.0) || !(fhi > 0.0)) {
    throw no_sign_change("threshold bracket does not straddle a root");
  }
  while (hi - lo > std::max(tol, 4.0 * kUnitThreshold)) {
    const double mid = 0.5 * (lo + hi);
    const double fm = h(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<RadiusResult> f_nu_mu_radius(double nu, double mu) {
  require_order_param(nu);
  require_order_param(mu);
  const BesselParams pn = bessel_params(nu);
  const BesselParams pm = bessel_params(mu);
  const double threshold = nu_star();
  const bool conv_n = nu >= threshold;
  const bool conv_m = mu >= threshold;

  std::vector<RadiusResult> applicable;
  if (pn.satisfies_abs_le_1 && pm.satisfies_abs_le_1) {
    applicable.push_back(dedicated_radius(Case::T1a));
  }
  if ((pn.satisfies_abs_le_n && pm.satisfies_abs_le_1) ||
      (pm.satisfies_abs_le_n && pn.satisfies_abs_le_1)) {
    applicable.push_back(dedicated_radius(Case::T1b));
  }
  if (pn.satisfies_abs_le_n && pm.satisfies_abs_le_n) {
    applicable.push_back(dedicated_radius(Case::T1c));
  }
  if ((conv_n && pm.satisfies_abs_le_1) || (conv_m && pn.satisfies_abs_le_1)) {
    applicable.push_back(dedicated_radius(Case::T3a));
  }
  if ((conv_n && pm.satisfies_abs_le_n) || (conv_m && pn.satisfies_abs_le_n)) {
    applicable.push_back(dedicated_radius(Case::T3b));
  }
  if (applicable.empty()) return std::nullopt;
  size_t best = 0;
  for (size_t i = 1; i < applicable.size(); ++i) {
    if (applicable[i].value > applicable[best].value) best = i;
  }
  return applicable[best];
}

BesselVerification verify_bessel_membership(double nu, double mu, double r,
                                            int order, int samples,
                                            double tol) {
  const NormalizedSeries f = bessel_series(nu, order);
  const NormalizedSeries g = bessel_series(mu, order);
  const Series u = u_of_product(f, g);

  BesselVerification out;
  out.scan = max_modulus_on_circle(u, r, samples);

  auto envelope = [](const BesselParams& p) -> std::optional<CoeffClass> {
    if (p.satisfies_abs_le_1) return classes::one();
    if (p.satisfies_abs_le_n) return classes::n();
    return std::nullopt;
  };
  const auto cf = envelope(bessel_params(nu));
  const auto cg = envelope(bessel_params(mu));
  if (cf && cg) {
    out.scan.tail_bound = u_product_tail(*cf, *cg, r, u.order());
  }
  out.verdict = classify_scan(out.scan, 1.0, tol);
  return out;
}

}  // namespace univrad
