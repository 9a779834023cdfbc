#include "univrad/series.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

namespace univrad {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

Series::Series(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series: empty coefficient list");
  for (const Complex& c : coeffs_) {
    if (!finite(c)) throw std::invalid_argument("series: non-finite coefficient");
  }
}

Series Series::zero(int order) {
  if (order < 0) throw std::invalid_argument("series: negative order");
  return Series(std::vector<Complex>(static_cast<std::size_t>(order) + 1));
}

Series Series::from_real(const std::vector<double>& coeffs) {
  std::vector<Complex> c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = Complex(coeffs[i], 0.0);
  return Series(std::move(c));
}

Complex Series::coeff(int n) const {
  if (n < 0 || n > order()) return Complex(0.0, 0.0);
  return coeffs_[static_cast<std::size_t>(n)];
}

NormalizedSeries::NormalizedSeries(Series s) : series_(std::move(s)) {
  if (!is_normalized(series_))
    throw std::invalid_argument("normalized series: requires c0 = 0 and c1 = 1 exactly");
}

bool is_normalized(const Series& s) {
  return s.order() >= 1 && s.coeff(0) == Complex(0.0, 0.0) && s.coeff(1) == Complex(1.0, 0.0);
}

Series add(const Series& s, const Series& t) {
  const int n = std::max(s.order(), t.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = s.coeff(k) + t.coeff(k);
  return Series(std::move(c));
}

Series sub(const Series& s, const Series& t) {
  const int n = std::max(s.order(), t.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = s.coeff(k) - t.coeff(k);
  return Series(std::move(c));
}

Series scale(const Series& s, Complex factor) {
  std::vector<Complex> c = s.coeffs();
  for (Complex& x : c) x *= factor;
  return Series(std::move(c));
}

Series mul(const Series& s, const Series& t, int target_order) {
  const int n = target_order < 0 ? std::min(s.order(), t.order()) : target_order;
  if (target_order < -1) throw std::invalid_argument("mul: bad target order");
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    Complex acc(0.0, 0.0);
    const int lo = std::max(0, m - t.order());
    const int hi = std::min(m, s.order());
    for (int i = lo; i <= hi; ++i) acc += s.coeff(i) * t.coeff(m - i);
    c[static_cast<std::size_t>(m)] = acc;
  }
  return Series(std::move(c));
}

Series reciprocal(const Series& s) {
  const Complex c0 = s.coeff(0);
  if (std::abs(c0) < kUnitThreshold)
    throw zero_constant_term("reciprocal: constant term below threshold");
  const int n = s.order();
  std::vector<Complex> t(static_cast<std::size_t>(n) + 1);
  t[0] = 1.0 / c0;
  for (int m = 1; m <= n; ++m) {
    Complex acc(0.0, 0.0);
    for (int k = 1; k <= m; ++k) acc += s.coeff(k) * t[static_cast<std::size_t>(m - k)];
    t[static_cast<std::size_t>(m)] = -acc / c0;
  }
  return Series(std::move(t));
}

Series derivative(const Series& s) {
  if (s.order() == 0) return Series::zero(0);
  std::vector<Complex> c(static_cast<std::size_t>(s.order()));
  for (int k = 1; k <= s.order(); ++k)
    c[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * s.coeff(k);
  return Series(std::move(c));
}

Complex eval(const Series& s, Complex z) {
  Complex acc = s.coeff(s.order());
  for (int k = s.order() - 1; k >= 0; --k) acc = acc * z + s.coeff(k);
  return acc;
}

Series rescale(const Series& s, double r) {
  if (!(r > 0.0) || r > 1.0) throw invalid_radius("rescale: r must lie in (0, 1]");
  const bool normalized = is_normalized(s);
  std::vector<Complex> c(s.coeffs());
  double p = normalized ? 1.0 / r : 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] *= p;
    p *= r;
  }
  return Series(std::move(c));
}

Series log_one_minus(int order) {
  if (order < 1) throw std::invalid_argument("log_one_minus: order must be >= 1");
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n)
    c[static_cast<std::size_t>(n)] = Complex(1.0 / static_cast<double>(n), 0.0);
  return Series(std::move(c));
}

Series shift_down(const Series& s) {
  if (std::abs(s.coeff(0)) > kUnitThreshold)
    throw std::invalid_argument("shift_down: constant term must vanish");
  if (s.order() == 0) return Series::zero(0);
  std::vector<Complex> c(s.coeffs().begin() + 1, s.coeffs().end());
  return Series(std::move(c));
}

Series shift_up(const Series& s) {
  std::vector<Complex> c(s.coeffs().size() + 1);
  for (std::size_t k = 0; k < s.coeffs().size(); ++k) c[k + 1] = s.coeffs()[k];
  return Series(std::move(c));
}

}  // namespace univrad
