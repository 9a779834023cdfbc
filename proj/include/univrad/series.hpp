#pragma once

#include <complex>
#include <vector>

#include "univrad/errors.hpp"

namespace univrad {

using Complex = std::complex<double>;

// Default truncation orders: kDefaultOrder for series algebra, the larger
// kSharpnessOrder wherever a derivative is evaluated near a critical radius.
inline constexpr int kDefaultOrder = 64;
inline constexpr int kSharpnessOrder = 128;

// Constant terms smaller than this are treated as zero when inverting.
inline constexpr double kUnitThreshold = 1e-14;

/// Truncated power series c0 + c1 z + ... + cN z^N with complex
/// coefficients.  The truncation order N is len(coeffs) - 1 and every
/// coefficient must be finite.
class Series {
 public:
  explicit Series(std::vector<Complex> coeffs);

  static Series zero(int order);
  static Series from_real(const std::vector<double>& coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// Coefficient of z^n; zero beyond the truncation order.
  Complex coeff(int n) const;

 private:
  std::vector<Complex> coeffs_;
};

/// A series with c0 = 0 and c1 = 1 exactly (f(0) = 0, f'(0) = 1).
class NormalizedSeries {
 public:
  explicit NormalizedSeries(Series s);

  const Series& series() const { return series_; }
  int order() const { return series_.order(); }
  Complex coeff(int n) const { return series_.coeff(n); }

 private:
  Series series_;
};

bool is_normalized(const Series& s);

/// Coefficient-wise sum; result order is the larger of the two orders.
Series add(const Series& s, const Series& t);

/// Coefficient-wise difference; result order is the larger of the two.
Series sub(const Series& s, const Series& t);

/// Multiply every coefficient by a constant.
Series scale(const Series& s, Complex factor);

/// Cauchy product.  Truncated at min(order(s), order(t)) unless a
/// target order is supplied; coefficients beyond either truncation are
/// treated as zero.
Series mul(const Series& s, const Series& t, int target_order = -1);

/// Multiplicative inverse 1/s to the same order, by the recursive
/// convolution t0 = 1/c0, tn = -(1/c0) * sum_{k=1..n} ck t(n-k).
/// Throws zero_constant_term when |c0| < kUnitThreshold.
Series reciprocal(const Series& s);

/// Termwise derivative; order drops by one (a constant maps to zero).
Series derivative(const Series& s);

/// Horner evaluation at a complex point.
Complex eval(const Series& s, Complex z);

/// Coefficients cn * r^n, i.e. the series of s(rz), for r in (0, 1].
/// When s is normalized the result is divided by r once more (cn * r^(n-1),
/// the series of r^-1 s(rz)) so that normalization is preserved.
Series rescale(const Series& s, double r);

/// Series of log(1/(1-z)) = sum_{n>=1} z^n / n, truncated at the given
/// order (coefficients are +1/n).
Series log_one_minus(int order);

/// Divide by z.  Requires a vanishing constant term.
Series shift_down(const Series& s);

/// Multiply by z; order grows by one.
Series shift_up(const Series& s);

}  // namespace univrad
