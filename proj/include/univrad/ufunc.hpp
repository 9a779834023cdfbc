#pragma once

#include <optional>
#include <string_view>

#include "univrad/bounds.hpp"
#include "univrad/series.hpp"

namespace univrad {

inline constexpr int kDefaultSamples = 4096;
inline constexpr double kVerdictTol = 1e-9;

/// U_f = f'(z) (z/f(z))^2 - 1 as a series of order(f) - 1.  The constant
/// term vanishes exactly for normalized input.
Series u_functional(const NormalizedSeries& f);

/// The same functional for F = z^3/(f g), computed without forming F:
///   U_F = (g/z) P_f + (f/z) P_g - D_f D_g
/// where D_h = h/z - 1 and P_h = h/z - z (h/z)' - 1.
Series u_of_product(const NormalizedSeries& f, const NormalizedSeries& g);

struct UScanResult {
  double radius = 0.0;
  double max_modulus = 0.0;
  double argmax_angle = 0.0;  // in [0, 2*pi)
  int samples = 0;
  std::optional<double> tail_bound;  // truncation tail, when certified
};

/// Maximum of |s| over the circle |z| = r: a uniform angle grid (always
/// containing 0 and pi; an odd sample count is rounded up) followed by one
/// ternary refinement around the best grid angle.  The refinement never
/// reports less than the best sampled value, and grid angles win ties.
UScanResult max_modulus_on_circle(const Series& s, double r, int samples = kDefaultSamples);

enum class Verdict { member, nonmember, inconclusive };

std::string_view verdict_name(Verdict v);

/// member     if max + tail < lambda - tol,
/// nonmember  if max > lambda + tol,
/// inconclusive otherwise (tail taken as 0 when absent).
Verdict classify_scan(const UScanResult& scan, double lambda, double tol = kVerdictTol);

/// Does f stay within |U_f| < lambda on |z| <= r?  Scans U_f on the circle
/// of radius r; a caller-supplied tail bound makes the member verdict
/// account for coefficients beyond the truncation.
Verdict in_class_U(const NormalizedSeries& f, double r, double lambda, double tol = kVerdictTol,
                   std::optional<double> tail = std::nullopt, int samples = kDefaultSamples);

/// Bound on the part of U_F beyond series order `upto` at radius r, valid
/// whenever |a_n| <= A_n(f_cls) and |b_n| <= A_n(g_cls): the difference
/// between the closed-form pair bound and the same majorant summed only
/// through degree `upto`.
double u_product_tail(const CoeffClass& f_cls, const CoeffClass& g_cls, double r, int upto);

}  // namespace univrad
