#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "univrad/errors.hpp"

namespace univrad {

/// Coefficient envelope A_n = a + b/n + c*n (n >= 2): a normalized
/// function belongs to the class when |a_n| <= A_n for every n >= 2.
/// Valid classes have A_2 > 0 and c >= 0.
struct CoeffClass {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  std::string name;  // preset label, or empty for ad hoc triples
};

CoeffClass coeff_class(double a, double b, double c, std::string name = "");

/// Envelope value A_n.
double coeff_value(const CoeffClass& cls, int n);

namespace classes {
CoeffClass one();            // A_n = 1
CoeffClass n();              // A_n = n
CoeffClass two_over_n();     // A_n = 2/n
CoeffClass half_n_plus_1();  // A_n = (n+1)/2
CoeffClass k1_alpha(double alpha);  // A_n = 2(1-alpha)/n, alpha in [0,1)
}  // namespace classes

/// Preset lookup by name ("ONE", "N", "TWO_OVER_N", "HALF_N_PLUS_1",
/// "K1_ALPHA:<alpha>") or an ad hoc "a,b,c" triple.
std::optional<CoeffClass> parse_class(std::string_view text);

/// sum_{n>=2} A_n r^(n-1): bound on |f(z)/z - 1| over |z| <= r.
/// Closed form -(a+b+c) + a/(1-r) - (b/r)log(1-r) + c/(1-r)^2; the
/// removable singularity at r = 0 evaluates to 0.
double dist_bound(const CoeffClass& cls, double r);

/// 1 + dist_bound: bound on |f(z)/z| over |z| <= r.
double mod_bound(const CoeffClass& cls, double r);

/// sum_{n>=3} (n-2) A_n r^(n-1): bound on |f/z - z(f/z)' - 1| over
/// |z| <= r, in closed form.
double resid_bound(const CoeffClass& cls, double r);

/// Bound on the univalence functional of z^3/(f g) for f in the first
/// class and g in the second:
///   mod(G) resid(F) + mod(F) resid(G) + dist(F) dist(G).
/// Symmetric in the two classes and increasing in r.
double uF_bound(const CoeffClass& f_cls, const CoeffClass& g_cls, double r);

/// Truncation tail sum_{n>upto} A_n r^(n-1) (closed form minus partial
/// sum, clamped at zero).
double coeff_tail(const CoeffClass& cls, double r, int upto);

/// log(1-r)/r, switching to an 8-term Taylor polynomial for r < 1e-4.
double log1m_over_r(double r);

}  // namespace univrad
