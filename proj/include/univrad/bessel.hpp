#pragma once

#include <optional>

#include "univrad/radii.hpp"
#include "univrad/series.hpp"
#include "univrad/ufunc.hpp"

namespace univrad {

/// Normalized Bessel-derived map: coefficients a_1 = 1 and
/// a_{n+1} = -a_n / (4 n (nu + n)), defined for nu > -1.
NormalizedSeries bessel_series(double nu, int order = kSharpnessOrder);

/// Which coefficient envelope the series satisfies:
///   le_1: 4^(n-1) (n-1)! (nu+1)...(nu+n-1) >= 1 for all n, i.e. |a_n| <= 1
///   le_n: 4^(n-1) n! (nu+1)...(nu+n-1) >= 1 for all n, i.e. |a_n| <= n
enum class CoeffHypothesis { le_1, le_n };

/// Checks the envelope inequality for n = 2..depth.  The left-hand side is
/// strictly increasing in n, so the n = 2 value decides; the increase is
/// verified along the way.
bool coeff_hypothesis(double nu, CoeffHypothesis kind, int depth = 64);

struct BesselParams {
  double nu = 0.0;
  bool satisfies_abs_le_1 = false;
  bool satisfies_abs_le_n = false;
};

BesselParams bessel_params(double nu, int depth = 64);

/// Bessel J_nu evaluated at 1, by its absolutely convergent series.
double j_nu_at_one(double nu);

/// Root of (2 nu - 5) J_{nu+1}(1) + 5 J_nu(1) in (-0.5, 0): the smallest
/// parameter for which the coefficient envelope (n+1)/2 is certified.
/// Pure bisection to the given bracket tolerance.
double nu_star(double tol = 1e-12);

/// Largest certified radius for F = z^3/(f_nu f_mu) over the applicable
/// catalog cases; each case is tested in both parameter orders since the
/// product is symmetric.  Empty when no envelope applies.
std::optional<RadiusResult> f_nu_mu_radius(double nu, double mu);

struct BesselVerification {
  Verdict verdict = Verdict::inconclusive;
  UScanResult scan;  // tail_bound set when an envelope certifies it
};

/// Direct check that |U_F| < 1 on |z| = r for F = z^3/(f_nu f_mu): scans
/// the truncated functional and adds the envelope tail when an envelope
/// applies to both parameters.
BesselVerification verify_bessel_membership(double nu, double mu, double r,
                                            int order = kSharpnessOrder,
                                            int samples = kDefaultSamples,
                                            double tol = kVerdictTol);

}  // namespace univrad
