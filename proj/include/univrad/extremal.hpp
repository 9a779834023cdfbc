#pragma once

#include <functional>

#include "univrad/radii.hpp"
#include "univrad/series.hpp"

namespace univrad {

/// Witness pair saturating a catalog case: the coefficients of f and g
/// meet their class envelopes with equality, so the critical radius of
/// F = z^3/(f g) is exactly the catalog radius.
struct ExtremalPair {
  Case case_id;
  NormalizedSeries f;
  NormalizedSeries g;
  RadiusResult radius;  // refined critical radius for the case
  std::function<double(double)> closed_form_fprime;  // F' on the real axis
};

/// Build the witness pair of a case at the given truncation order.
ExtremalPair build_extremal(Case c, int order = kSharpnessOrder);

/// F = z^3/(f g) as a normalized series: z times the reciprocal of
/// (f/z)(g/z).
NormalizedSeries F_of_pair(const ExtremalPair& pair);

/// |F'| at the refined critical radius, evaluated through the series
/// route.  Requires the pair to be built at order >= kSharpnessOrder.
double sharpness_check(const ExtremalPair& pair);

/// Minimum of |F'| over a grid x grid polar net with radii up to r
/// (r must stay below the critical radius).  Positive values certify
/// local univalence on the sampled net.
double local_univalence_floor(const ExtremalPair& pair, double r, int grid = 64);

}  // namespace univrad
