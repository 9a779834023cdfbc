#pragma once

#include "univrad/bounds.hpp"
#include "univrad/report.hpp"

namespace univrad {

struct Options {
  int trunc = 128;     // series truncation order
  int samples = 4096;  // circle scan resolution
  double tol = 1e-12;  // root solver / verdict tolerance
  bool strict = false;
};

/// All nine catalog cases: dedicated radius vs the generic bound solver.
Report cmd_radii(const Options& opts);

/// Extremal pair per case: |F'| at the critical radius and the univalence
/// floor just inside it.
Report cmd_sharpness(const Options& opts);

/// Pair bound sampled on [r_min, r_max] (steps points, both ends
/// included), with the crossing of 1 flagged.
Report cmd_scan(const CoeffClass& f_cls, const CoeffClass& g_cls, double r_min, double r_max,
                int steps, const Options& opts);

Report cmd_bessel_nu_star(const Options& opts);
Report cmd_bessel_thresholds(const Options& opts);
Report cmd_bessel_radius(double nu, double mu, const Options& opts);
Report cmd_bessel_verify(double nu, double mu, double r, const Options& opts);

/// True when the report contains an outcome --strict treats as a failure:
/// a no_crossing method, an inconclusive verdict, or an inapplicable
/// radius request.
bool strict_failure(const Report& r);

}  // namespace univrad
