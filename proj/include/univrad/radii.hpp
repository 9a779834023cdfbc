#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "univrad/bounds.hpp"
#include "univrad/errors.hpp"

namespace univrad {

/// The nine coefficient-class pairings with certified critical radii.
/// The letter groups the class of f (ONE / N / HALF_N_PLUS_1 rows), the
/// digit the class of g; see case_classes for the exact pairing.
enum class Case { T1a, T1b, T1c, T2a, T2b, T2c, T3a, T3b, T3c };

inline constexpr std::array<Case, 9> kAllCases = {Case::T1a, Case::T1b, Case::T1c,
                                                  Case::T2a, Case::T2b, Case::T2c,
                                                  Case::T3a, Case::T3b, Case::T3c};

std::string_view case_name(Case c);
Case case_from_name(std::string_view name);  // throws unknown_case

/// Coefficient classes (for f and for g) whose pair bound defines the case.
std::pair<CoeffClass, CoeffClass> case_classes(Case c);

enum class RadiusMethod { closed_form, root_found, no_crossing };

std::string_view method_name(RadiusMethod m);

struct RadiusResult {
  double value = 0.0;
  RadiusMethod method = RadiusMethod::root_found;
  double residual = 0.0;      // |defining function| at value (0 for closed forms)
  std::string case_id;
  bool multiple_crossings = false;  // scan saw more than one sign change
};

/// Exact critical radius for the five algebraically solvable cases:
/// 1/3, 1/4, 1/5, (4-sqrt(10))/3, (5-sqrt(17))/4.  Throws unknown_case
/// for the four transcendental ones.
RadiusResult closed_form_radius(Case c);

/// Defining functions of the four transcendental critical radii; each has
/// a single sign change in (0, 1).  Signs follow the defining equations:
///   phi1(r) = 2r - 3 + (2(3r-2)/r) log(1-r)
///   phi2(r) = 3(1-r) - (4(2r-1)/r) log(1-r)
///   phi3(r) = (5-r)/(1-r) + (6/r) log(1-r)
///   psi(r)  = (r-3)(1-r) - ((4-9r+3r^2)/r) log(1-r)
double phi1(double r);
double phi2(double r);
double phi3(double r);
double psi(double r);

inline constexpr double kRootTol = 1e-12;

/// Bracketed root finder: bisection with a secant acceleration step, the
/// bracket is never abandoned.  Requires fn(lo) and fn(hi) of opposite
/// sign (else no_sign_change) and stops once the bracket is narrower than
/// tol and |fn| at the returned point is below tol (or the bracket hits
/// machine resolution).
RadiusResult root_in_unit_interval(const std::function<double(double)>& fn, double lo, double hi,
                                   double tol = kRootTol, std::string case_id = "");

/// Critical radius of a catalog case: closed form where available,
/// otherwise the root of its defining function solved to tol.
RadiusResult dedicated_radius(Case c, double tol = kRootTol);

/// First radius where the pair bound reaches 1, for any valid class pair:
/// scans outward in steps of 1e-3, then solves in the bracketing cell.  If
/// the bound stays below 1 on (0, 1 - 1e-6) the result carries value
/// 1 - 1e-6 and method no_crossing; extra sign changes on the scan grid
/// set multiple_crossings.
RadiusResult radius_from_bound(const CoeffClass& f_cls, const CoeffClass& g_cls,
                               double tol = kRootTol);

}  // namespace univrad
