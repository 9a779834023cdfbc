#pragma once

#include <stdexcept>
#include <string>

namespace univrad {

// Reciprocal (or a quotient built on it) hit a constant term below the
// safe threshold; the series does not represent an invertible unit.
struct zero_constant_term : std::domain_error {
  explicit zero_constant_term(const std::string& what) : std::domain_error(what) {}
};

// Radius argument outside the domain required by the operation.
struct invalid_radius : std::domain_error {
  explicit invalid_radius(const std::string& what) : std::domain_error(what) {}
};

// Case label not in the catalog.
struct unknown_case : std::invalid_argument {
  explicit unknown_case(const std::string& what) : std::invalid_argument(what) {}
};

// Bracketed solver was given endpoints with equal signs.
struct no_sign_change : std::runtime_error {
  explicit no_sign_change(const std::string& what) : std::runtime_error(what) {}
};

// Order-type parameter outside its domain (e.g. Bessel order <= -1).
struct invalid_order_param : std::domain_error {
  explicit invalid_order_param(const std::string& what) : std::domain_error(what) {}
};

}  // namespace univrad
