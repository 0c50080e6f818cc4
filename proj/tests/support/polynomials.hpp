#pragma once

#include <string>
#include <vector>

#include "cwsphere/polynomial.hpp"

namespace cwsphere::testing {

struct FactoredPolynomial {
  std::string name;
  RationalPolynomial polynomial;
  /// Known from the factorization: true iff no irreducible quadratic factor.
  bool real_rooted;
  /// Distinct real roots, from the factorization.
  int distinct_real_roots;
};

/// Twenty polynomials built from explicit linear and quadratic factors; a quadratic
/// factor is real-rooted iff its discriminant is nonnegative.
std::vector<FactoredPolynomial> real_root_suite();

}  // namespace cwsphere::testing
