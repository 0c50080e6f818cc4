#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cwsphere/lattice.hpp"
#include "cwsphere/poset.hpp"

namespace cwsphere {

/// Sequence of positive parts; ordered lexicographically.
using Composition = std::vector<int>;

/// "2.1.1"
std::string composition_key(const Composition& c);
/// Parses "2.1.1"; throws ParseError.
Composition parse_composition(const std::string& key);

/// Homogeneous quasisymmetric function held in monomial coordinates.
struct FlagQSym {
  int degree = 0;
  std::map<Composition, std::int64_t> coeffs;

  std::int64_t coefficient(const Composition& c) const;
  FlagQSym scaled(std::int64_t k) const;
  friend bool operator==(const FlagQSym&, const FlagQSym&) = default;
};

struct QSymMismatch {
  Composition composition;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

/// Every composition whose coefficients differ (zero entries included).
std::vector<QSymMismatch> qsym_diff(const FlagQSym& lhs, const FlagQSym& rhs);

/// Chains 0 = t_0 < ... < t_k = 1 counted by rank jumps. Throws No0Hat, No1Hat.
FlagQSym flag_f(const GradedPoset& p);
/// Chains weighted by prod nu([t_{i-1}, t_i]).
FlagQSym theta_of_poset(const GradedPoset& p);

namespace serial {
FlagQSym theta_of_poset(const GradedPoset& p);
}  // namespace serial

struct MainTheoremReport {
  bool holds = false;
  FlagQSym lhs;  // 2 F of Q for L*
  FlagQSym rhs;  // theta(F of L* with a new minimum)
  std::vector<QSymMismatch> mismatches;
};

/// Compares 2 F_{Q_{L*}} with theta(F_{L* + 0}) where L* is the join-distributive
/// orientation of the closed sets.
MainTheoremReport verify_main_theorem(const ClosedSetLattice& lattice);

}  // namespace cwsphere
