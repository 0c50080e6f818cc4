#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cwsphere/lattice.hpp"
#include "cwsphere/polynomial.hpp"
#include "cwsphere/sphere.hpp"

namespace cwsphere {

/// f(a) is stored at index a - 1; values are nonzero integers.
using SignedFunction = std::vector<int>;

/// Enumeration guard: (2m)^n functions at most.
inline constexpr std::int64_t kMaxEnrichedFunctions = 100'000'000;

/// Strict order -1 < 1 < -2 < 2 < ... on nonzero integers.
inline bool precedes(int u, int v) {
  const int au = u < 0 ? -u : u;
  const int av = v < 0 ? -v : v;
  return au != av ? au < av : (u < 0 && v > 0);
}
inline bool precedes_eq(int u, int v) { return u == v || precedes(u, v); }

struct EnrichedCheck {
  bool ok = true;
  /// 1 or 2 for the failing condition, 0 for a malformed input.
  int condition = 0;
  Subset set;
  int element = 0;
  std::string message;
};

/// Both defining conditions over every closed set and every negative value.
EnrichedCheck check_enriched_extremal(const ClosedSetLattice& lattice, const SignedFunction& f);
inline bool is_enriched_extremal(const ClosedSetLattice& lattice, const SignedFunction& f) {
  return check_enriched_extremal(lattice, f).ok;
}

/// Exhaustive count over [n] -> +-[m]. Throws ResourceLimit above the guard.
std::int64_t count_enriched(const ClosedSetLattice& lattice, int m);
/// Same filter, listed in lexicographic order of (f(1), ..., f(n)) with values -m..-1, 1..m.
std::vector<SignedFunction> list_enriched(const ClosedSetLattice& lattice, int m);

namespace serial {
std::int64_t count_enriched(const ClosedSetLattice& lattice, int m);
}  // namespace serial

/// (A_0, e_0) >= (A_1, e_1) >= ... >= (A_m, e_m) with A_0 = [n] and A_m = {}.
using Multichain = std::vector<SignedElement>;

/// Throws NotAMultichain.
SignedFunction multichain_to_function(const QPoset& q, const Multichain& chain);
/// Throws NotExtremal, InvalidArgument when a value exceeds m.
Multichain function_to_multichain(const QPoset& q, const SignedFunction& f, int m);

struct EnrichedRow {
  int m = 0;
  std::int64_t expected = 0;  // Zbar(Q_L, m), or 2 Z(Q_L, m) for the extension rows
  std::int64_t count = 0;
  bool match() const { return expected == count; }
};

struct EnrichedReport {
  std::vector<EnrichedRow> zbar_rows;
  std::vector<EnrichedRow> extension_rows;
  /// expected = 2 Z(Q_L, m), count = Zbar(Q_L', m) for the one-point extension L'.
  std::vector<EnrichedRow> extension_zbar_rows;
  bool holds() const;
};

/// Zbar(Q_L, m) = #enriched extremal functions on [n], and 2 Z(Q_L, m) = the
/// count on the one-point extension, for m = 1..m_max.
EnrichedReport verify_prop_enriched(const ClosedSetLattice& lattice, int m_max);

struct HIdentityReport {
  int exponent = 0;              // n + 2
  RationalPolynomial numerator;  // sum_j c_j t^j (1 - t)^(exponent - 1 - j)
  RationalPolynomial t_h;        // t * h(t) of +-Delta
  bool exact = false;
  bool series = false;
  /// The same series test with (1 - t)^(n + 1) in the denominator.
  bool series_with_n_plus_1 = false;
  bool holds() const { return exact && series; }
};

/// sum_m Z(Q_L, m) t^m = t h(t) / (1 - t)^(n + 2), exactly and by expansion to degree n + 2.
HIdentityReport verify_h_identity(const QPoset& q, const SimplicialComplex& pm_delta);

struct ReciprocityReport {
  bool z = false;     // Z(-t) = (-1)^(n+1) Z(t)
  bool zbar = false;  // Zbar(-t) = (-1)^n Zbar(t)
  bool holds() const { return z && zbar; }
};
ReciprocityReport verify_self_reciprocity(const QPoset& q);

}  // namespace cwsphere
