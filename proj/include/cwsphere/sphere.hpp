#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cwsphere/complex.hpp"
#include "cwsphere/lattice.hpp"

namespace cwsphere {

/// Practical cap on n for the sphere constructions.
inline constexpr int kMaxSphereGroundSet = 8;

/// Canonical representative of the class of (A, eps): signs are kept only on
/// ext(A). `negative` is the set of extreme points with sign -1.
struct SignedElement {
  Subset set;
  Subset extreme;
  Subset negative;

  /// Canonicalize an arbitrary sign pattern (given by its negative set) onto ext(A).
  static SignedElement make(const ClosedSetLattice& lattice, Subset set, Subset negative_any);

  /// (A, eps) <= (B, delta) iff A subset of B and eps, delta agree on ext(A) & ext(B).
  bool below(const SignedElement& other) const {
    Subset common = extreme & other.extreme;
    return set.subset_of(other.set) && (negative & common) == (other.negative & common);
  }
  int sign(int i) const { return negative.contains(i) ? -1 : 1; }

  /// "{1,2,3}[+1,-3]"; signs listed for ext(A) only. The bottom is "{}[]".
  std::string label() const;

  friend bool operator==(const SignedElement&, const SignedElement&) = default;
};

/// The poset Q_L in the meet-distributive orientation: 0 = ({}, {}), proper
/// elements (A, eps) ranked |A|, and a formal 1 of rank n + 1 labelled "1^".
/// Poset element i is elements()[i] for i < size() - 1; the last element is 1.
class QPoset {
 public:
  explicit QPoset(const ClosedSetLattice& lattice);

  const ClosedSetLattice& lattice() const { return lattice_; }
  const GradedPoset& poset() const { return poset_; }
  /// Signed elements including the bottom (index 0); the top has no signed element.
  const std::vector<SignedElement>& elements() const { return elements_; }
  const SignedElement& element(int i) const { return elements_[i]; }
  int bottom() const { return 0; }
  int top() const { return poset_.size() - 1; }
  bool is_proper(int i) const { return i != bottom() && i != top(); }
  std::optional<int> index_of(const SignedElement& e) const;
  int index_of(Subset set, Subset negative_any) const;

  /// The defining relation evaluated directly (not through the Hasse diagram).
  bool defined_leq(int a, int b) const;

  /// Q_L \ {0, 1}.
  GradedPoset proper_part() const;
  /// Q for the join-distributive orientation L*: the dual poset.
  GradedPoset join_orientation() const { return poset_.dual(); }

 private:
  ClosedSetLattice lattice_;
  std::vector<SignedElement> elements_;
  std::vector<int> offset_;  // first element index for each closed set
  GradedPoset poset_;
};

QPoset build_q_poset(const ClosedSetLattice& lattice);

/// Q for L* built from its own definition: (A, eps) <= (B, delta) iff A contains B
/// and the signs agree on ext(A) & ext(B), with 1 = ({}, {}) and a formal 0.
GradedPoset build_q_poset_join(const ClosedSetLattice& lattice);

/// The reflected triangulation +-Delta: facets sigma^eps for every maximal chain
/// sigma of L \ {0} and every eps, deduplicated via restriction to ext(sigma).
/// Vertex labels are SignedElement labels. Parallel over sign patterns.
SimplicialComplex reflect(const ClosedSetLattice& lattice, std::size_t max_facets = kDefaultMaxFacets);

/// Flipping sign i on every vertex maps facets of +-Delta onto facets, for each i in [n].
bool has_sign_flip_symmetry(const QPoset& q, const SimplicialComplex& pm_delta);

/// Order complex of Q_L \ {0, 1} has exactly the facets of +-Delta (labels compared literally).
bool verify_pm_delta(const QPoset& q, const SimplicialComplex& pm_delta);

/// z((A, eps)) = A.
inline Subset zero_map(const SignedElement& q) { return q.set; }

/// A chain A_1 < ... < A_k = 1 in the join-distributive orientation, i.e.
/// closed sets with A_1 strictly containing A_2 ... and A_k = {}.
using JoinChain = std::vector<Subset>;

/// Chains of Q (join orientation) mapped onto `chain` by z, counted by direct
/// enumeration of sign choices. Throws ChainNotInL, ChainMustEndAtTop.
std::int64_t fiber_count(const QPoset& q, const JoinChain& chain);
/// prod_i nu([A_i, A_{i+1}]) computed in L*.
std::int64_t fiber_product(const ClosedSetLattice& lattice, const JoinChain& chain);
/// Every chain of L* that ends at its top, i.e. every strictly decreasing
/// sequence of closed sets ending at {}.
std::vector<JoinChain> chains_to_top(const ClosedSetLattice& lattice);

/// Cell C_(A,eps): the star of (A, eps) in +-Delta_A. Facets are sorted Q indices.
struct Cell {
  int owner = 0;
  std::set<std::vector<int>> facets;
};
/// Throws NotProperElement for 0 or 1.
Cell cell(const QPoset& q, int element);
/// {(B, delta) : B proper subset of A, delta agreeing with eps on ext(A) & ext(B)}, B nonempty.
std::vector<int> boundary_cells(const QPoset& q, int element);
/// Two-sided comparison: faces of the link of q in +-Delta_A versus faces of the
/// union of the boundary cells.
bool verify_boundary_lemma(const QPoset& q, int element);

/// Eulerian of rank n + 1 (Q_L).
bool q_is_eulerian(const QPoset& q);

namespace serial {
SimplicialComplex reflect(const ClosedSetLattice& lattice, std::size_t max_facets = kDefaultMaxFacets);
}  // namespace serial

}  // namespace cwsphere
