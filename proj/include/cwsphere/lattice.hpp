#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cwsphere/geometry.hpp"
#include "cwsphere/poset.hpp"

namespace cwsphere {

/// The lattice L of closed sets of a convex geometry ordered by inclusion
/// (the meet-distributive orientation): rank = cardinality, 0 = {} and 1 = [n].
/// Element i of poset() is sets()[i]; sets are kept in canonical order.
class ClosedSetLattice {
 public:
  explicit ClosedSetLattice(ConvexGeometry geometry);

  const ConvexGeometry& geometry() const { return geometry_; }
  int ground_size() const { return geometry_.size(); }
  int size() const { return static_cast<int>(sets_.size()); }
  const std::vector<Subset>& sets() const { return sets_; }
  Subset set(int i) const { return sets_[i]; }
  std::optional<int> index_of(Subset a) const;
  /// Like index_of but throws ChainNotInL for a set that is not closed.
  int require_index(Subset a) const;
  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  /// Extreme points of closed set i (precomputed).
  Subset ext(int i) const { return ext_[i]; }
  Subset ext_of(Subset a) const;
  Subset closure(Subset a) const { return geometry_.closure(a); }
  Subset meet(Subset a, Subset b) const { return a & b; }
  Subset join(Subset a, Subset b) const { return closure(a | b); }

  /// Hasse diagram over the closed sets; labels are Subset::to_string().
  const GradedPoset& poset() const { return poset_; }
  /// Reverse inclusion: the join-distributive orientation L*.
  GradedPoset dual() const { return poset_.dual(); }
  /// L* with a new minimum adjoined (labelled "0*").
  GradedPoset dual_with_bottom() const;

  /// Elements covering exactly one element, canonical order (the principal closed sets <i>).
  std::vector<Subset> join_irreducibles() const;
  /// Nonempty closed sets, never A_i subset of A_j for i < j; ties by canonical order.
  std::vector<Subset> reverse_linear_extension() const;

  bool is_boolean() const { return size() == (1 << ground_size()); }

 private:
  ConvexGeometry geometry_;
  std::vector<Subset> sets_;
  std::vector<Subset> ext_;
  std::unordered_map<Subset, int> index_;
  GradedPoset poset_;
};

}  // namespace cwsphere
