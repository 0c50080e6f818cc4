#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cwsphere/subset.hpp"

namespace cwsphere {

using Rational = mpq_class;

/// Parse "p/q" or "p" into a canonicalized rational. Throws ParseError.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

struct Point2 {
  Rational x;
  Rational y;
};

enum class IdealDirection { Lower, Upper };

struct Points1D {
  std::vector<Rational> coords;
};

struct Points2D {
  std::vector<Point2> points;
};

/// Ideal closure on a poset over [n]; `relations` holds pairs (a, b) meaning a < b.
/// Relations need not be covers; the transitive closure is taken.
struct PosetIdeal {
  std::vector<std::pair<int, int>> relations;
  IdealDirection direction = IdealDirection::Lower;
};

struct ExplicitFamily {
  std::vector<Subset> sets;
};

using Representation = std::variant<Points1D, Points2D, PosetIdeal, ExplicitFamily>;

/// A closure operator on [n] given by one of the supported representations.
/// Construction checks structural preconditions (distinct points, acyclic
/// relations, family containing the empty set and [n]); the convex-geometry
/// axioms themselves are checked by validate().
class ConvexGeometry {
 public:
  ConvexGeometry(int n, Representation rep, std::vector<std::string> labels = {});

  static ConvexGeometry points1d(std::vector<Rational> coords);
  static ConvexGeometry points2d(std::vector<Point2> points);
  static ConvexGeometry poset_ideal(int n, std::vector<std::pair<int, int>> relations, IdealDirection dir);
  static ConvexGeometry family(int n, std::vector<Subset> sets);
  /// The Boolean geometry on [n]: every subset closed.
  static ConvexGeometry boolean(int n);
  /// n collinear points at 1, 2, ..., n.
  static ConvexGeometry collinear(int n);

  int size() const { return n_; }
  Subset ground() const { return Subset::full(n_); }
  const Representation& representation() const { return rep_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i - 1]; }
  std::string kind() const;

  Subset closure(Subset a) const;
  bool is_closed(Subset a) const { return closure(a) == a; }

  /// ext(A) = {a in <A> : a not in <<A> \ {a}>}, the unique minimal generating set.
  Subset extreme_points(Subset a) const;

 private:
  Subset closure_points2d(Subset a) const;
  Subset closure_family(Subset a) const;

  int n_;
  Representation rep_;
  std::vector<std::string> labels_;
  // Precomputed helpers (representation-specific).
  std::vector<Subset> ideal_of_;               // PosetIdeal: principal ideal of each element
  std::vector<Subset> segment_;                // Points2D: points on segment [i,j], index i*n+j
  std::vector<Subset> triangle_;               // Points2D: points in triangle (i,j,k), index (i*n+j)*n+k
  std::vector<Subset> sets_;                   // ExplicitFamily: the family, canonical order
};

struct AxiomViolation {
  /// 1..4 for the closure axioms, 0 for a family that is not intersection-closed.
  int axiom = 0;
  Subset a;
  Subset b;
  int x = 0;
  int y = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  /// Fast pre-check: every closed A != [n] extends by one point to a closed set.
  bool accessible = true;
  bool valid() const { return violations.empty(); }
};

/// Exhaustive check of the closure axioms over all (A, B) and (A, x, y). n <= 12.
ValidationReport validate(const ConvexGeometry& g);

/// Throws InvalidGeometry carrying the first witness when validate() fails.
void require_valid(const ConvexGeometry& g);

/// Adjoin element n+1 whose closure is [n+1]; the closed sets are those of g plus [n+1].
ConvexGeometry one_point_extension(const ConvexGeometry& g);

/// All closed sets of g in canonical order. Throws GroundSetTooLarge for n > 20.
std::vector<Subset> enumerate_closed_sets(const ConvexGeometry& g);

}  // namespace cwsphere
