#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cwsphere/lattice.hpp"
#include "cwsphere/poset.hpp"
#include "cwsphere/polynomial.hpp"

namespace cwsphere {

using VertexId = std::uint32_t;
/// Sorted vertex ids.
using Face = std::vector<VertexId>;

inline constexpr std::size_t kDefaultMaxFacets = 1'000'000;

/// A simplicial complex given by its facets; faces are all subsets of facets.
/// Vertices carry string labels, and two complexes built by different routes are
/// compared through their labels.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Build from facets over `labels`. Facets are sorted and deduplicated, and
  /// vertices appearing in no facet are dropped. Facets must already be
  /// inclusion-maximal (use from_labeled_facets for arbitrary input).
  SimplicialComplex(std::vector<std::string> labels, std::vector<Face> facets,
                    std::size_t max_facets = kDefaultMaxFacets);

  /// Arbitrary generating faces by label; non-maximal ones are discarded.
  static SimplicialComplex from_labeled_facets(const std::vector<std::vector<std::string>>& facets);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t facet_count() const { return facets_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find_vertex(const std::string& label) const;
  const std::vector<Face>& facets() const { return facets_; }
  /// Largest facet size minus one; -1 for the empty complex.
  int dimension() const;

  bool has_face(const Face& face) const;
  /// Face given by labels; false when a label is unknown.
  bool has_labeled_face(const std::vector<std::string>& face) const;
  std::optional<Face> face_ids(const std::vector<std::string>& face) const;

  /// Facets as sorted label lists: the basis of label-level equality.
  std::set<std::vector<std::string>> labeled_facets() const;
  bool same_labeled_facets(const SimplicialComplex& other) const { return labeled_facets() == other.labeled_facets(); }

  /// Every nonempty face, grouped by dimension.
  std::vector<std::vector<Face>> faces_by_dimension() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Face> facets_;
};

/// Vertices = elements, facets = maximal chains.
SimplicialComplex order_complex(const GradedPoset& p, std::size_t max_facets = kDefaultMaxFacets);

/// sd_sigma: facets containing sigma are replaced by (F \ {s}) + {v} for s in sigma.
/// Throws FaceNotInComplex, VertexCollision, ResourceLimit.
SimplicialComplex stellar_subdivision(const SimplicialComplex& complex, const std::vector<std::string>& face,
                                      const std::string& new_vertex, std::size_t max_facets = kDefaultMaxFacets);

struct SubdivisionStep {
  Subset closed_set;
  Subset extreme;
  /// Principal closed sets are recorded but not subdivided.
  bool principal = false;
  std::size_t facets_after = 0;
};

struct SubdivisionSequence {
  /// stages[0] is the simplex on the join-irreducibles; stages[i] follows steps[i-1].
  std::vector<SimplicialComplex> stages;
  std::vector<SubdivisionStep> steps;
  const SimplicialComplex& final_complex() const { return stages.back(); }
};

/// Subdivide the simplex of join-irreducibles over ext(A_i) along the reverse
/// linear extension A_1 = [n], A_2, ...; the final complex is Delta(L \ {0}).
SubdivisionSequence build_by_subdivision(const ClosedSetLattice& lattice, std::size_t max_facets = kDefaultMaxFacets);

/// f_0, ..., f_{d-1}.
std::vector<std::int64_t> f_vector(const SimplicialComplex& complex);
/// h(t) = sum_i f_{i-1} t^i (1 - t)^{d - i}, d = dimension + 1, f_{-1} = 1.
IntPolynomial h_polynomial(const SimplicialComplex& complex);
IntPolynomial h_from_f(const std::vector<std::int64_t>& f);
std::int64_t euler_characteristic(const SimplicialComplex& complex);

struct PseudomanifoldReport {
  bool pure = false;
  /// Every ridge lies in exactly two facets.
  bool closed = false;
  /// Every ridge lies in at most two facets.
  bool with_boundary = false;
  std::size_t boundary_ridges = 0;
};
PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& complex);

/// Faces of all dimensions generated by the given facets (downward closure).
std::set<std::vector<std::string>> downward_closure(const std::set<std::vector<std::string>>& generators);

}  // namespace cwsphere
