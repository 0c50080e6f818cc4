#include "cwsphere/lattice.hpp"

#include <algorithm>

#include "cwsphere/error.hpp"

namespace cwsphere {

ClosedSetLattice::ClosedSetLattice(ConvexGeometry geometry)
    : geometry_(std::move(geometry)), sets_(enumerate_closed_sets(geometry_)) {
  if (sets_.empty() || !sets_.front().empty()) {
    throw Error(ErrorKind::InvalidGeometry, "the empty set must be closed");
  }
  if (static_cast<int>(sets_.size()) > kMaxPosetSize) {
    throw Error(ErrorKind::ResourceLimit, std::to_string(sets_.size()) + " closed sets exceed the lattice cap of " +
                                              std::to_string(kMaxPosetSize));
  }
  for (int i = 0; i < size(); ++i) index_.emplace(sets_[i], i);
  ext_.reserve(sets_.size());
  for (Subset a : sets_) ext_.push_back(geometry_.extreme_points(a));

  // B covers A iff B is minimal among the closures <A + x>, x not in A.
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels;
  std::vector<int> ranks;
  for (int i = 0; i < size(); ++i) {
    Subset a = sets_[i];
    labels.push_back(a.to_string());
    ranks.push_back(a.size());
    std::vector<Subset> candidates;
    for (int x = 1; x <= ground_size(); ++x) {
      if (!a.contains(x)) candidates.push_back(closure(a.with(x)));
    }
    std::sort(candidates.begin(), candidates.end(), CanonicalLess{});
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (Subset b : candidates) {
      bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                  [&](Subset c) { return c.proper_subset_of(b); });
      if (minimal) covers.emplace_back(i, index_.at(b));
    }
  }
  poset_ = GradedPoset(std::move(labels), std::move(covers), std::move(ranks));
}

std::optional<int> ClosedSetLattice::index_of(Subset a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int ClosedSetLattice::require_index(Subset a) const {
  auto i = index_of(a);
  if (!i) throw Error(ErrorKind::ChainNotInL, a.to_string() + " is not a closed set");
  return *i;
}

Subset ClosedSetLattice::ext_of(Subset a) const {
  if (auto i = index_of(a)) return ext_[*i];
  return geometry_.extreme_points(a);
}

GradedPoset ClosedSetLattice::dual_with_bottom() const { return dual().with_bottom("0*"); }

std::vector<Subset> ClosedSetLattice::join_irreducibles() const {
  // In a finite lattice, x != 0 is join-irreducible iff it covers exactly one element.
  std::vector<Subset> out;
  for (int i = 1; i < size(); ++i) {
    if (poset_.covers_down(i).size() == 1) out.push_back(sets_[i]);
  }
  return out;
}

std::vector<Subset> ClosedSetLattice::reverse_linear_extension() const {
  std::vector<Subset> out(sets_.begin() + 1, sets_.end());
  std::stable_sort(out.begin(), out.end(), [](Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });
  return out;
}

}  // namespace cwsphere
