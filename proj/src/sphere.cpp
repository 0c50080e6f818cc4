#include "cwsphere/sphere.hpp"

#include <algorithm>
#include <map>

#include "cwsphere/error.hpp"
#include "parallel.hpp"

namespace cwsphere {

namespace {

constexpr const char* kFormalTop = "1^";

void check_sphere_size(const ClosedSetLattice& lattice) {
  const int n = lattice.ground_size();
  if (n < 1) throw Error(ErrorKind::InvalidGeometry, "sphere constructions need n >= 1");
  if (n > kMaxSphereGroundSet) {
    throw Error(ErrorKind::ResourceLimit, "sphere constructions are capped at n <= " +
                                              std::to_string(kMaxSphereGroundSet));
  }
}

// Maximal chains of L \ {0} as lattice indices, bottom-up.
std::vector<std::vector<int>> lattice_chains(const ClosedSetLattice& lattice) {
  auto chains = lattice.poset().maximal_chains();
  for (auto& c : chains) c.erase(c.begin());
  return chains;
}

// Saturated chains from an atom up to `top` inside [0, top] of L.
std::vector<std::vector<int>> chains_below(const ClosedSetLattice& lattice, int top) {
  const GradedPoset& p = lattice.poset();
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  auto dfs = [&](auto&& self, int v) -> void {
    chain.push_back(v);
    if (v == top) {
      out.push_back(chain);
    } else {
      for (int w : p.covers_up(v)) {
        if (p.leq(w, top)) self(self, w);
      }
    }
    chain.pop_back();
  };
  for (int a : p.covers_up(lattice.bottom())) {
    if (p.leq(a, top)) dfs(dfs, a);
  }
  return out;
}

std::vector<Face> facets_for_sign(const QPoset& q, const std::vector<std::vector<int>>& chains, std::uint32_t negative) {
  std::vector<Face> out;
  out.reserve(chains.size());
  const auto& lattice = q.lattice();
  for (const auto& chain : chains) {
    Face f;
    for (int i : chain) f.push_back(static_cast<VertexId>(q.index_of(lattice.set(i), Subset(negative)) - 1));
    std::sort(f.begin(), f.end());
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::string> proper_labels(const QPoset& q) {
  std::vector<std::string> labels;
  for (int i = 1; i < q.top(); ++i) labels.push_back(q.element(i).label());
  return labels;
}

void check_reflect_budget(const ClosedSetLattice& lattice, std::size_t chains, std::size_t max_facets) {
  const std::size_t total = chains << lattice.ground_size();
  if (total > max_facets) {
    throw Error(ErrorKind::ResourceLimit, "+-Delta would have " + std::to_string(total) + " facets, above the cap of " +
                                              std::to_string(max_facets));
  }
}

std::set<std::vector<int>> faces_of(const std::set<std::vector<int>>& generators) {
  std::set<std::vector<int>> out;
  for (const auto& g : generators) {
    const std::uint32_t k = static_cast<std::uint32_t>(g.size());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> sub;
      for (std::uint32_t i = 0; i < k; ++i) {
        if (mask & (1u << i)) sub.push_back(g[i]);
      }
      out.insert(std::move(sub));
    }
  }
  return out;
}

}  // namespace

SignedElement SignedElement::make(const ClosedSetLattice& lattice, Subset set, Subset negative_any) {
  Subset ext = lattice.ext_of(set);
  return SignedElement{set, ext, negative_any & ext};
}

std::string SignedElement::label() const {
  std::string s = set.to_string() + "[";
  bool first = true;
  for_each_element(extreme, [&](int i) {
    if (!first) s += ',';
    s += negative.contains(i) ? '-' : '+';
    s += std::to_string(i);
    first = false;
  });
  return s + "]";
}

QPoset::QPoset(const ClosedSetLattice& lattice) : lattice_(lattice) {
  check_sphere_size(lattice_);
  const int n = lattice_.ground_size();
  offset_.resize(lattice_.size());
  for (int i = 0; i < lattice_.size(); ++i) {
    offset_[i] = static_cast<int>(elements_.size());
    Subset ext = lattice_.ext(i);
    const std::uint32_t patterns = 1u << ext.size();
    for (std::uint32_t packed = 0; packed < patterns; ++packed) {
      elements_.push_back(SignedElement{lattice_.set(i), ext, Subset(expand_bits(packed, ext.bits()))});
    }
  }
  // The bottom ({}, {}) is element 0 because the empty set is first in canonical order.
  const int top = static_cast<int>(elements_.size());
  std::vector<std::string> labels;
  std::vector<int> ranks;
  for (const auto& e : elements_) {
    labels.push_back(e.label());
    ranks.push_back(e.set.size());
  }
  labels.push_back(kFormalTop);
  ranks.push_back(n + 1);

  std::vector<std::pair<int, int>> covers;
  const GradedPoset& lp = lattice_.poset();
  for (int a = 0; a < lattice_.size(); ++a) {
    for (int b : lp.covers_up(a)) {
      for (int i = offset_[a]; i < offset_[a] + (1 << lattice_.ext(a).size()); ++i) {
        for (int j = offset_[b]; j < offset_[b] + (1 << lattice_.ext(b).size()); ++j) {
          if (elements_[i].below(elements_[j])) covers.emplace_back(i, j);
        }
      }
    }
  }
  for (int j = offset_[lattice_.top()]; j < top; ++j) covers.emplace_back(j, top);
  poset_ = GradedPoset(std::move(labels), std::move(covers), std::move(ranks));
}

std::optional<int> QPoset::index_of(const SignedElement& e) const {
  auto i = lattice_.index_of(e.set);
  if (!i) return std::nullopt;
  Subset ext = lattice_.ext(*i);
  if (e.negative.bits() & ~ext.bits()) return std::nullopt;
  return offset_[*i] + static_cast<int>(compress_bits(e.negative.bits(), ext.bits()));
}

int QPoset::index_of(Subset set, Subset negative_any) const {
  int i = lattice_.require_index(set);
  Subset ext = lattice_.ext(i);
  return offset_[i] + static_cast<int>(compress_bits(negative_any.bits(), ext.bits()));
}

bool QPoset::defined_leq(int a, int b) const {
  if (b == top()) return true;
  if (a == top()) return false;
  return elements_[a].below(elements_[b]);
}

GradedPoset QPoset::proper_part() const {
  std::vector<int> keep;
  for (int i = 1; i < top(); ++i) keep.push_back(i);
  return poset_.convex_subposet(keep, true);
}

QPoset build_q_poset(const ClosedSetLattice& lattice) { return QPoset(lattice); }

GradedPoset build_q_poset_join(const ClosedSetLattice& lattice) {
  check_sphere_size(lattice);
  const int n = lattice.ground_size();
  std::vector<SignedElement> elems;
  std::vector<int> offset(lattice.size());
  for (int i = 0; i < lattice.size(); ++i) {
    offset[i] = static_cast<int>(elems.size());
    Subset ext = lattice.ext(i);
    for (std::uint32_t packed = 0; packed < (1u << ext.size()); ++packed) {
      elems.push_back(SignedElement{lattice.set(i), ext, Subset(expand_bits(packed, ext.bits()))});
    }
  }
  const int formal = static_cast<int>(elems.size());
  std::vector<std::string> labels;
  std::vector<int> ranks;
  for (const auto& e : elems) {
    labels.push_back(e.label());
    ranks.push_back(n + 1 - e.set.size());
  }
  labels.push_back(kFormalTop);
  ranks.push_back(0);
  // (A, eps) <= (B, delta) in the join orientation iff B subset of A with agreement;
  // covers are the pairs with |A| = |B| + 1.
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < formal; ++i) {
    for (int j = 0; j < formal; ++j) {
      if (elems[i].set.size() == elems[j].set.size() + 1 && elems[j].below(elems[i])) covers.emplace_back(i, j);
    }
  }
  for (int i = offset[lattice.top()]; i < formal; ++i) covers.emplace_back(formal, i);
  return GradedPoset(std::move(labels), std::move(covers), std::move(ranks));
}

SimplicialComplex reflect(const ClosedSetLattice& lattice, std::size_t max_facets) {
  QPoset q(lattice);
  const auto chains = lattice_chains(lattice);
  check_reflect_budget(lattice, chains.size(), max_facets);
  const std::int64_t patterns = std::int64_t{1} << lattice.ground_size();
  std::vector<std::vector<Face>> per_sign(patterns);
  detail::parallel_for(patterns, [&](std::int64_t eps) {
    per_sign[eps] = facets_for_sign(q, chains, static_cast<std::uint32_t>(eps));
  });
  std::vector<Face> facets;
  for (auto& block : per_sign) {
    facets.insert(facets.end(), std::make_move_iterator(block.begin()), std::make_move_iterator(block.end()));
  }
  return SimplicialComplex(proper_labels(q), std::move(facets), max_facets);
}

namespace serial {

SimplicialComplex reflect(const ClosedSetLattice& lattice, std::size_t max_facets) {
  QPoset q(lattice);
  const auto chains = lattice_chains(lattice);
  check_reflect_budget(lattice, chains.size(), max_facets);
  std::vector<Face> facets;
  for (std::uint32_t eps = 0; eps < (1u << lattice.ground_size()); ++eps) {
    auto block = facets_for_sign(q, chains, eps);
    facets.insert(facets.end(), block.begin(), block.end());
  }
  return SimplicialComplex(proper_labels(q), std::move(facets), max_facets);
}

}  // namespace serial

bool verify_pm_delta(const QPoset& q, const SimplicialComplex& pm_delta) {
  SimplicialComplex from_q = order_complex(q.proper_part());
  return from_q.labeled_facets() == pm_delta.labeled_facets() && from_q.vertex_count() == pm_delta.vertex_count();
}

bool has_sign_flip_symmetry(const QPoset& q, const SimplicialComplex& pm_delta) {
  const auto facets = pm_delta.labeled_facets();
  for (int i = 1; i <= q.lattice().ground_size(); ++i) {
    for (const auto& f : facets) {
      std::vector<std::string> flipped;
      for (const auto& label : f) {
        auto idx = q.poset().find(label);
        if (!idx || !q.is_proper(*idx)) return false;
        SignedElement e = q.element(*idx);
        if (e.extreme.contains(i)) e.negative = e.negative.contains(i) ? e.negative.without(i) : e.negative.with(i);
        flipped.push_back(e.label());
      }
      std::sort(flipped.begin(), flipped.end());
      if (!facets.count(flipped)) return false;
    }
  }
  return true;
}

namespace {

void validate_join_chain(const ClosedSetLattice& lattice, const JoinChain& chain) {
  if (chain.empty()) throw Error(ErrorKind::ChainNotInL, "empty chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    lattice.require_index(chain[i]);
    if (i + 1 < chain.size() && !chain[i + 1].proper_subset_of(chain[i])) {
      throw Error(ErrorKind::ChainNotInL, "chain is not strictly increasing in the join orientation at " +
                                              chain[i].to_string() + ", " + chain[i + 1].to_string());
    }
  }
  if (!chain.back().empty()) {
    throw Error(ErrorKind::ChainMustEndAtTop, "chain must end at the top {} of the join-distributive orientation");
  }
}

}  // namespace

std::int64_t fiber_count(const QPoset& q, const JoinChain& chain) {
  const auto& lattice = q.lattice();
  validate_join_chain(lattice, chain);
  // ways[e] = number of chains (A_i, .) < ... < (A_k, .) in the join orientation starting at e.
  std::map<int, std::int64_t> ways{{q.bottom(), 1}};
  for (std::size_t pos = chain.size() - 1; pos-- > 0;) {
    const int li = *lattice.index_of(chain[pos]);
    std::map<int, std::int64_t> next;
    Subset ext = lattice.ext(li);
    for (std::uint32_t packed = 0; packed < (1u << ext.size()); ++packed) {
      const int e = q.index_of(chain[pos], Subset(expand_bits(packed, ext.bits())));
      std::int64_t total = 0;
      for (auto [prev, count] : ways) {
        if (q.poset().less(prev, e)) total = checked_add(total, count);
      }
      if (total) next[e] = total;
    }
    ways = std::move(next);
  }
  std::int64_t total = 0;
  for (auto [e, count] : ways) total = checked_add(total, count);
  return total;
}

std::int64_t fiber_product(const ClosedSetLattice& lattice, const JoinChain& chain) {
  validate_join_chain(lattice, chain);
  const GradedPoset dual = lattice.dual();
  std::int64_t product = 1;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    product = checked_mul(product, nu_interval(dual, *lattice.index_of(chain[i]), *lattice.index_of(chain[i + 1])));
  }
  return product;
}

std::vector<JoinChain> chains_to_top(const ClosedSetLattice& lattice) {
  const GradedPoset& p = lattice.poset();
  std::vector<JoinChain> out;
  std::vector<int> stack{lattice.bottom()};
  auto dfs = [&](auto&& self) -> void {
    JoinChain c;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) c.push_back(lattice.set(*it));
    out.push_back(std::move(c));
    const int last = stack.back();
    for (int t = 0; t < lattice.size(); ++t) {
      if (p.less(last, t)) {
        stack.push_back(t);
        self(self);
        stack.pop_back();
      }
    }
  };
  dfs(dfs);
  return out;
}

Cell cell(const QPoset& q, int element) {
  if (element < 0 || !q.is_proper(element)) throw Error(ErrorKind::NotProperElement, "cells exist only for proper elements");
  const auto& lattice = q.lattice();
  const SignedElement& owner = q.element(element);
  const int li = *lattice.index_of(owner.set);
  const Subset free = owner.set - owner.extreme;
  Cell c{element, {}};
  const auto chains = chains_below(lattice, li);
  for (std::uint32_t packed = 0; packed < (1u << free.size()); ++packed) {
    const Subset negative = owner.negative | Subset(expand_bits(packed, free.bits()));
    for (const auto& chain : chains) {
      std::vector<int> facet;
      for (int i : chain) facet.push_back(q.index_of(lattice.set(i), negative));
      std::sort(facet.begin(), facet.end());
      c.facets.insert(std::move(facet));
    }
  }
  return c;
}

std::vector<int> boundary_cells(const QPoset& q, int element) {
  if (element < 0 || !q.is_proper(element)) throw Error(ErrorKind::NotProperElement, "cells exist only for proper elements");
  std::vector<int> out;
  for (int i = 1; i < q.top(); ++i) {
    if (i != element && q.poset().leq(i, element)) out.push_back(i);
  }
  return out;
}

bool verify_boundary_lemma(const QPoset& q, int element) {
  Cell own = cell(q, element);
  std::set<std::vector<int>> link;
  for (const auto& f : own.facets) {
    std::vector<int> tau;
    for (int v : f) {
      if (v != element) tau.push_back(v);
    }
    if (!tau.empty()) link.insert(std::move(tau));
  }
  std::set<std::vector<int>> union_of_cells;
  for (int b : boundary_cells(q, element)) {
    Cell c = cell(q, b);
    union_of_cells.insert(c.facets.begin(), c.facets.end());
  }
  return faces_of(link) == faces_of(union_of_cells);
}

bool q_is_eulerian(const QPoset& q) {
  return q.poset().rank(q.top()) == q.lattice().ground_size() + 1 && is_eulerian(q.poset());
}

}  // namespace cwsphere
