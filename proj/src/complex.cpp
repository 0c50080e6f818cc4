#include "cwsphere/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "cwsphere/error.hpp"

namespace cwsphere {

namespace {

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (VertexId v : f) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void check_facet_cap(std::size_t count, std::size_t max_facets) {
  if (count > max_facets) {
    throw Error(ErrorKind::ResourceLimit, "complex would have " + std::to_string(count) +
                                              " facets, above the cap of " + std::to_string(max_facets));
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Face> facets, std::size_t max_facets) {
  for (auto& f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  check_facet_cap(facets.size(), max_facets);

  std::vector<char> used(labels.size(), 0);
  for (const auto& f : facets) {
    for (VertexId v : f) used.at(v) = 1;
  }
  std::vector<VertexId> remap(labels.size(), 0);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!used[v]) continue;
    remap[v] = static_cast<VertexId>(labels_.size());
    labels_.push_back(std::move(labels[v]));
  }
  {
    std::unordered_set<std::string> distinct(labels_.begin(), labels_.end());
    if (distinct.size() != labels_.size()) throw Error(ErrorKind::VertexCollision, "duplicate vertex labels");
  }
  for (auto& f : facets) {
    for (auto& v : f) v = remap[v];
    std::sort(f.begin(), f.end());
  }
  std::sort(facets.begin(), facets.end());
  facets_ = std::move(facets);
}

SimplicialComplex SimplicialComplex::from_labeled_facets(const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Face> faces;
  for (const auto& f : facets) {
    Face face;
    for (const auto& l : f) {
      auto [it, inserted] = ids.emplace(l, static_cast<VertexId>(labels.size()));
      if (inserted) labels.push_back(l);
      face.push_back(it->second);
    }
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return a.size() > b.size(); });
  std::vector<Face> maximal;
  for (const auto& f : faces) {
    bool contained = std::any_of(maximal.begin(), maximal.end(), [&](const Face& g) {
      return std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!contained) maximal.push_back(f);
  }
  return SimplicialComplex(std::move(labels), std::move(maximal));
}

std::optional<VertexId> SimplicialComplex::find_vertex(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

int SimplicialComplex::dimension() const {
  std::size_t d = 0;
  for (const auto& f : facets_) d = std::max(d, f.size());
  return static_cast<int>(d) - 1;
}

bool SimplicialComplex::has_face(const Face& face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return std::includes(f.begin(), f.end(), face.begin(), face.end()); });
}

std::optional<Face> SimplicialComplex::face_ids(const std::vector<std::string>& face) const {
  Face ids;
  for (const auto& l : face) {
    auto v = find_vertex(l);
    if (!v) return std::nullopt;
    ids.push_back(*v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool SimplicialComplex::has_labeled_face(const std::vector<std::string>& face) const {
  auto ids = face_ids(face);
  return ids && has_face(*ids);
}

std::set<std::vector<std::string>> SimplicialComplex::labeled_facets() const {
  std::set<std::vector<std::string>> out;
  for (const auto& f : facets_) {
    std::vector<std::string> named;
    for (VertexId v : f) named.push_back(labels_[v]);
    std::sort(named.begin(), named.end());
    out.insert(std::move(named));
  }
  return out;
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_dimension() const {
  const int top = dimension();
  std::vector<std::unordered_set<Face, FaceHash>> seen(top + 1);
  for (const auto& f : facets_) {
    const std::uint32_t k = static_cast<std::uint32_t>(f.size());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      Face sub;
      for (std::uint32_t i = 0; i < k; ++i) {
        if (mask & (1u << i)) sub.push_back(f[i]);
      }
      seen[sub.size() - 1].insert(std::move(sub));
    }
  }
  std::vector<std::vector<Face>> out(top + 1);
  for (int d = 0; d <= top; ++d) {
    out[d].assign(seen[d].begin(), seen[d].end());
    std::sort(out[d].begin(), out[d].end());
  }
  return out;
}

SimplicialComplex order_complex(const GradedPoset& p, std::size_t max_facets) {
  std::vector<Face> facets;
  std::vector<VertexId> chain;
  auto dfs = [&](auto&& self, int v) -> void {
    chain.push_back(static_cast<VertexId>(v));
    if (p.covers_up(v).empty()) {
      facets.push_back(chain);
      check_facet_cap(facets.size(), max_facets);
    } else {
      for (int w : p.covers_up(v)) self(self, w);
    }
    chain.pop_back();
  };
  for (int m : p.minimal_elements()) dfs(dfs, m);
  return SimplicialComplex(p.labels(), std::move(facets), max_facets);
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& complex, const std::vector<std::string>& face,
                                      const std::string& new_vertex, std::size_t max_facets) {
  if (face.empty()) throw Error(ErrorKind::FaceNotInComplex, "stellar subdivision needs a nonempty face");
  auto sigma = complex.face_ids(face);
  if (!sigma || !complex.has_face(*sigma)) throw Error(ErrorKind::FaceNotInComplex, "face is not in the complex");
  if (complex.find_vertex(new_vertex)) throw Error(ErrorKind::VertexCollision, "vertex \"" + new_vertex + "\" exists");

  std::vector<std::string> labels = complex.labels();
  const auto v = static_cast<VertexId>(labels.size());
  labels.push_back(new_vertex);

  std::vector<Face> facets;
  for (const auto& f : complex.facets()) {
    if (!std::includes(f.begin(), f.end(), sigma->begin(), sigma->end())) {
      facets.push_back(f);
      continue;
    }
    for (VertexId s : *sigma) {
      Face g;
      for (VertexId x : f) {
        if (x != s) g.push_back(x);
      }
      g.push_back(v);
      facets.push_back(std::move(g));
    }
    check_facet_cap(facets.size(), max_facets);
  }
  return SimplicialComplex(std::move(labels), std::move(facets), max_facets);
}

SubdivisionSequence build_by_subdivision(const ClosedSetLattice& lattice, std::size_t max_facets) {
  const int n = lattice.ground_size();
  SubdivisionSequence seq;
  std::vector<std::string> labels;
  Face simplex;
  for (int i = 1; i <= n; ++i) {
    labels.push_back(lattice.closure(Subset::singleton(i)).to_string());
    simplex.push_back(static_cast<VertexId>(i - 1));
  }
  std::vector<Face> initial;
  if (n > 0) initial.push_back(simplex);
  seq.stages.emplace_back(labels, std::move(initial), max_facets);

  for (Subset a : lattice.reverse_linear_extension()) {
    SubdivisionStep step;
    step.closed_set = a;
    step.extreme = lattice.ext_of(a);
    step.principal = step.extreme.size() == 1;
    if (step.principal) {
      seq.stages.push_back(seq.stages.back());
    } else {
      std::vector<std::string> face;
      for_each_element(step.extreme, [&](int j) { face.push_back(lattice.closure(Subset::singleton(j)).to_string()); });
      seq.stages.push_back(stellar_subdivision(seq.stages.back(), face, a.to_string(), max_facets));
    }
    step.facets_after = seq.stages.back().facet_count();
    seq.steps.push_back(step);
  }
  return seq;
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& complex) {
  std::vector<std::int64_t> f;
  for (const auto& faces : complex.faces_by_dimension()) f.push_back(static_cast<std::int64_t>(faces.size()));
  return f;
}

IntPolynomial h_from_f(const std::vector<std::int64_t>& f) {
  const int d = static_cast<int>(f.size());
  auto f_at = [&](int i) -> std::int64_t { return i == 0 ? 1 : f[i - 1]; };  // f_at(i) = f_{i-1}
  IntPolynomial h;
  h.coeffs.assign(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    std::int64_t acc = 0;
    for (int i = 0; i <= k; ++i) {
      std::int64_t term = checked_mul(binomial(d - i, k - i), f_at(i));
      acc = checked_add(acc, ((k - i) % 2 == 0) ? term : -term);
    }
    h.coeffs[k] = acc;
  }
  while (h.coeffs.size() > 1 && h.coeffs.back() == 0) h.coeffs.pop_back();
  return h;
}

IntPolynomial h_polynomial(const SimplicialComplex& complex) { return h_from_f(f_vector(complex)); }

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
  std::int64_t chi = 0;
  auto f = f_vector(complex);
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0) ? f[i] : -f[i];
  return chi;
}

PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& complex) {
  PseudomanifoldReport r;
  const auto& facets = complex.facets();
  if (facets.empty()) return r;
  const std::size_t d = facets.front().size();
  r.pure = std::all_of(facets.begin(), facets.end(), [&](const Face& f) { return f.size() == d; });
  if (!r.pure) return r;
  std::unordered_map<Face, int, FaceHash> ridges;
  for (const auto& f : facets) {
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      Face ridge;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i != skip) ridge.push_back(f[i]);
      }
      ++ridges[ridge];
    }
  }
  r.closed = true;
  r.with_boundary = true;
  for (const auto& [ridge, count] : ridges) {
    if (count != 2) r.closed = false;
    if (count > 2) r.with_boundary = false;
    if (count == 1) ++r.boundary_ridges;
  }
  return r;
}

std::set<std::vector<std::string>> downward_closure(const std::set<std::vector<std::string>>& generators) {
  std::set<std::vector<std::string>> out;
  for (const auto& g : generators) {
    const std::uint32_t k = static_cast<std::uint32_t>(g.size());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<std::string> sub;
      for (std::uint32_t i = 0; i < k; ++i) {
        if (mask & (1u << i)) sub.push_back(g[i]);
      }
      out.insert(std::move(sub));
    }
  }
  return out;
}

}  // namespace cwsphere
