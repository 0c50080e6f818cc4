#include <doctest.h>

#include <algorithm>
#include <map>

#include "../support/corpus.hpp"
#include "../support/oracles.hpp"
#include "cwsphere/complex.hpp"
#include "cwsphere/error.hpp"
#include "cwsphere/sphere.hpp"

using namespace cwsphere;
using namespace cwsphere::testing;

namespace {

Subset S(std::initializer_list<int> xs) { return Subset::of(xs); }

ClosedSetLattice three_collinear() {
  return ClosedSetLattice(ConvexGeometry::points1d({Rational(0), Rational(1, 2), Rational(1)}));
}

std::vector<CorpusEntry> small_corpus() { return full_corpus(4); }

}  // namespace

TEST_CASE("signed elements keep signs on extreme points only") {
  auto l = three_collinear();
  auto e = SignedElement::make(l, S({1, 2, 3}), S({2, 3}));
  CHECK(e.extreme == S({1, 3}));
  CHECK(e.negative == S({3}));
  CHECK(e.label() == "{1,2,3}[+1,-3]");
  CHECK(e == SignedElement::make(l, S({1, 2, 3}), S({3})));
  CHECK(SignedElement::make(l, Subset(), Subset()).label() == "{}[]");
  auto lower = SignedElement::make(l, S({1, 2}), S({2}));
  CHECK(lower.below(e));
  CHECK_FALSE(SignedElement::make(l, S({1, 2}), S({1})).below(e));
  CHECK(SignedElement::make(l, S({1, 2}), S({})).below(SignedElement::make(l, S({1, 2, 3}), S({}))));
  CHECK(SignedElement::make(l, S({2}), S({2})).below(e));
}

TEST_CASE("Q_L of three collinear points") {
  auto l = three_collinear();
  QPoset q(l);
  CHECK(q.poset().size() == 20);
  CHECK(q.poset().covers_down(q.top()).size() == 4);
  CHECK(q.poset().rank(q.top()) == 4);
  CHECK(q.poset().label(q.top()) == "1^");
  CHECK(q.poset().label(q.bottom()) == "{}[]");
  CHECK(q.proper_part().maximal_chains().size() == 32);
  CHECK(q_is_eulerian(q));
}

TEST_CASE("Q_L of a single point is the diamond") {
  ClosedSetLattice l(ConvexGeometry::boolean(1));
  QPoset q(l);
  CHECK(q.poset().size() == 4);
  CHECK(q_is_eulerian(q));
  auto pm = reflect(l);
  CHECK(pm.vertex_count() == 2);
  CHECK(pm.facet_count() == 2);
  CHECK(pm.labeled_facets() == std::set<std::vector<std::string>>{{"{1}[+1]"}, {"{1}[-1]"}});
  CHECK(verify_pm_delta(q, pm));
}

TEST_CASE("reflection of three collinear points") {
  auto l = three_collinear();
  auto pm = reflect(l);
  CHECK(f_vector(pm) == std::vector<std::int64_t>{18, 48, 32});
  CHECK(h_polynomial(pm).coeffs == std::vector<std::int64_t>{1, 15, 15, 1});
  CHECK(euler_characteristic(pm) == 2);
  CHECK(pseudomanifold_check(pm).closed);
  CHECK(has_sign_flip_symmetry(QPoset(l), pm));
}

TEST_CASE("reflection of B_2 is an 8-cycle") {
  ClosedSetLattice l(ConvexGeometry::boolean(2));
  auto pm = reflect(l);
  CHECK(pm.vertex_count() == 8);
  CHECK(pm.facet_count() == 8);
  CHECK(euler_characteristic(pm) == 0);
}

TEST_CASE("order relation: Hasse reachability matches the definition") {
  for (const auto& e : small_corpus()) {
    CAPTURE(e.name);
    QPoset q(ClosedSetLattice(e.geometry));
    bool ok = true;
    for (int a = 0; a < q.poset().size(); ++a)
      for (int b = 0; b < q.poset().size(); ++b) ok = ok && q.poset().leq(a, b) == q.defined_leq(a, b);
    CHECK(ok);
  }
}

TEST_CASE("face naming multiplicities") {
  // Each signed face arises from exactly 2^(n - |ext(sigma)|) sign patterns.
  for (const auto& e : small_corpus()) {
    CAPTURE(e.name);
    ClosedSetLattice l(e.geometry);
    QPoset q(l);
    const int n = e.geometry.size();
    auto base = order_complex([&] {
      std::vector<int> keep;
      for (int i = 1; i < l.size(); ++i) keep.push_back(i);
      return l.poset().convex_subposet(keep, true);
    }());
    bool ok = true;
    for (const auto& faces : base.faces_by_dimension()) {
      for (const auto& face : faces) {
        Subset ext_sigma;
        std::vector<Subset> sets;
        for (auto v : face) {
          auto idx = l.poset().find(base.label(v));
          sets.push_back(l.set(*idx));
          ext_sigma = ext_sigma | l.ext(*idx);
        }
        std::map<std::vector<int>, int> count;
        for (std::uint32_t eps = 0; eps < (1u << n); ++eps) {
          std::vector<int> named;
          for (Subset s : sets) named.push_back(q.index_of(s, Subset(eps)));
          std::sort(named.begin(), named.end());
          ++count[named];
        }
        for (const auto& [named, c] : count) ok = ok && c == (1 << (n - ext_sigma.size()));
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("sphere structure on the corpus") {
  for (const auto& e : small_corpus()) {
    CAPTURE(e.name);
    ClosedSetLattice l(e.geometry);
    QPoset q(l);
    auto pm = reflect(l);
    const int n = e.geometry.size();
    CHECK(verify_pm_delta(q, pm));
    CHECK(pseudomanifold_check(pm).closed);
    CHECK(euler_characteristic(pm) == 1 + (n % 2 == 1 ? 1 : -1));
    CHECK(has_sign_flip_symmetry(q, pm));
    CHECK(q_is_eulerian(q));
    CHECK(q.poset().covers_down(q.top()).size() == (1u << l.ext(l.top()).size()));
    auto h = h_polynomial(pm).coeffs;
    CHECK(std::equal(h.begin(), h.end(), h.rbegin()));
    CHECK(f_vector(pm) == oracle_f_vector(pm));
    CHECK(pm.facet_count() == l.poset().maximal_chains().size() << n);
  }
}

TEST_CASE("join orientation built directly equals the dual") {
  for (const auto& e : small_corpus()) {
    CAPTURE(e.name);
    ClosedSetLattice l(e.geometry);
    CHECK(build_q_poset_join(l) == QPoset(l).join_orientation());
  }
}

TEST_CASE("fibers of the zero map") {
  auto l = three_collinear();
  QPoset q(l);
  CHECK(fiber_count(q, {Subset()}) == 1);
  CHECK(fiber_product(l, {Subset()}) == 1);
  CHECK(fiber_count(q, {S({2}), Subset()}) == 2);
  CHECK(fiber_product(l, {S({1, 2, 3}), Subset()}) == 4);
  for (const auto& c : chains_to_top(l)) CHECK(fiber_count(q, c) == fiber_product(l, c));
  try {
    fiber_count(q, {S({1, 3}), Subset()});
    FAIL("non-closed set accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ChainNotInL);
  }
  try {
    fiber_count(q, {S({1, 2}), S({1})});
    FAIL("chain not ending at the top accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ChainMustEndAtTop);
  }
  CHECK_THROWS_AS(fiber_count(q, {S({1}), S({1, 2}), Subset()}), Error);
}

TEST_CASE("fiber counts agree with grouped chain enumeration") {
  for (const auto& e : small_corpus()) {
    CAPTURE(e.name);
    ClosedSetLattice l(e.geometry);
    QPoset q(l);
    const auto grouped = oracle_fibers(q);
    const auto chains = chains_to_top(l);
    std::size_t nonzero = 0;
    for (const auto& c : chains) {
      auto it = grouped.find(c);
      const std::int64_t expected = it == grouped.end() ? 0 : it->second;
      nonzero += expected != 0;
      CHECK(fiber_count(q, c) == expected);
      CHECK(fiber_product(l, c) == expected);
    }
    CHECK(nonzero == grouped.size());
  }
}

TEST_CASE("cells and their boundaries") {
  ClosedSetLattice b1(ConvexGeometry::boolean(1));
  QPoset q1(b1);
  const int plus = q1.index_of(S({1}), Subset());
  Cell c = cell(q1, plus);
  CHECK(c.facets == std::set<std::vector<int>>{{plus}});
  CHECK(boundary_cells(q1, plus).empty());
  CHECK_THROWS_AS(cell(q1, q1.bottom()), Error);
  CHECK_THROWS_AS(cell(q1, q1.top()), Error);

  auto l = three_collinear();
  QPoset q(l);
  const int top = q.index_of(S({1, 2, 3}), Subset());
  CHECK(cell(q, top).facets.size() == 8);
  for (const auto& e : small_corpus()) {
    CAPTURE(e.name);
    ClosedSetLattice lat(e.geometry);
    QPoset qq(lat);
    bool ok = true;
    for (int i = 1; i < qq.top(); ++i) {
      const SignedElement& owner = qq.element(i);
      const int li = *lat.index_of(owner.set);
      const std::size_t chains_below = lat.poset().interval(lat.bottom(), li).maximal_chains().size();
      const std::size_t expected = chains_below << (owner.set.size() - owner.extreme.size());
      ok = ok && cell(qq, i).facets.size() == expected;
      std::vector<int> direct;
      for (int j = 1; j < qq.top(); ++j) {
        const SignedElement& b = qq.element(j);
        if (b.set.proper_subset_of(owner.set) && b.below(owner)) direct.push_back(j);
      }
      ok = ok && boundary_cells(qq, i) == direct;
      ok = ok && verify_boundary_lemma(qq, i);
    }
    CHECK(ok);
  }
}

TEST_CASE("size caps") {
  try {
    QPoset q(ClosedSetLattice(ConvexGeometry::collinear(9)));
    FAIL("n > 8 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
  try {
    reflect(ClosedSetLattice(ConvexGeometry::boolean(4)), 100);
    FAIL("facet cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}

TEST_CASE("parallel and serial reflection agree") {
  for (const auto& e : small_corpus()) {
    ClosedSetLattice l(e.geometry);
    auto a = reflect(l);
    auto b = serial::reflect(l);
    CHECK(a.labels() == b.labels());
    CHECK(a.facets() == b.facets());
  }
}
