#include <doctest.h>

#include <string>

#include "cwsphere/error.hpp"
#include "cwsphere/io.hpp"

using namespace cwsphere;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_geometry(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::InvalidArgument;
}

std::string message_of(const std::string& text) {
  try {
    parse_geometry(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("geometry documents of every kind") {
  auto line = parse_geometry(R"({"n": 3, "kind": "points1d", "points": ["0", "1/2", "1"]})");
  CHECK(line.size() == 3);
  CHECK(line.closure(Subset::of({1, 3})) == Subset::of({1, 2, 3}));
  auto plane = parse_geometry(R"({"n": 4, "kind": "points2d", "points": [["0","0"],["2","0"],["0","2"],["1/2","1/2"]]})");
  CHECK(plane.closure(Subset::of({1, 2, 3})) == Subset::full(4));
  auto poset = parse_geometry(R"({"n": 3, "kind": "poset", "relations": [[1, 2]], "direction": "lower"})");
  CHECK(poset.is_closed(Subset::of({1})));
  CHECK_FALSE(poset.is_closed(Subset::of({2})));
  auto upper = parse_geometry(R"({"n": 3, "kind": "poset", "relations": [[1, 2]], "direction": "upper"})");
  CHECK(upper.is_closed(Subset::of({2})));
  CHECK_FALSE(upper.is_closed(Subset::of({1})));
  auto family = parse_geometry(R"({"n": 2, "kind": "family", "sets": [[], [1], [2], [1, 2]]})");
  CHECK(family.is_closed(Subset::of({2})));
}

TEST_CASE("geometry round trip through JSON") {
  const char* docs[] = {
      R"({"n": 3, "kind": "points1d", "points": ["0", "1/2", "1"], "labels": ["a", "b", "c"]})",
      R"({"n": 3, "kind": "poset", "relations": [[1, 2], [1, 3]], "direction": "upper"})",
      R"({"n": 2, "kind": "family", "sets": [[], [1], [2], [1, 2]]})",
  };
  for (const char* d : docs) {
    auto g = parse_geometry(d);
    auto again = parse_geometry(geometry_to_json(g).dump());
    CHECK(enumerate_closed_sets(g) == enumerate_closed_sets(again));
    CHECK(geometry_to_json(g).dump() == geometry_to_json(again).dump());
  }
}

TEST_CASE("malformed input reports a position") {
  const std::string text = "{\"n\": 3, \"kind\": \"points1d\",\n  \"points\": [\"0\", \"1\" \"2\"]}";
  CHECK(kind_of(text) == ErrorKind::ParseError);
  CHECK(message_of(text).find("line 2") != std::string::npos);
}

TEST_CASE("strict schema") {
  CHECK(kind_of(R"({"n": 1, "kind": "points1d", "points": ["0"], "colour": 1})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"n": 2, "kind": "points1d", "points": ["0"]})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"n": 1, "kind": "nonsense"})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"kind": "points1d", "points": ["0"]})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"n": 1, "kind": "points1d", "points": ["x"]})") == ErrorKind::ParseError);
  CHECK(kind_of(R"([1, 2])") == ErrorKind::ParseError);
}

TEST_CASE("families violating the axioms are rejected") {
  try {
    auto g = parse_geometry(R"({"n": 2, "kind": "family", "sets": [[], [1, 2]]})");
    require_valid(g);
    FAIL("accepted a family without anti-exchange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidGeometry);
  }
}

TEST_CASE("poset documents") {
  auto p = parse_poset(R"({"elements": ["p", "q", "r", "s"], "covers": [["p", "r"], ["p", "s"], ["q", "r"], ["q", "s"]]})");
  CHECK(p.size() == 4);
  CHECK(p.leq(*p.find("p"), *p.find("r")));
  CHECK_FALSE(p.leq(*p.find("p"), *p.find("q")));
  auto j = poset_to_json(p);
  CHECK(j["elements"].size() == 4);
  const std::string dot = poset_to_dot(p);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("n" + std::to_string(*p.find("p")) + " -> n" + std::to_string(*p.find("r"))) != std::string::npos);
  CHECK(dot.find("label=\"s\"") != std::string::npos);
  auto g = upper_ideal_geometry(p);
  CHECK(g.size() == 4);
  CHECK(g.is_closed(Subset::of({3})));
  CHECK_FALSE(g.is_closed(Subset::of({1})));
  CHECK(is_geometry_document(R"({"n": 1, "kind": "points1d", "points": ["0"]})"));
  CHECK_FALSE(is_geometry_document(R"({"elements": [], "covers": []})"));
  CHECK_THROWS_AS(parse_poset(R"({"elements": ["a"], "covers": [["a", "b"]]})"), Error);
}

TEST_CASE("exports of the reflected complex") {
  ClosedSetLattice l(parse_geometry(R"({"n": 3, "kind": "points1d", "points": ["0", "1/2", "1"]})"));
  QPoset q(l);
  auto pm = reflect(l);
  auto j = complex_to_json(pm);
  CHECK(j["facets"].size() == 32);
  CHECK(j["f_vector"] == Json::array({18, 48, 32}));
  const std::string off = complex_to_off(pm, q);
  CHECK(off.rfind("OFF", 0) == 0);
  CHECK(off.find("18 32 ") != std::string::npos);
  auto qj = q_poset_to_json(q);
  CHECK(qj["elements"].size() == static_cast<std::size_t>(q.poset().size()));
  CHECK(complex_to_json(pm).dump() == complex_to_json(reflect(l)).dump());
}

TEST_CASE("quasisymmetric functions round trip") {
  FlagQSym f;
  f.degree = 3;
  f.coeffs[{3}] = 2;
  f.coeffs[{1, 2}] = 5;
  f.coeffs[{1, 1, 1}] = 1;
  auto j = qsym_to_json(f);
  CHECK(j.dump() == R"({"1.1.1":1,"1.2":5,"3":2})");
  CHECK(qsym_from_json(j, 3) == f);
  CHECK(polynomial_to_json(RationalPolynomial::from_integers({1, 0, 3})).dump() == R"(["1","0","3"])");
  CHECK(subset_to_json(Subset::of({1, 3})).dump() == "[1,3]");
}
