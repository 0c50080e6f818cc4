#include "cwsphere/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cwsphere/error.hpp"

namespace cwsphere {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::ParseError, message); }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
}

void require_keys(const Json& j, const std::set<std::string>& required, const std::set<std::string>& optional) {
  if (!j.is_object()) fail("expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!required.count(key) && !optional.count(key)) fail("unknown key '" + key + "'");
  }
  for (const auto& key : required) {
    if (!j.contains(key)) fail("missing key '" + key + "'");
  }
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < -1'000'000 || v > 1'000'000) fail(what + " is out of range");
  return static_cast<int>(v);
}

Rational as_rational(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(what + " must be a rational string \"p/q\" or an integer");
}

const Json& as_array(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(what + " must be an array");
  return j;
}

Subset as_subset(const Json& j, int n, const std::string& what) {
  Subset s;
  for (const auto& e : as_array(j, what)) {
    const int a = as_int(e, what + " element");
    if (a < 1 || a > n) fail(what + " element " + std::to_string(a) + " is outside [1, " + std::to_string(n) + "]");
    if (s.contains(a)) fail(what + " repeats element " + std::to_string(a));
    s = s.with(a);
  }
  return s;
}

std::string signs_label(int a) { return std::to_string(a); }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_geometry_document(const std::string& text) {
  const Json j = parse_json(text);
  return j.is_object() && j.contains("kind");
}

ConvexGeometry parse_geometry(const std::string& text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) fail("missing string key 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (!j.contains("n")) fail("missing key 'n'");
  const int n = as_int(j["n"], "n");
  if (n < 0) fail("n must be nonnegative");
  if (n > kMaxGroundSet) throw Error(ErrorKind::GroundSetTooLarge, "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroundSet));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : as_array(j["labels"], "labels")) {
      if (!l.is_string()) fail("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != n) fail("labels must have n entries");
  }
  auto check_count = [&](std::size_t count, const std::string& what) {
    if (static_cast<int>(count) != n) fail(what + " must have n = " + std::to_string(n) + " entries");
  };
  if (kind == "points1d") {
    require_keys(j, {"n", "kind", "points"}, {"labels"});
    std::vector<Rational> coords;
    for (const auto& p : as_array(j["points"], "points")) coords.push_back(as_rational(p, "point"));
    check_count(coords.size(), "points");
    return ConvexGeometry(n, Points1D{std::move(coords)}, std::move(labels));
  }
  if (kind == "points2d") {
    require_keys(j, {"n", "kind", "points"}, {"labels"});
    std::vector<Point2> pts;
    for (const auto& p : as_array(j["points"], "points")) {
      if (!p.is_array() || p.size() != 2) fail("each 2D point must be a pair [x, y]");
      pts.push_back({as_rational(p[0], "x"), as_rational(p[1], "y")});
    }
    check_count(pts.size(), "points");
    return ConvexGeometry(n, Points2D{std::move(pts)}, std::move(labels));
  }
  if (kind == "poset") {
    require_keys(j, {"n", "kind", "relations", "direction"}, {"labels"});
    std::vector<std::pair<int, int>> rel;
    for (const auto& r : as_array(j["relations"], "relations")) {
      if (!r.is_array() || r.size() != 2) fail("each relation must be a pair [a, b] meaning a < b");
      const int a = as_int(r[0], "relation");
      const int b = as_int(r[1], "relation");
      if (a < 1 || a > n || b < 1 || b > n) fail("relation element outside [1, n]");
      rel.emplace_back(a, b);
    }
    if (!j["direction"].is_string()) fail("direction must be \"lower\" or \"upper\"");
    const std::string dir = j["direction"].get<std::string>();
    if (dir != "lower" && dir != "upper") fail("direction must be \"lower\" or \"upper\"");
    return ConvexGeometry(n, PosetIdeal{std::move(rel), dir == "upper" ? IdealDirection::Upper : IdealDirection::Lower},
                          std::move(labels));
  }
  if (kind == "family") {
    require_keys(j, {"n", "kind", "sets"}, {"labels"});
    std::vector<Subset> sets;
    for (const auto& s : as_array(j["sets"], "sets")) sets.push_back(as_subset(s, n, "set"));
    return ConvexGeometry(n, ExplicitFamily{std::move(sets)}, std::move(labels));
  }
  fail("unknown kind '" + kind + "'");
}

Json subset_to_json(Subset s) {
  Json a = Json::array();
  for (int i : s.elements()) a.push_back(i);
  return a;
}

Json geometry_to_json(const ConvexGeometry& g) {
  Json j;
  j["n"] = g.size();
  j["kind"] = g.kind();
  std::visit(
      [&](const auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, Points1D>) {
          j["points"] = Json::array();
          for (const auto& c : rep.coords) j["points"].push_back(rational_to_string(c));
        } else if constexpr (std::is_same_v<T, Points2D>) {
          j["points"] = Json::array();
          for (const auto& p : rep.points) j["points"].push_back({rational_to_string(p.x), rational_to_string(p.y)});
        } else if constexpr (std::is_same_v<T, PosetIdeal>) {
          j["relations"] = Json::array();
          for (auto [a, b] : rep.relations) j["relations"].push_back({a, b});
          j["direction"] = rep.direction == IdealDirection::Upper ? "upper" : "lower";
        } else {
          j["sets"] = Json::array();
          for (Subset s : rep.sets) j["sets"].push_back(subset_to_json(s));
        }
      },
      g.representation());
  j["labels"] = g.labels();
  return j;
}

GradedPoset parse_poset(const std::string& text) {
  const Json j = parse_json(text);
  require_keys(j, {"elements", "covers"}, {});
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  for (const auto& e : as_array(j["elements"], "elements")) {
    if (!e.is_string()) fail("poset elements must be strings");
    const std::string label = e.get<std::string>();
    if (index.count(label)) fail("duplicate element '" + label + "'");
    index[label] = static_cast<int>(labels.size());
    labels.push_back(label);
  }
  if (labels.empty()) fail("a poset needs at least one element");
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : as_array(j["covers"], "covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
      fail("each cover must be a pair of element labels [lower, upper]");
    }
    auto lo = index.find(c[0].get<std::string>());
    auto hi = index.find(c[1].get<std::string>());
    if (lo == index.end() || hi == index.end()) fail("cover refers to an unknown element");
    covers.emplace_back(lo->second, hi->second);
  }
  return GradedPoset(std::move(labels), std::move(covers));
}

ConvexGeometry upper_ideal_geometry(const GradedPoset& p) {
  if (p.size() > kMaxGroundSet) {
    throw Error(ErrorKind::GroundSetTooLarge, "poset has " + std::to_string(p.size()) + " elements, above " +
                                                  std::to_string(kMaxGroundSet));
  }
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : p.cover_pairs()) rel.emplace_back(a + 1, b + 1);
  return ConvexGeometry(p.size(), PosetIdeal{std::move(rel), IdealDirection::Upper}, p.labels());
}

Json poset_to_json(const GradedPoset& p) {
  Json j;
  j["elements"] = p.labels();
  j["covers"] = Json::array();
  for (auto [a, b] : p.cover_pairs()) j["covers"].push_back({p.label(a), p.label(b)});
  j["ranks"] = Json::array();
  for (int i = 0; i < p.size(); ++i) j["ranks"].push_back(p.rank(i));
  return j;
}

std::string poset_to_dot(const GradedPoset& p, const std::string& name) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::map<int, std::vector<int>> layers;
  for (int i = 0; i < p.size(); ++i) layers[p.rank(i)].push_back(i);
  for (const auto& [rank, elems] : layers) {
    out << "  { rank=same;";
    for (int e : elems) out << " n" << e << " [label=" << quote(p.label(e)) << "];";
    out << " }\n";
  }
  for (auto [a, b] : p.cover_pairs()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

Json complex_to_json(const SimplicialComplex& c) {
  Json j;
  j["vertices"] = c.labels();
  j["facets"] = Json::array();
  for (const auto& f : c.facets()) j["facets"].push_back(f);
  j["f_vector"] = f_vector(c);
  return j;
}

std::string complex_to_off(const SimplicialComplex& pm_delta, const QPoset& q) {
  const int n = q.lattice().ground_size();
  if (n > 3) throw Error(ErrorKind::InvalidArgument, "OFF export needs n <= 3");
  std::ostringstream out;
  out << "OFF\n" << pm_delta.vertex_count() << ' ' << pm_delta.facet_count() << " 0\n";
  for (const auto& label : pm_delta.labels()) {
    auto idx = q.poset().find(label);
    if (!idx || !q.is_proper(*idx)) throw Error(ErrorKind::InvalidArgument, "vertex '" + label + "' is not in Q_L");
    const SignedElement& e = q.element(*idx);
    std::vector<Rational> x(3, 0);
    const Rational weight(1, e.extreme.size());
    for_each_element(e.extreme, [&](int a) { x[a - 1] = e.negative.contains(a) ? -weight : weight; });
    for (int i = 0; i < 3; ++i) out << (i ? " " : "") << x[i].get_d();
    out << '\n';
  }
  for (const auto& f : pm_delta.facets()) {
    out << f.size();
    for (auto v : f) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Json q_poset_to_json(const QPoset& q) {
  Json j;
  j["rank"] = q.poset().rank(q.top());
  j["elements"] = Json::array();
  for (int i = 0; i < q.poset().size(); ++i) {
    Json e;
    e["index"] = i;
    e["label"] = q.poset().label(i);
    e["rank"] = q.poset().rank(i);
    if (i == q.top()) {
      e["formal_top"] = true;
    } else {
      const SignedElement& s = q.element(i);
      e["set"] = subset_to_json(s.set);
      Json signs = Json::object();
      for_each_element(s.extreme, [&](int a) { signs[signs_label(a)] = s.sign(a); });
      e["signs"] = signs;
    }
    j["elements"].push_back(e);
  }
  j["covers"] = Json::array();
  for (auto [a, b] : q.poset().cover_pairs()) j["covers"].push_back({a, b});
  return j;
}

Json cell_to_json(const QPoset& q, const Cell& c) {
  Json j;
  j["owner"] = q.poset().label(c.owner);
  j["facets"] = Json::array();
  for (const auto& f : c.facets) {
    Json labels = Json::array();
    for (int v : f) labels.push_back(q.poset().label(v));
    j["facets"].push_back(labels);
  }
  j["boundary"] = Json::array();
  for (int b : boundary_cells(q, c.owner)) j["boundary"].push_back(q.poset().label(b));
  return j;
}

Json qsym_to_json(const FlagQSym& f) {
  std::map<std::string, std::int64_t> sorted;
  for (const auto& [c, v] : f.coeffs) sorted[composition_key(c)] = v;
  Json j = Json::object();
  for (const auto& [k, v] : sorted) j[k] = v;
  return j;
}

FlagQSym qsym_from_json(const Json& j, int degree) {
  if (!j.is_object()) fail("a quasisymmetric function must be a JSON object");
  FlagQSym f{degree, {}};
  for (const auto& [key, value] : j.items()) {
    Composition c = parse_composition(key);
    int sum = 0;
    for (int part : c) sum += part;
    if (sum != degree) fail("composition '" + key + "' does not have degree " + std::to_string(degree));
    if (!value.is_number_integer()) fail("coefficient of '" + key + "' must be an integer");
    if (value.get<std::int64_t>() != 0) f.coeffs[c] = value.get<std::int64_t>();
  }
  return f;
}

Json polynomial_to_json(const RationalPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_to_string(c));
  return a;
}

Json int_vector_to_json(const std::vector<std::int64_t>& v) { return Json(v); }

}  // namespace cwsphere
