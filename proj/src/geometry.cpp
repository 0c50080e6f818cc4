#include "cwsphere/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "cwsphere/error.hpp"

namespace cwsphere {

namespace {

bool is_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(det);
}

bool on_segment(const Point2& p, const Point2& q, const Point2& r) {
  if (orientation(p, q, r) != 0) return false;
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
         std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

bool in_triangle(const Point2& a, const Point2& b, const Point2& c, const Point2& r) {
  int o1 = orientation(a, b, r);
  int o2 = orientation(b, c, r);
  int o3 = orientation(c, a, r);
  bool has_neg = o1 < 0 || o2 < 0 || o3 < 0;
  bool has_pos = o1 > 0 || o2 > 0 || o3 > 0;
  return !(has_neg && has_pos);
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

void check_size(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidGeometry, "negative ground-set size");
  if (n > kMaxGroundSet) {
    throw Error(ErrorKind::GroundSetTooLarge,
                "n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxGroundSet));
  }
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  std::size_t slash = text.find('/');
  bool ok = slash == std::string::npos ? is_digits(text, start, text.size())
                                       : is_digits(text, start, slash) && is_digits(text, slash + 1, text.size());
  if (!ok) throw Error(ErrorKind::ParseError, "malformed rational \"" + text + "\"");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  q.set_str(body, 10);
  if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

ConvexGeometry::ConvexGeometry(int n, Representation rep, std::vector<std::string> labels)
    : n_(n), rep_(std::move(rep)), labels_(std::move(labels)) {
  check_size(n_);
  if (labels_.empty()) labels_ = default_labels(n_);
  if (static_cast<int>(labels_.size()) != n_) {
    throw Error(ErrorKind::InvalidGeometry, "label count does not match n");
  }

  if (auto* p1 = std::get_if<Points1D>(&rep_)) {
    if (static_cast<int>(p1->coords.size()) != n_) throw Error(ErrorKind::InvalidGeometry, "point count does not match n");
    std::set<Rational> seen(p1->coords.begin(), p1->coords.end());
    if (static_cast<int>(seen.size()) != n_) throw Error(ErrorKind::InvalidGeometry, "points must be distinct");
  } else if (auto* p2 = std::get_if<Points2D>(&rep_)) {
    const auto& pts = p2->points;
    if (static_cast<int>(pts.size()) != n_) throw Error(ErrorKind::InvalidGeometry, "point count does not match n");
    std::set<std::pair<Rational, Rational>> seen;
    for (const auto& p : pts) seen.emplace(p.x, p.y);
    if (static_cast<int>(seen.size()) != n_) throw Error(ErrorKind::InvalidGeometry, "points must be distinct");
    const auto un = static_cast<std::size_t>(n_);
    segment_.assign(un * un, Subset{});
    triangle_.assign(un * un * un, Subset{});
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        Subset seg;
        for (int r = 0; r < n_; ++r) {
          if (on_segment(pts[i], pts[j], pts[r])) seg = seg.with(r + 1);
        }
        segment_[i * un + j] = seg;
        for (int k = j + 1; k < n_; ++k) {
          if (orientation(pts[i], pts[j], pts[k]) == 0) continue;
          Subset tri;
          for (int r = 0; r < n_; ++r) {
            if (in_triangle(pts[i], pts[j], pts[k], pts[r])) tri = tri.with(r + 1);
          }
          triangle_[(i * un + j) * un + k] = tri;
        }
      }
    }
  } else if (auto* pi = std::get_if<PosetIdeal>(&rep_)) {
    // Transitive closure of the strict relation, then principal ideals.
    std::vector<Subset> above(n_ + 1);  // above[a] = {b : a < b}
    for (auto [a, b] : pi->relations) {
      if (a < 1 || a > n_ || b < 1 || b > n_) throw Error(ErrorKind::InvalidGeometry, "poset relation out of range");
      if (a == b) throw Error(ErrorKind::InvalidGeometry, "poset relation is not strict");
      above[a] = above[a].with(b);
    }
    for (int k = 1; k <= n_; ++k) {
      for (int i = 1; i <= n_; ++i) {
        if (above[i].contains(k)) above[i] = above[i] | above[k];
      }
    }
    for (int i = 1; i <= n_; ++i) {
      if (above[i].contains(i)) throw Error(ErrorKind::InvalidGeometry, "poset relations contain a cycle");
    }
    ideal_of_.assign(n_ + 1, Subset{});
    for (int i = 1; i <= n_; ++i) {
      if (pi->direction == IdealDirection::Upper) {
        ideal_of_[i] = above[i].with(i);
      } else {
        Subset below = Subset::singleton(i);
        for (int j = 1; j <= n_; ++j) {
          if (above[j].contains(i)) below = below.with(j);
        }
        ideal_of_[i] = below;
      }
    }
  } else if (auto* fam = std::get_if<ExplicitFamily>(&rep_)) {
    std::set<Subset, CanonicalLess> uniq;
    for (Subset s : fam->sets) {
      if (!s.subset_of(ground())) throw Error(ErrorKind::InvalidGeometry, "family set " + s.to_string() + " outside [n]");
      uniq.insert(s);
    }
    if (!uniq.count(Subset{})) {
      throw Error(ErrorKind::InvalidGeometry, "family must contain the empty set (closure of the empty set must be empty)");
    }
    if (!uniq.count(ground())) throw Error(ErrorKind::InvalidGeometry, "family must contain the ground set [n]");
    sets_.assign(uniq.begin(), uniq.end());
  }
}

ConvexGeometry ConvexGeometry::points1d(std::vector<Rational> coords) {
  int n = static_cast<int>(coords.size());
  return ConvexGeometry(n, Points1D{std::move(coords)});
}

ConvexGeometry ConvexGeometry::points2d(std::vector<Point2> points) {
  int n = static_cast<int>(points.size());
  return ConvexGeometry(n, Points2D{std::move(points)});
}

ConvexGeometry ConvexGeometry::poset_ideal(int n, std::vector<std::pair<int, int>> relations, IdealDirection dir) {
  return ConvexGeometry(n, PosetIdeal{std::move(relations), dir});
}

ConvexGeometry ConvexGeometry::family(int n, std::vector<Subset> sets) {
  return ConvexGeometry(n, ExplicitFamily{std::move(sets)});
}

ConvexGeometry ConvexGeometry::boolean(int n) { return poset_ideal(n, {}, IdealDirection::Lower); }

ConvexGeometry ConvexGeometry::collinear(int n) {
  std::vector<Rational> coords;
  for (int i = 1; i <= n; ++i) coords.emplace_back(i);
  return points1d(std::move(coords));
}

std::string ConvexGeometry::kind() const {
  switch (rep_.index()) {
    case 0: return "points1d";
    case 1: return "points2d";
    case 2: return "poset";
    default: return "family";
  }
}

Subset ConvexGeometry::closure(Subset a) const {
  if (a.empty()) return a;
  switch (rep_.index()) {
    case 0: {
      const auto& xs = std::get<Points1D>(rep_).coords;
      const Rational* lo = nullptr;
      const Rational* hi = nullptr;
      for_each_element(a, [&](int i) {
        const Rational& x = xs[i - 1];
        if (!lo || x < *lo) lo = &x;
        if (!hi || x > *hi) hi = &x;
      });
      Subset out;
      for (int i = 1; i <= n_; ++i) {
        if (*lo <= xs[i - 1] && xs[i - 1] <= *hi) out = out.with(i);
      }
      return out;
    }
    case 1: return closure_points2d(a);
    case 2: {
      Subset out;
      for_each_element(a, [&](int i) { out = out | ideal_of_[i]; });
      return out;
    }
    default: return closure_family(a);
  }
}

Subset ConvexGeometry::closure_points2d(Subset a) const {
  const auto un = static_cast<std::size_t>(n_);
  std::vector<int> el = a.elements();
  Subset out = a;
  for (std::size_t p = 0; p < el.size(); ++p) {
    for (std::size_t q = p + 1; q < el.size(); ++q) {
      const std::size_t i = el[p] - 1, j = el[q] - 1;
      out = out | segment_[i * un + j];
      for (std::size_t r = q + 1; r < el.size(); ++r) {
        out = out | triangle_[(i * un + j) * un + (el[r] - 1)];
      }
    }
  }
  return out;
}

Subset ConvexGeometry::closure_family(Subset a) const {
  Subset out = ground();
  for (Subset s : sets_) {
    if (a.subset_of(s)) out = out & s;
  }
  return out;
}

Subset ConvexGeometry::extreme_points(Subset a) const {
  Subset c = closure(a);
  Subset ext;
  for_each_element(c, [&](int i) {
    if (!closure(c.without(i)).contains(i)) ext = ext.with(i);
  });
  return ext;
}

ValidationReport validate(const ConvexGeometry& g) {
  const int n = g.size();
  if (n > 12) throw Error(ErrorKind::ResourceLimit, "exhaustive validation is limited to n <= 12");
  const std::uint32_t count = 1u << n;
  std::vector<Subset> cl(count);
  for (std::uint32_t m = 0; m < count; ++m) cl[m] = g.closure(Subset(m));

  ValidationReport report;
  auto add = [&](int axiom, Subset a, Subset b, int x, int y, std::string msg) {
    report.violations.push_back(AxiomViolation{axiom, a, b, x, y, std::move(msg)});
  };

  if (!cl[0].empty()) add(0, Subset{}, cl[0], 0, 0, "closure of the empty set is nonempty");

  if (const auto* fam = std::get_if<ExplicitFamily>(&g.representation())) {
    std::set<Subset, CanonicalLess> members(fam->sets.begin(), fam->sets.end());
    for (auto it = members.begin(); it != members.end(); ++it) {
      for (auto jt = std::next(it); jt != members.end(); ++jt) {
        Subset meet = *it & *jt;
        if (!members.count(meet)) {
          add(0, *it, *jt, 0, 0, "family not closed under intersection: " + it->to_string() + " & " +
                                     jt->to_string() + " = " + meet.to_string() + " missing");
        }
      }
    }
  }

  for (std::uint32_t m = 0; m < count; ++m) {
    Subset a(m);
    if (!a.subset_of(cl[m])) add(1, a, cl[m], 0, 0, "A not contained in its closure");
    if (cl[cl[m].bits()] != cl[m]) add(3, a, cl[m], 0, 0, "closure not idempotent");
  }

  // Axiom 2 over all pairs A subset of B (3^n pairs).
  for (std::uint32_t b = 0; b < count; ++b) {
    for (std::uint32_t a = b;; a = (a - 1) & b) {
      if (!cl[a].subset_of(cl[b])) add(2, Subset(a), Subset(b), 0, 0, "closure not monotone");
      if (a == 0) break;
    }
  }

  // Anti-exchange.
  for (std::uint32_t m = 0; m < count; ++m) {
    Subset a(m);
    Subset ca = cl[m];
    for (int x = 1; x <= n; ++x) {
      if (ca.contains(x)) continue;
      for (int y = x + 1; y <= n; ++y) {
        if (ca.contains(y)) continue;
        bool x_in = cl[(a.with(y)).bits()].contains(x);
        bool y_in = cl[(a.with(x)).bits()].contains(y);
        if (x_in && y_in) {
          add(4, a, Subset{}, x, y,
              "anti-exchange fails: " + std::to_string(x) + " in <A+" + std::to_string(y) + "> and " +
                  std::to_string(y) + " in <A+" + std::to_string(x) + ">");
        }
      }
    }
  }

  // Accessibility pre-check.
  for (std::uint32_t m = 0; m < count; ++m) {
    if (cl[m] != Subset(m) || Subset(m) == g.ground()) continue;
    bool extends = false;
    for (int x = 1; x <= n && !extends; ++x) {
      if (!Subset(m).contains(x) && cl[Subset(m).with(x).bits()] == Subset(m).with(x)) extends = true;
    }
    if (!extends) {
      report.accessible = false;
      break;
    }
  }
  return report;
}

void require_valid(const ConvexGeometry& g) {
  ValidationReport r = validate(g);
  if (r.valid()) return;
  const auto& v = r.violations.front();
  throw Error(ErrorKind::InvalidGeometry, "axiom " + std::to_string(v.axiom) + " violated with A = " +
                                              v.a.to_string() + ": " + v.message);
}

std::vector<Subset> enumerate_closed_sets(const ConvexGeometry& g) {
  const int n = g.size();
  check_size(n);
  std::vector<Subset> out;
  if (const auto* fam = std::get_if<ExplicitFamily>(&g.representation())) {
    // Intersection closure of the family is exactly the set of closed sets.
    std::set<Subset, CanonicalLess> closed(fam->sets.begin(), fam->sets.end());
    closed.insert(g.ground());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Subset> cur(closed.begin(), closed.end());
      for (std::size_t i = 0; i < cur.size(); ++i) {
        for (std::size_t j = i + 1; j < cur.size(); ++j) {
          if (closed.insert(cur[i] & cur[j]).second) grew = true;
        }
      }
    }
    out.assign(closed.begin(), closed.end());
    return out;
  }
  const std::uint32_t count = 1u << n;
  for (std::uint32_t m = 0; m < count; ++m) {
    if (g.is_closed(Subset(m))) out.push_back(Subset(m));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

ConvexGeometry one_point_extension(const ConvexGeometry& g) {
  const int n = g.size();
  std::vector<Subset> sets = enumerate_closed_sets(g);
  sets.push_back(Subset::full(n + 1));
  std::vector<std::string> labels = g.labels();
  std::string extra = std::to_string(n + 1);
  while (std::find(labels.begin(), labels.end(), extra) != labels.end()) extra += "'";
  labels.push_back(extra);
  return ConvexGeometry(n + 1, ExplicitFamily{std::move(sets)}, std::move(labels));
}

}  // namespace cwsphere
