#include "cwsphere/qsym.hpp"

#include <set>

#include "cwsphere/error.hpp"
#include "cwsphere/sphere.hpp"
#include "parallel.hpp"

namespace cwsphere {

std::string composition_key(const Composition& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(c[i]);
  }
  return s;
}

Composition parse_composition(const std::string& key) {
  Composition c;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t dot = key.find('.', pos);
    if (dot == std::string::npos) dot = key.size();
    const std::string part = key.substr(pos, dot - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6) {
      throw Error(ErrorKind::ParseError, "bad composition key '" + key + "'");
    }
    const int v = std::stoi(part);
    if (v < 1) throw Error(ErrorKind::ParseError, "composition parts must be positive in '" + key + "'");
    c.push_back(v);
    pos = dot + 1;
  }
  return c;
}

std::int64_t FlagQSym::coefficient(const Composition& c) const {
  auto it = coeffs.find(c);
  return it == coeffs.end() ? 0 : it->second;
}

FlagQSym FlagQSym::scaled(std::int64_t k) const {
  FlagQSym out{degree, {}};
  for (const auto& [c, v] : coeffs) {
    const std::int64_t w = checked_mul(v, k);
    if (w) out.coeffs[c] = w;
  }
  return out;
}

std::vector<QSymMismatch> qsym_diff(const FlagQSym& lhs, const FlagQSym& rhs) {
  std::set<Composition> keys;
  for (const auto& [c, v] : lhs.coeffs) keys.insert(c);
  for (const auto& [c, v] : rhs.coeffs) keys.insert(c);
  std::vector<QSymMismatch> out;
  for (const auto& c : keys) {
    const std::int64_t a = lhs.coefficient(c);
    const std::int64_t b = rhs.coefficient(c);
    if (a != b) out.push_back({c, a, b});
  }
  if (lhs.degree != rhs.degree && out.empty()) out.push_back({{}, lhs.degree, rhs.degree});
  return out;
}

namespace {

using Table = std::map<Composition, std::int64_t>;

std::pair<int, int> endpoints(const GradedPoset& p) {
  auto b = p.bottom();
  if (!b) throw Error(ErrorKind::No0Hat, "flag enumeration requires a unique minimal element");
  auto t = p.top();
  if (!t) throw Error(ErrorKind::No1Hat, "flag enumeration requires a unique maximal element");
  return {*b, *t};
}

// weight(s, t) multiplies each step s < t; chains are grown from the bottom.
template <class Weight>
FlagQSym chain_table(const GradedPoset& p, Weight weight) {
  auto [bottom, top] = endpoints(p);
  std::vector<Table> tables(p.size());
  tables[bottom][Composition{}] = 1;
  for (int t : p.linear_order()) {
    if (t == bottom) continue;
    Table& out = tables[t];
    for (int s : p.interval_elements(bottom, t)) {
      if (s == t) continue;
      const std::int64_t w = weight(s, t);
      if (!w) continue;
      const int jump = p.rank_between(s, t);
      for (const auto& [c, v] : tables[s]) {
        Composition next = c;
        next.push_back(jump);
        std::int64_t& slot = out[next];
        slot = checked_add(slot, checked_mul(v, w));
      }
    }
  }
  FlagQSym f{p.rank_between(bottom, top), {}};
  for (const auto& [c, v] : tables[top]) {
    if (v) f.coeffs[c] = v;
  }
  return f;
}

}  // namespace

FlagQSym flag_f(const GradedPoset& p) {
  return chain_table(p, [](int, int) { return std::int64_t{1}; });
}

FlagQSym theta_of_poset(const GradedPoset& p) {
  endpoints(p);
  const auto nu = nu_table(p);
  return chain_table(p, [&](int s, int t) { return nu[s][t]; });
}

namespace serial {

FlagQSym theta_of_poset(const GradedPoset& p) {
  endpoints(p);
  const auto nu = serial::nu_table(p);
  return chain_table(p, [&](int s, int t) { return nu[s][t]; });
}

}  // namespace serial

MainTheoremReport verify_main_theorem(const ClosedSetLattice& lattice) {
  QPoset q(lattice);
  MainTheoremReport r;
  r.lhs = flag_f(q.join_orientation()).scaled(2);
  r.rhs = theta_of_poset(lattice.dual_with_bottom());
  r.mismatches = qsym_diff(r.lhs, r.rhs);
  r.holds = r.mismatches.empty();
  return r;
}

}  // namespace cwsphere
