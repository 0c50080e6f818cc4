#include "cwsphere/enriched.hpp"

#include <algorithm>
#include <set>

#include "cwsphere/error.hpp"
#include "parallel.hpp"

namespace cwsphere {

namespace {

struct ClosedEntry {
  Subset set;
  Subset ext;
};

std::vector<ClosedEntry> closed_entries(const ClosedSetLattice& lattice) {
  std::vector<ClosedEntry> out;
  for (int i = 1; i < lattice.size(); ++i) out.push_back({lattice.set(i), lattice.ext(i)});
  return out;
}

EnrichedCheck check_with(const ClosedSetLattice& lattice, const std::vector<ClosedEntry>& closed, const SignedFunction& f) {
  const int n = lattice.ground_size();
  if (static_cast<int>(f.size()) != n) {
    return {false, 0, {}, 0, "function has " + std::to_string(f.size()) + " values, expected " + std::to_string(n)};
  }
  for (int a = 1; a <= n; ++a) {
    if (f[a - 1] == 0) return {false, 0, {}, a, "f(" + std::to_string(a) + ") = 0"};
  }
  for (const auto& [set, ext] : closed) {
    int least = 0;
    for_each_element(set, [&](int a) {
      if (least == 0 || precedes(f[a - 1], least)) least = f[a - 1];
    });
    bool attained = false;
    for_each_element(ext, [&](int a) { attained = attained || f[a - 1] == least; });
    if (!attained) {
      return {false, 1, set, 0, "minimum " + std::to_string(least) + " on " + set.to_string() + " is not attained on ext"};
    }
  }
  for (int a = 1; a <= n; ++a) {
    if (f[a - 1] > 0) continue;
    Subset upper;
    for (int b = 1; b <= n; ++b) {
      if (precedes_eq(f[a - 1], f[b - 1])) upper = upper.with(b);
    }
    if (lattice.closure(upper.without(a)).contains(a)) {
      return {false, 2, upper, a, std::to_string(a) + " is not extreme in " + upper.to_string()};
    }
  }
  return {};
}

std::int64_t function_space(int n, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= 2 * m;
    if (total > kMaxEnrichedFunctions) {
      throw Error(ErrorKind::ResourceLimit, "(2m)^n exceeds " + std::to_string(kMaxEnrichedFunctions));
    }
  }
  return total;
}

void decode(std::int64_t index, int m, SignedFunction& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    const int d = static_cast<int>(index % (2 * m));
    index /= 2 * m;
    f[i] = d < m ? d - m : d - m + 1;
  }
}

constexpr std::int64_t kBlock = 4096;

}  // namespace

EnrichedCheck check_enriched_extremal(const ClosedSetLattice& lattice, const SignedFunction& f) {
  return check_with(lattice, closed_entries(lattice), f);
}

std::int64_t count_enriched(const ClosedSetLattice& lattice, int m) {
  const int n = lattice.ground_size();
  const std::int64_t total = function_space(n, m);
  const auto closed = closed_entries(lattice);
  const std::int64_t blocks = (total + kBlock - 1) / kBlock;
  std::vector<std::int64_t> partial(blocks, 0);
  detail::parallel_for(blocks, [&](std::int64_t b) {
    SignedFunction f(n);
    std::int64_t c = 0;
    for (std::int64_t i = b * kBlock; i < std::min(total, (b + 1) * kBlock); ++i) {
      decode(i, m, f);
      if (check_with(lattice, closed, f).ok) ++c;
    }
    partial[b] = c;
  });
  std::int64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

namespace serial {

std::int64_t count_enriched(const ClosedSetLattice& lattice, int m) {
  const int n = lattice.ground_size();
  const std::int64_t total = function_space(n, m);
  const auto closed = closed_entries(lattice);
  SignedFunction f(n);
  std::int64_t c = 0;
  for (std::int64_t i = 0; i < total; ++i) {
    decode(i, m, f);
    if (check_with(lattice, closed, f).ok) ++c;
  }
  return c;
}

}  // namespace serial

std::vector<SignedFunction> list_enriched(const ClosedSetLattice& lattice, int m) {
  const int n = lattice.ground_size();
  const std::int64_t total = function_space(n, m);
  const auto closed = closed_entries(lattice);
  std::vector<SignedFunction> out;
  SignedFunction f(n);
  for (std::int64_t i = 0; i < total; ++i) {
    decode(i, m, f);
    if (check_with(lattice, closed, f).ok) out.push_back(f);
  }
  return out;
}

SignedFunction multichain_to_function(const QPoset& q, const Multichain& chain) {
  const auto& lattice = q.lattice();
  const int n = lattice.ground_size();
  if (chain.size() < 2) throw Error(ErrorKind::NotAMultichain, "a multichain needs at least two entries");
  if (chain.front().set != Subset::full(n)) throw Error(ErrorKind::NotAMultichain, "multichain must start at [n]");
  if (!chain.back().set.empty()) throw Error(ErrorKind::NotAMultichain, "multichain must end at the empty set");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!q.index_of(chain[i]) || chain[i].extreme != lattice.ext_of(chain[i].set)) {
      throw Error(ErrorKind::NotAMultichain, "entry " + std::to_string(i) + " is not an element of Q_L");
    }
    if (i > 0 && !chain[i].below(chain[i - 1])) {
      throw Error(ErrorKind::NotAMultichain, "entry " + std::to_string(i) + " is not below entry " + std::to_string(i - 1));
    }
  }
  SignedFunction f(n, 0);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const SignedElement& prev = chain[i - 1];
    for_each_element(prev.set - chain[i].set, [&](int a) {
      const int v = static_cast<int>(i);
      f[a - 1] = (prev.extreme.contains(a) && prev.negative.contains(a)) ? -v : v;
    });
  }
  return f;
}

Multichain function_to_multichain(const QPoset& q, const SignedFunction& f, int m) {
  const auto& lattice = q.lattice();
  const int n = lattice.ground_size();
  EnrichedCheck check = check_enriched_extremal(lattice, f);
  if (!check.ok) throw Error(ErrorKind::NotExtremal, check.message);
  std::set<int> levels;
  Subset negative;
  for (int a = 1; a <= n; ++a) {
    const int v = f[a - 1];
    if (v > m || -v > m) throw Error(ErrorKind::InvalidArgument, "value " + std::to_string(v) + " exceeds m");
    levels.insert(v < 0 ? -v : v);
    if (v < 0) negative = negative.with(a);
  }
  Multichain chain;
  for (int i = 0; i <= m; ++i) {
    Subset a_i;
    auto next = levels.upper_bound(i);
    if (next != levels.end()) {
      for (int a = 1; a <= n; ++a) {
        if (precedes_eq(-*next, f[a - 1])) a_i = a_i.with(a);
      }
    }
    chain.push_back(SignedElement::make(lattice, a_i, negative));
  }
  return chain;
}

bool EnrichedReport::holds() const {
  auto all = [](const std::vector<EnrichedRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const EnrichedRow& r) { return r.match(); });
  };
  return all(zbar_rows) && all(extension_rows) && all(extension_zbar_rows);
}

EnrichedReport verify_prop_enriched(const ClosedSetLattice& lattice, int m_max) {
  QPoset q(lattice);
  const ZetaPolynomial z = zeta_polynomial(q.poset());
  const ZetaPolynomial zbar = zbar_polynomial(q.poset());
  ClosedSetLattice extended(one_point_extension(lattice.geometry()));
  QPoset q_ext(extended);
  const ZetaPolynomial zbar_ext = zbar_polynomial(q_ext.poset());
  EnrichedReport r;
  for (int m = 1; m <= m_max; ++m) {
    const std::int64_t twice_z = checked_mul(2, z.value(m));
    r.zbar_rows.push_back({m, zbar.value(m), count_enriched(lattice, m)});
    r.extension_rows.push_back({m, twice_z, count_enriched(extended, m)});
    r.extension_zbar_rows.push_back({m, twice_z, zbar_ext.value(m)});
  }
  return r;
}

namespace {

// Coefficient of t^m in p(t) / (1 - t)^e.
mpq_class series_coeff(const RationalPolynomial& p, int e, int m) {
  mpq_class acc = 0;
  for (int i = 0; i <= std::min(m, p.degree()); ++i) {
    acc += p.coeff(i) * (e == 0 ? mpq_class(m == i ? 1 : 0) : mpq_class(binomial(m - i + e - 1, e - 1)));
  }
  return acc;
}

bool series_matches(const RationalPolynomial& numerator, int e, const ZetaPolynomial& z, int up_to) {
  for (int m = 0; m <= up_to; ++m) {
    if (series_coeff(numerator, e, m) != mpq_class(z.value(m))) return false;
  }
  return true;
}

}  // namespace

HIdentityReport verify_h_identity(const QPoset& q, const SimplicialComplex& pm_delta) {
  const int n = q.lattice().ground_size();
  const ZetaPolynomial z = zeta_polynomial(q.poset());
  HIdentityReport r;
  r.exponent = n + 2;
  for (std::size_t j = 0; j < z.binomial.size(); ++j) {
    const int jj = static_cast<int>(j);
    r.numerator = r.numerator + mpq_class(z.binomial[j]) * (RationalPolynomial::monomial(1, jj) *
                                                           one_minus_t_power(r.exponent - 1 - jj));
  }
  r.t_h = RationalPolynomial::monomial(1, 1) * h_polynomial(pm_delta).to_rational();
  r.exact = r.numerator == r.t_h;
  r.series = series_matches(r.t_h, r.exponent, z, n + 2);
  r.series_with_n_plus_1 = series_matches(r.t_h, n + 1, z, n + 2);
  return r;
}

ReciprocityReport verify_self_reciprocity(const QPoset& q) {
  const int n = q.lattice().ground_size();
  const RationalPolynomial z = zeta_polynomial(q.poset()).to_monomial();
  const RationalPolynomial zbar = zbar_polynomial(q.poset()).to_monomial();
  const mpq_class z_sign = (n + 1) % 2 == 0 ? 1 : -1;
  const mpq_class zbar_sign = n % 2 == 0 ? 1 : -1;
  return {z.reflected() == z_sign * z, zbar.reflected() == zbar_sign * zbar};
}

}  // namespace cwsphere
