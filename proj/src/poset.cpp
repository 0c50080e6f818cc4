#include "cwsphere/poset.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <map>
#include <set>

#include "cwsphere/error.hpp"
#include "parallel.hpp"

namespace cwsphere {

int BitRow::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<int> BitRow::intersection(const BitRow& o) const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w] & o.words_[w]; bits; bits &= bits - 1) {
      out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
    }
  }
  return out;
}

bool BitRow::intersection_subset_of(const BitRow& o, const BitRow& sup) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & o.words_[w]) & ~sup.words_[w]) return false;
  }
  return true;
}

GradedPoset::GradedPoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers)
    : labels_(std::move(labels)) {
  const int n = size();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, rank delta)
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) throw Error(ErrorKind::InvalidArgument, "cover pair out of range");
    adj[a].push_back({b, 1});
    adj[b].push_back({a, -1});
  }
  std::vector<int> rank(n, 0);
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> component{root};
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [w, d] : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          rank[w] = rank[v] + d;
          component.push_back(w);
          queue.push_back(w);
        } else if (rank[w] != rank[v] + d) {
          throw Error(ErrorKind::NotGraded, "no rank function with every cover raising rank by one");
        }
      }
    }
    int lo = rank[root];
    for (int v : component) lo = std::min(lo, rank[v]);
    for (int v : component) rank[v] -= lo;
  }
  ranks_ = std::move(rank);
  up_covers_.assign(n, {});
  for (auto [a, b] : covers) up_covers_[a].push_back(b);
  build();
}

GradedPoset::GradedPoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers, std::vector<int> ranks)
    : labels_(std::move(labels)), ranks_(std::move(ranks)) {
  const int n = size();
  if (static_cast<int>(ranks_.size()) != n) throw Error(ErrorKind::InvalidArgument, "rank vector size mismatch");
  up_covers_.assign(n, {});
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw Error(ErrorKind::InvalidArgument, "cover pair out of range");
    if (ranks_[b] != ranks_[a] + 1) {
      throw Error(ErrorKind::NotGraded, "cover " + labels_[a] + " < " + labels_[b] + " does not raise rank by one");
    }
    up_covers_[a].push_back(b);
  }
  build();
}

void GradedPoset::build() {
  const int n = size();
  if (n > kMaxPosetSize) {
    throw Error(ErrorKind::ResourceLimit, "poset with " + std::to_string(n) + " elements exceeds the cap of " +
                                              std::to_string(kMaxPosetSize));
  }
  down_covers_.assign(n, {});
  for (int a = 0; a < n; ++a) {
    auto& ups = up_covers_[a];
    std::sort(ups.begin(), ups.end());
    ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
    for (int b : ups) down_covers_[b].push_back(a);
  }
  for (auto& d : down_covers_) std::sort(d.begin(), d.end());

  order_.resize(n);
  for (int i = 0; i < n; ++i) order_[i] = i;
  std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return ranks_[a] < ranks_[b]; });

  up_.assign(n, BitRow(n));
  down_.assign(n, BitRow(n));
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    up_[*it].set(*it);
    for (int b : up_covers_[*it]) up_[*it].merge(up_[b]);
  }
  for (int v : order_) {
    down_[v].set(v);
    for (int a : down_covers_[v]) down_[v].merge(down_[a]);
  }
}

int GradedPoset::max_rank() const {
  int r = 0;
  for (int x : ranks_) r = std::max(r, x);
  return r;
}

std::vector<std::pair<int, int>> GradedPoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b : up_covers_[a]) out.emplace_back(a, b);
  }
  return out;
}

std::vector<int> GradedPoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (down_covers_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<int> GradedPoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (up_covers_[i].empty()) out.push_back(i);
  }
  return out;
}

std::optional<int> GradedPoset::bottom() const {
  auto mins = minimal_elements();
  if (mins.size() != 1) return std::nullopt;
  return mins.front();
}

std::optional<int> GradedPoset::top() const {
  auto maxs = maximal_elements();
  if (maxs.size() != 1) return std::nullopt;
  return maxs.front();
}

std::optional<int> GradedPoset::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

GradedPoset GradedPoset::dual() const {
  std::vector<std::pair<int, int>> covers;
  for (auto [a, b] : cover_pairs()) covers.emplace_back(b, a);
  const int r = max_rank();
  std::vector<int> ranks(size());
  for (int i = 0; i < size(); ++i) ranks[i] = r - ranks_[i];
  return GradedPoset(labels_, std::move(covers), std::move(ranks));
}

GradedPoset GradedPoset::convex_subposet(const std::vector<int>& keep, bool keep_ranks) const {
  std::vector<int> index(size(), -1);
  std::vector<std::string> labels;
  std::vector<int> ranks;
  int lo = 0;
  if (!keep.empty()) {
    lo = ranks_[keep.front()];
    for (int v : keep) lo = std::min(lo, ranks_[v]);
  }
  for (int v : keep) {
    index[v] = static_cast<int>(labels.size());
    labels.push_back(labels_[v]);
    ranks.push_back(keep_ranks ? ranks_[v] : ranks_[v] - lo);
  }
  std::vector<std::pair<int, int>> covers;
  for (int v : keep) {
    for (int w : up_covers_[v]) {
      if (index[w] >= 0) covers.emplace_back(index[v], index[w]);
    }
  }
  return GradedPoset(std::move(labels), std::move(covers), std::move(ranks));
}

GradedPoset GradedPoset::interval(int s, int t) const {
  if (!leq(s, t)) throw Error(ErrorKind::NotComparable, labels_[s] + " is not <= " + labels_[t]);
  return convex_subposet(interval_elements(s, t));
}

GradedPoset GradedPoset::with_bottom(const std::string& label) const {
  std::vector<std::string> labels{label};
  labels.insert(labels.end(), labels_.begin(), labels_.end());
  std::vector<int> ranks{0};
  for (int r : ranks_) ranks.push_back(r + 1);
  std::vector<std::pair<int, int>> covers;
  for (int m : minimal_elements()) {
    if (ranks_[m] != 0) throw Error(ErrorKind::NotGraded, "minimal element " + labels_[m] + " has nonzero rank");
    covers.emplace_back(0, m + 1);
  }
  for (auto [a, b] : cover_pairs()) covers.emplace_back(a + 1, b + 1);
  return GradedPoset(std::move(labels), std::move(covers), std::move(ranks));
}

GradedPoset GradedPoset::with_top(const std::string& label) const {
  std::vector<std::string> labels = labels_;
  labels.push_back(label);
  const int r = max_rank();
  std::vector<int> ranks = ranks_;
  ranks.push_back(r + 1);
  std::vector<std::pair<int, int>> covers = cover_pairs();
  for (int m : maximal_elements()) {
    if (ranks_[m] != r) throw Error(ErrorKind::NotGraded, "maximal element " + labels_[m] + " is not of top rank");
    covers.emplace_back(m, size());
  }
  return GradedPoset(std::move(labels), std::move(covers), std::move(ranks));
}

std::vector<std::vector<int>> GradedPoset::maximal_chains() const {
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  auto dfs = [&](auto&& self, int v) -> void {
    chain.push_back(v);
    if (up_covers_[v].empty()) {
      out.push_back(chain);
    } else {
      for (int w : up_covers_[v]) self(self, w);
    }
    chain.pop_back();
  };
  for (int m : minimal_elements()) dfs(dfs, m);
  return out;
}

bool operator==(const GradedPoset& a, const GradedPoset& b) {
  if (a.labels_ != b.labels_ || a.ranks_ != b.ranks_) return false;
  return a.up_covers_ == b.up_covers_;
}

std::vector<std::int64_t> mobius_row(const GradedPoset& p, int s) {
  std::vector<std::int64_t> mu(p.size(), 0);
  mu[s] = 1;
  for (int t : p.linear_order()) {
    if (t == s || !p.leq(s, t)) continue;
    std::int64_t acc = 0;
    for (int u : p.interval_elements(s, t)) {
      if (u != t) acc = checked_add(acc, mu[u]);
    }
    mu[t] = -acc;
  }
  return mu;
}

std::int64_t mobius(const GradedPoset& p, int s, int t) {
  if (!p.leq(s, t)) throw Error(ErrorKind::NotComparable, p.label(s) + " is not <= " + p.label(t));
  return mobius_row(p, s)[t];
}

namespace {

std::int64_t nu_from_row(const GradedPoset& p, const std::vector<std::int64_t>& mu, int s, int t) {
  std::int64_t acc = 0;
  for (int u : p.interval_elements(s, t)) {
    acc = checked_add(acc, (p.rank_between(s, u) % 2 == 0) ? mu[u] : -mu[u]);
  }
  return acc;
}

std::vector<std::int64_t> nu_row(const GradedPoset& p, int s) {
  std::vector<std::int64_t> mu = mobius_row(p, s);
  std::vector<std::int64_t> row(p.size(), 0);
  for (int t = 0; t < p.size(); ++t) {
    if (p.leq(s, t)) row[t] = nu_from_row(p, mu, s, t);
  }
  return row;
}

bool eulerian_from(const GradedPoset& p, int s) {
  std::vector<std::int64_t> mu = mobius_row(p, s);
  for (int t = 0; t < p.size(); ++t) {
    if (!p.leq(s, t)) continue;
    std::int64_t expected = (p.rank_between(s, t) % 2 == 0) ? 1 : -1;
    if (mu[t] != expected) return false;
  }
  return true;
}

}  // namespace

std::int64_t nu(const GradedPoset& p) {
  auto b = p.bottom();
  if (!b) throw Error(ErrorKind::No0Hat, "nu requires a unique minimal element");
  std::int64_t acc = 0;
  std::vector<std::int64_t> mu = mobius_row(p, *b);
  for (int t = 0; t < p.size(); ++t) acc = checked_add(acc, (p.rank_between(*b, t) % 2 == 0) ? mu[t] : -mu[t]);
  return acc;
}

std::int64_t nu_interval(const GradedPoset& p, int s, int t) {
  if (!p.leq(s, t)) throw Error(ErrorKind::NotComparable, p.label(s) + " is not <= " + p.label(t));
  return nu_from_row(p, mobius_row(p, s), s, t);
}

std::vector<std::vector<std::int64_t>> nu_table(const GradedPoset& p) {
  std::vector<std::vector<std::int64_t>> table(p.size());
  detail::parallel_for(p.size(), [&](std::int64_t s) { table[s] = nu_row(p, static_cast<int>(s)); });
  return table;
}

bool is_eulerian(const GradedPoset& p) {
  std::atomic<bool> ok{true};
  detail::parallel_for(p.size(), [&](std::int64_t s) {
    if (ok.load(std::memory_order_relaxed) && !eulerian_from(p, static_cast<int>(s))) ok = false;
  });
  return ok;
}

namespace serial {

std::vector<std::vector<std::int64_t>> nu_table(const GradedPoset& p) {
  std::vector<std::vector<std::int64_t>> table(p.size());
  for (int s = 0; s < p.size(); ++s) table[s] = nu_row(p, s);
  return table;
}

bool is_eulerian(const GradedPoset& p) {
  for (int s = 0; s < p.size(); ++s) {
    if (!eulerian_from(p, s)) return false;
  }
  return true;
}

}  // namespace serial

std::optional<int> join(const GradedPoset& p, int a, int b) {
  std::vector<int> common = p.upset(a).intersection(p.upset(b));
  if (common.empty()) return std::nullopt;
  int best = common.front();
  for (int c : common) {
    if (p.rank(c) < p.rank(best)) best = c;
  }
  if (!p.upset(a).intersection_subset_of(p.upset(b), p.upset(best))) return std::nullopt;
  return best;
}

std::optional<int> meet(const GradedPoset& p, int a, int b) {
  std::vector<int> common = p.downset(a).intersection(p.downset(b));
  if (common.empty()) return std::nullopt;
  int best = common.front();
  for (int c : common) {
    if (p.rank(c) > p.rank(best)) best = c;
  }
  if (!p.downset(a).intersection_subset_of(p.downset(b), p.downset(best))) return std::nullopt;
  return best;
}

bool is_lattice(const GradedPoset& p) {
  if (p.size() == 0) return false;
  for (int a = 0; a < p.size(); ++a) {
    for (int b = a + 1; b < p.size(); ++b) {
      if (!join(p, a, b) || !meet(p, a, b)) return false;
    }
  }
  return true;
}

bool is_boolean_interval(const GradedPoset& p, int x, int y) {
  if (!p.leq(x, y)) return false;
  std::vector<int> atoms;
  for (int a : p.covers_up(x)) {
    if (p.leq(a, y)) atoms.push_back(a);
  }
  const int k = static_cast<int>(atoms.size());
  if (k > 20 || p.rank_between(x, y) != k) return false;
  const std::size_t total = std::size_t{1} << k;
  if (p.interval_elements(x, y).size() != total) return false;
  std::vector<int> joins(total, x);
  std::vector<char> seen(p.size(), 0);
  seen[x] = 1;
  for (std::size_t s = 1; s < total; ++s) {
    int low = std::countr_zero(s);
    auto j = join(p, joins[s & (s - 1)], atoms[low]);
    if (!j) return false;
    joins[s] = *j;
    if (seen[*j] || p.rank_between(x, *j) != std::popcount(s)) return false;
    seen[*j] = 1;
  }
  return true;
}

bool is_meet_distributive(const GradedPoset& p) {
  if (!is_lattice(p)) throw Error(ErrorKind::NotALattice, "meet-distributivity requires a lattice");
  for (int y = 0; y < p.size(); ++y) {
    const auto& lower = p.covers_down(y);
    if (lower.empty()) continue;
    int x = lower.front();
    for (int c : lower) x = *meet(p, x, c);
    if (!is_boolean_interval(p, x, y)) return false;
  }
  return true;
}

bool is_join_distributive(const GradedPoset& p) { return is_meet_distributive(p.dual()); }

bool is_semimodular(const GradedPoset& p) {
  if (!is_lattice(p)) throw Error(ErrorKind::NotALattice, "semimodularity requires a lattice");
  for (int a = 0; a < p.size(); ++a) {
    for (int b = a + 1; b < p.size(); ++b) {
      int m = *meet(p, a, b);
      if (p.rank_between(m, a) != 1 || p.rank_between(m, b) != 1) continue;
      int j = *join(p, a, b);
      if (p.rank_between(a, j) != 1 || p.rank_between(b, j) != 1) return false;
    }
  }
  return true;
}

namespace {

// counts[t][j] = number of strict chains 0 = s_0 < ... < s_j = t.
std::vector<std::vector<std::int64_t>> strict_chain_counts(const GradedPoset& p, int bottom) {
  const int len = p.max_rank() + 1;
  std::vector<std::vector<std::int64_t>> counts(p.size(), std::vector<std::int64_t>(len, 0));
  counts[bottom][0] = 1;
  for (int t : p.linear_order()) {
    if (t == bottom || !p.leq(bottom, t)) continue;
    for (int s : p.interval_elements(bottom, t)) {
      if (s == t) continue;
      for (int j = 0; j + 1 < len; ++j) {
        if (counts[s][j]) counts[t][j + 1] = checked_add(counts[t][j + 1], counts[s][j]);
      }
    }
  }
  return counts;
}

ZetaPolynomial trimmed(std::vector<std::int64_t> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return ZetaPolynomial{std::move(c)};
}

}  // namespace

ZetaPolynomial zeta_polynomial(const GradedPoset& p) {
  auto b = p.bottom();
  if (!b) throw Error(ErrorKind::No0Hat, "zeta polynomial requires a unique minimal element");
  auto t = p.top();
  if (!t) throw Error(ErrorKind::No1Hat, "zeta polynomial requires a unique maximal element");
  return trimmed(strict_chain_counts(p, *b)[*t]);
}

ZetaPolynomial zbar_polynomial(const GradedPoset& p) {
  auto b = p.bottom();
  if (!b) throw Error(ErrorKind::No0Hat, "zbar polynomial requires a unique minimal element");
  auto t = p.top();
  if (!t) throw Error(ErrorKind::No1Hat, "zbar polynomial requires a unique maximal element");
  auto counts = strict_chain_counts(p, *b);
  ZetaPolynomial out;
  for (int q : p.covers_down(*t)) out += trimmed(counts[q]);
  return out;
}

}  // namespace cwsphere
