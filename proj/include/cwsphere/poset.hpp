#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwsphere/polynomial.hpp"

namespace cwsphere {

/// Largest poset for which the reachability bitsets are built (two N x N bit matrices).
inline constexpr int kMaxPosetSize = 1 << 14;

/// Fixed-width row of bits used for the reachability relation.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(int nbits) : words_((nbits + 63) / 64, 0) {}

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void merge(const BitRow& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }
  int count() const;
  /// Indices of bits set in both rows, increasing.
  std::vector<int> intersection(const BitRow& o) const;
  bool intersection_subset_of(const BitRow& o, const BitRow& sup) const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

/// A finite graded poset stored as its Hasse diagram plus a rank function.
/// Immutable after construction; <= queries are answered from precomputed
/// reachability rows.
class GradedPoset {
 public:
  GradedPoset() = default;
  /// Ranks derived from the covers: each connected component is shifted so its
  /// minimum rank is 0. Throws NotGraded if no consistent rank function exists.
  GradedPoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers);
  /// Explicit ranks; every cover must raise the rank by exactly one.
  GradedPoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers, std::vector<int> ranks);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int rank(int i) const { return ranks_[i]; }
  int rank_between(int s, int t) const { return ranks_[t] - ranks_[s]; }
  int max_rank() const;
  const std::vector<int>& covers_up(int i) const { return up_covers_[i]; }
  const std::vector<int>& covers_down(int i) const { return down_covers_[i]; }
  std::vector<std::pair<int, int>> cover_pairs() const;

  bool leq(int a, int b) const { return up_[a].test(b); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  const BitRow& upset(int a) const { return up_[a]; }
  const BitRow& downset(int a) const { return down_[a]; }
  /// Elements of [s, t], increasing in the linear extension order.
  std::vector<int> interval_elements(int s, int t) const { return up_[s].intersection(down_[t]); }

  /// Linear extension: rank ascending, index ascending within a rank.
  const std::vector<int>& linear_order() const { return order_; }
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> bottom() const;
  std::optional<int> top() const;
  std::optional<int> find(const std::string& label) const;

  GradedPoset dual() const;
  /// Subposet on an order-convex subset; covers are the parent covers inside it
  /// and ranks are shifted so the minimum kept rank becomes 0 unless `keep_ranks`.
  GradedPoset convex_subposet(const std::vector<int>& keep, bool keep_ranks = false) const;
  GradedPoset interval(int s, int t) const;
  GradedPoset with_bottom(const std::string& label) const;
  GradedPoset with_top(const std::string& label) const;

  /// Saturated chains from a minimal to a maximal element.
  std::vector<std::vector<int>> maximal_chains() const;

  friend bool operator==(const GradedPoset& a, const GradedPoset& b);

 private:
  void build();

  std::vector<std::string> labels_;
  std::vector<int> ranks_;
  std::vector<std::vector<int>> up_covers_;
  std::vector<std::vector<int>> down_covers_;
  std::vector<BitRow> up_;
  std::vector<BitRow> down_;
  std::vector<int> order_;
};

/// mu(s, t) for every t (zero where s is not <= t), by mu(s,s) = 1,
/// mu(s,t) = -sum_{s <= u < t} mu(s,u).
std::vector<std::int64_t> mobius_row(const GradedPoset& p, int s);
/// Throws NotComparable when s is not <= t.
std::int64_t mobius(const GradedPoset& p, int s, int t);

/// nu(P) = sum_t (-1)^rk(t) mu(0, t). Throws No0Hat.
std::int64_t nu(const GradedPoset& p);
/// nu of the interval [s, t].
std::int64_t nu_interval(const GradedPoset& p, int s, int t);

/// nu([s, t]) for all pairs; row s holds values indexed by t (zero unless s <= t).
/// Rows are computed in parallel.
std::vector<std::vector<std::int64_t>> nu_table(const GradedPoset& p);

/// mu(s,t) = (-1)^rk(s,t) on every interval. Parallel over s.
bool is_eulerian(const GradedPoset& p);

/// Least upper bound / greatest lower bound when they exist.
std::optional<int> join(const GradedPoset& p, int a, int b);
std::optional<int> meet(const GradedPoset& p, int a, int b);
bool is_lattice(const GradedPoset& p);
/// [x, y] is a Boolean lattice.
bool is_boolean_interval(const GradedPoset& p, int x, int y);
/// For every y, [meet of the elements covered by y, y] is Boolean. Throws NotALattice.
bool is_meet_distributive(const GradedPoset& p);
bool is_join_distributive(const GradedPoset& p);
/// Upper semimodular: if a, b both cover a^b then a v b covers both. Throws NotALattice.
bool is_semimodular(const GradedPoset& p);

/// Binomial-basis zeta polynomial from strict-chain counts. Throws No0Hat / No1Hat.
ZetaPolynomial zeta_polynomial(const GradedPoset& p);
/// Sum over maximal q of P \ {1} of Z([0, q]). Throws No0Hat / No1Hat.
ZetaPolynomial zbar_polynomial(const GradedPoset& p);

namespace serial {
std::vector<std::vector<std::int64_t>> nu_table(const GradedPoset& p);
bool is_eulerian(const GradedPoset& p);
}  // namespace serial

}  // namespace cwsphere
