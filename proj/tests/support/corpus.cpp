#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cwsphere::testing {

namespace {

using Matrix = std::uint32_t;  // bit a*n + b set when a < b (0-based)

bool transitive(Matrix m, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if ((m >> (a * n + b) & 1) && (m >> (b * n + c) & 1) && !(m >> (a * n + c) & 1)) return false;
  return true;
}

Matrix canonical(Matrix m, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Matrix best = ~Matrix{0};
  do {
    Matrix image = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (m >> (a * n + b) & 1) image |= Matrix{1} << (perm[a] * n + perm[b]);
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

ConvexGeometry plane(std::vector<std::pair<int, int>> pts) {
  std::vector<Point2> p;
  for (auto [x, y] : pts) p.push_back({Rational(x), Rational(y)});
  return ConvexGeometry::points2d(std::move(p));
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> posets_up_to_isomorphism(int n) {
  // Every poset has a natural labeling, so relations a < b with a < b as integers suffice.
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::set<Matrix> seen;
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint32_t pick = 0; pick < (1u << slots.size()); ++pick) {
    Matrix m = 0;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (pick >> i & 1) m |= Matrix{1} << (slots[i].first * n + slots[i].second);
    if (!transitive(m, n) || !seen.insert(canonical(m, n)).second) continue;
    std::vector<std::pair<int, int>> rel;
    for (auto [a, b] : slots)
      if (m >> (a * n + b) & 1) rel.emplace_back(a + 1, b + 1);
    out.push_back(std::move(rel));
  }
  return out;
}

std::vector<CorpusEntry> poset_corpus(int max_n) {
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto posets = posets_up_to_isomorphism(n);
    for (std::size_t i = 0; i < posets.size(); ++i) {
      for (auto dir : {IdealDirection::Lower, IdealDirection::Upper}) {
        const std::string name = "poset" + std::to_string(n) + "_" + std::to_string(i) +
                                 (dir == IdealDirection::Lower ? "_lower" : "_upper");
        out.push_back({name, ConvexGeometry::poset_ideal(n, posets[i], dir)});
      }
    }
  }
  return out;
}

std::vector<CorpusEntry> collinear_corpus(int max_n) {
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= max_n; ++n) out.push_back({"collinear" + std::to_string(n), ConvexGeometry::collinear(n)});
  return out;
}

std::vector<CorpusEntry> planar_corpus() {
  return {
      {"plane_point", plane({{0, 0}})},
      {"plane_segment", plane({{0, 0}, {3, 1}})},
      {"triangle", plane({{0, 0}, {4, 0}, {0, 4}})},
      {"three_on_a_line", plane({{0, 0}, {1, 1}, {3, 3}})},
      {"triangle_interior", plane({{0, 0}, {4, 0}, {0, 4}, {1, 1}})},
      {"triangle_edge_point", plane({{0, 0}, {4, 0}, {0, 4}, {2, 0}})},
      {"square", plane({{0, 0}, {2, 0}, {2, 2}, {0, 2}})},
      {"four_on_a_line", plane({{0, 0}, {1, 2}, {2, 4}, {3, 6}})},
      {"line_and_apex", plane({{0, 0}, {1, 0}, {2, 0}, {1, 3}})},
      {"square_center", plane({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}})},
      {"pentagon", plane({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}})},
      {"triangle_two_inside", plane({{0, 0}, {6, 0}, {0, 6}, {1, 1}, {2, 1}})},
      {"crossing_diagonals", plane({{0, 0}, {4, 0}, {2, 2}, {2, -2}, {2, 0}})},
      {"four_line_and_apex", plane({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 2}})},
      {"hexagon", plane({{0, 0}, {2, 0}, {3, 2}, {2, 4}, {0, 4}, {-1, 2}})},
      {"pentagon_center", plane({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}, {2, 2}})},
      {"nested_triangles", plane({{0, 0}, {6, 0}, {0, 6}, {1, 1}, {3, 1}, {1, 3}})},
      {"square_center_midpoint", plane({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {1, 0}})},
      {"triangle_three_inside", plane({{0, 0}, {9, 0}, {0, 9}, {1, 1}, {4, 1}, {1, 4}})},
      {"two_lines", plane({{0, 0}, {1, 0}, {2, 0}, {0, 2}, {1, 2}, {2, 2}})},
  };
}

std::vector<CorpusEntry> full_corpus(int max_poset_n) {
  std::vector<CorpusEntry> out = poset_corpus(max_poset_n);
  for (auto& e : collinear_corpus(6)) out.push_back(std::move(e));
  for (auto& e : planar_corpus()) out.push_back(std::move(e));
  return out;
}

}  // namespace cwsphere::testing
