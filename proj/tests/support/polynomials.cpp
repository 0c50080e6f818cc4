#include "polynomials.hpp"

namespace cwsphere::testing {

namespace {

RationalPolynomial P(std::vector<std::int64_t> c) { return RationalPolynomial::from_integers(c); }

// a + b t
RationalPolynomial lin(std::int64_t a, std::int64_t b) { return P({a, b}); }

RationalPolynomial prod(std::initializer_list<RationalPolynomial> fs) {
  RationalPolynomial out = P({1});
  for (const auto& f : fs) out = out * f;
  return out;
}

}  // namespace

std::vector<FactoredPolynomial> real_root_suite() {
  const RationalPolynomial q1 = P({1, 0, 1});    // t^2 + 1
  const RationalPolynomial q2 = P({1, 1, 1});    // t^2 + t + 1
  const RationalPolynomial q3 = P({5, -2, 1});   // t^2 - 2t + 5
  const RationalPolynomial r14 = P({1, 14, 1});  // t^2 + 14t + 1, discriminant 192
  return {
      {"1+15t+15t^2+t^3", P({1, 15, 15, 1}), true, 3},
      {"(1+t)(1+14t+t^2)", prod({lin(1, 1), r14}), true, 3},
      {"t^2+1", q1, false, 0},
      {"(t+1)^2", prod({lin(1, 1), lin(1, 1)}), true, 1},
      {"constant 7", P({7}), true, 0},
      {"t", P({0, 1}), true, 1},
      {"(2t-1)(3t+2)", prod({lin(-1, 2), lin(2, 3)}), true, 2},
      {"(t-1)^3 (t+2)", prod({lin(-1, 1), lin(-1, 1), lin(-1, 1), lin(2, 1)}), true, 2},
      {"t^2+t+1", q2, false, 0},
      {"(t-3)(t^2+1)", prod({lin(-3, 1), q1}), false, 1},
      {"(t^2+1)^2", prod({q1, q1}), false, 0},
      {"(t^2-2t+5)(t+4)^2", prod({q3, lin(4, 1), lin(4, 1)}), false, 1},
      {"1+6t+t^2", P({1, 6, 1}), true, 2},
      {"1+t+t^2 (h of a triangle boundary)", P({1, 1, 1}), false, 0},
      {"(1+6t+t^2)(t+3)", prod({P({1, 6, 1}), lin(3, 1)}), true, 3},
      {"(t+1)(t+2)(t+3)(t+4)(t+5)", prod({lin(1, 1), lin(2, 1), lin(3, 1), lin(4, 1), lin(5, 1)}), true, 5},
      {"(5t-1)(t-5)(t^2+t+1)", prod({lin(-1, 5), lin(-5, 1), q2}), false, 2},
      {"t^3", P({0, 0, 0, 1}), true, 1},
      {"(t-1/2)(t+1/3)", RationalPolynomial({mpq_class(-1, 6), mpq_class(-1, 6), 1}), true, 2},
      {"(t+1)^2 (t^2+14t+1)^2", prod({lin(1, 1), lin(1, 1), r14, r14}), true, 3},
  };
}

}  // namespace cwsphere::testing
