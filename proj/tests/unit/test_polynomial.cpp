#include <doctest.h>

#include "../support/polynomials.hpp"
#include "cwsphere/error.hpp"
#include "cwsphere/polynomial.hpp"

using namespace cwsphere;
using namespace cwsphere::testing;

namespace {
RationalPolynomial P(std::vector<std::int64_t> c) { return RationalPolynomial::from_integers(c); }
}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK(P({1, 1}) * P({1, 14, 1}) == P({1, 15, 15, 1}));
  CHECK(P({1, 2, 0, 0}).degree() == 1);
  CHECK(RationalPolynomial().degree() == -1);
  CHECK(P({1, 2, 3}).reflected() == P({1, -2, 3}));
  CHECK(P({1, 2, 3}).derivative() == P({2, 6}));
  CHECK(P({1, 2, 3})(mpq_class(2)) == 17);
  CHECK(one_minus_t_power(3) == P({1, -3, 3, -1}));
  auto d = divide(P({-1, 0, 1}), P({-1, 1}));
  CHECK(d.quotient == P({1, 1}));
  CHECK(d.remainder.is_zero());
  CHECK_THROWS_AS(divide(P({1}), RationalPolynomial()), Error);
  CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
  CHECK(square_free_part(P({1, 2, 1})) == P({1, 1}));
  CHECK(P({0, 1, -2}).to_string() == "t - 2t^2");
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == 118264581564861424LL);
}

TEST_CASE("zeta polynomial in the binomial basis") {
  ZetaPolynomial z{{0, 1, 2}};
  for (int m = 0; m <= 6; ++m) CHECK(z.value(m) == m * m);
  CHECK(z.to_monomial() == P({0, 0, 1}));
  z += ZetaPolynomial{{0, 1}};
  CHECK(z.binomial == std::vector<std::int64_t>{0, 2, 2});
}

TEST_CASE("real-rootedness agrees with the factorized suite") {
  const auto suite = real_root_suite();
  CHECK(suite.size() == 20);
  for (const auto& f : suite) {
    CAPTURE(f.name);
    CHECK(is_real_rooted(f.polynomial) == f.real_rooted);
    CHECK(count_distinct_real_roots(f.polynomial) == f.distinct_real_roots);
  }
  CHECK_THROWS_AS(is_real_rooted(RationalPolynomial()), Error);
}

TEST_CASE("sturm sequence shape") {
  auto seq = sturm_sequence(P({1, 15, 15, 1}));
  CHECK(seq.front() == P({1, 15, 15, 1}));
  CHECK(seq[1] == P({15, 30, 3}));
  CHECK(seq.back().degree() == 0);
}
