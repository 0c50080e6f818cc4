#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cwsphere {

/// Dense polynomial with exact rational coefficients, lowest degree first.
/// Always normalized: no trailing zero coefficients (the zero polynomial is empty).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> coeffs);
  static RationalPolynomial from_integers(const std::vector<std::int64_t>& coeffs);
  static RationalPolynomial monomial(const mpq_class& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(int i) const;
  const mpq_class& leading() const { return coeffs_.back(); }

  mpq_class operator()(const mpq_class& x) const;

  RationalPolynomial derivative() const;
  /// p(-t).
  RationalPolynomial reflected() const;
  RationalPolynomial monic() const;
  /// Truncate to terms of degree <= d.
  RationalPolynomial truncated(int d) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const mpq_class& c, const RationalPolynomial& p);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 't') const;

 private:
  void normalize();
  std::vector<mpq_class> coeffs_;
};

struct PolyDivision {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};

/// Euclidean division; throws ZeroPolynomial on a zero divisor.
PolyDivision divide(const RationalPolynomial& a, const RationalPolynomial& b);
/// Monic gcd (zero only when both inputs are zero).
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);
/// p / gcd(p, p'), made monic.
RationalPolynomial square_free_part(const RationalPolynomial& p);

/// Standard Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);
/// Number of distinct real roots, counted exactly from the sign variations at -inf and +inf.
int count_distinct_real_roots(const RationalPolynomial& p);
/// True iff every complex root is real. Throws ZeroPolynomial for p = 0.
bool is_real_rooted(const RationalPolynomial& p);

/// (1 - t)^k expanded.
RationalPolynomial one_minus_t_power(int k);

/// Integer polynomial, lowest degree first (h-polynomials, f-vectors as polynomials).
struct IntPolynomial {
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  RationalPolynomial to_rational() const { return RationalPolynomial::from_integers(coeffs); }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

/// Zeta polynomial held in the binomial basis: Z(t) = sum_j c_j * C(t, j), where
/// c_j counts strict chains 0 = s_0 < ... < s_j = 1. The integer coefficients are
/// exact; the monomial form has rational coefficients.
struct ZetaPolynomial {
  std::vector<std::int64_t> binomial;

  /// Z(m) for a nonnegative integer m.
  std::int64_t value(std::int64_t m) const;
  RationalPolynomial to_monomial() const;
  ZetaPolynomial& operator+=(const ZetaPolynomial& other);
  friend bool operator==(const ZetaPolynomial&, const ZetaPolynomial&) = default;
};

/// Binomial coefficient C(m, j) with checked arithmetic (0 when j > m).
std::int64_t binomial(std::int64_t m, std::int64_t j);

}  // namespace cwsphere
