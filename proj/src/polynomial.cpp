#include "cwsphere/polynomial.hpp"

#include <sstream>
#include <utility>

#include "cwsphere/error.hpp"

namespace cwsphere {

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RationalPolynomial RationalPolynomial::from_integers(const std::vector<std::int64_t>& coeffs) {
  std::vector<mpq_class> q;
  q.reserve(coeffs.size());
  for (std::int64_t c : coeffs) q.emplace_back(static_cast<long>(c));
  return RationalPolynomial(std::move(q));
}

RationalPolynomial RationalPolynomial::monomial(const mpq_class& c, int degree) {
  std::vector<mpq_class> q(degree + 1, mpq_class(0));
  q[degree] = c;
  return RationalPolynomial(std::move(q));
}

void RationalPolynomial::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RationalPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return mpq_class(0);
  return coeffs_[i];
}

mpq_class RationalPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<mpq_class> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::reflected() const {
  std::vector<mpq_class> r = coeffs_;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  mpq_class inv = 1 / leading();
  return inv * *this;
}

RationalPolynomial RationalPolynomial::truncated(int d) const {
  if (d >= degree()) return *this;
  return RationalPolynomial(std::vector<mpq_class>(coeffs_.begin(), coeffs_.begin() + (d + 1)));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<mpq_class> r(std::max(a.coeffs_.size(), b.coeffs_.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return RationalPolynomial(std::move(r));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a + mpq_class(-1) * b;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(r));
}

RationalPolynomial operator*(const mpq_class& c, const RationalPolynomial& p) {
  std::vector<mpq_class> r = p.coeffs_;
  for (auto& x : r) x *= c;
  return RationalPolynomial(std::move(r));
}

std::string RationalPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    mpq_class a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

PolyDivision divide(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<mpq_class> quot(a.degree() - db + 1, mpq_class(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    mpq_class c = rem[k + db] / b.leading();
    quot[k] = c;
    for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  rem.resize(db);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RationalPolynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RationalPolynomial square_free_part(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free part of the zero polynomial");
  if (p.degree() == 0) return p.monic();
  return divide(p, gcd(p, p.derivative())).quotient.monic();
}

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq{p};
  if (p.degree() <= 0) return seq;
  seq.push_back(p.derivative());
  while (true) {
    RationalPolynomial r = divide(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(mpq_class(-1) * r);
  }
  return seq;
}

namespace {

int sign_variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int count_distinct_real_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of the zero polynomial");
  // Sturm's theorem holds for any p; the chain ends at gcd(p, p'), so distinct roots are counted.
  std::vector<RationalPolynomial> seq = sturm_sequence(p);
  std::vector<int> at_neg, at_pos;
  for (const auto& q : seq) {
    int lead = sgn(q.leading());
    at_pos.push_back(lead);
    at_neg.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_variations(at_neg) - sign_variations(at_pos);
}

bool is_real_rooted(const RationalPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "real-rootedness of the zero polynomial");
  RationalPolynomial sf = square_free_part(p);
  return count_distinct_real_roots(sf) == sf.degree();
}

RationalPolynomial one_minus_t_power(int k) {
  RationalPolynomial base(std::vector<mpq_class>{mpq_class(1), mpq_class(-1)});
  RationalPolynomial out(std::vector<mpq_class>{mpq_class(1)});
  for (int i = 0; i < k; ++i) out = out * base;
  return out;
}

std::int64_t binomial(std::int64_t m, std::int64_t j) {
  if (j < 0 || m < 0 || j > m) return 0;
  j = std::min(j, m - j);
  // Exact: the running product r * (m - i) / (i + 1) is always an integer.
  __int128 r = 1;
  for (std::int64_t i = 0; i < j; ++i) {
    r = r * (m - i) / (i + 1);
    if (r > INT64_MAX) throw Error(ErrorKind::Overflow, "binomial coefficient overflow");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t ZetaPolynomial::value(std::int64_t m) const {
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < binomial.size(); ++j) {
    acc = checked_add(acc, checked_mul(binomial[j], cwsphere::binomial(m, static_cast<std::int64_t>(j))));
  }
  return acc;
}

RationalPolynomial ZetaPolynomial::to_monomial() const {
  RationalPolynomial out;
  // C(t, j) = t (t-1) ... (t-j+1) / j!
  RationalPolynomial falling(std::vector<mpq_class>{mpq_class(1)});
  mpq_class factorial(1);
  for (std::size_t j = 0; j < binomial.size(); ++j) {
    if (j > 0) {
      falling = falling * RationalPolynomial(std::vector<mpq_class>{mpq_class(-static_cast<long>(j - 1)), mpq_class(1)});
      factorial *= static_cast<long>(j);
    }
    out = out + (mpq_class(static_cast<long>(binomial[j])) / factorial) * falling;
  }
  return out;
}

ZetaPolynomial& ZetaPolynomial::operator+=(const ZetaPolynomial& other) {
  if (binomial.size() < other.binomial.size()) binomial.resize(other.binomial.size(), 0);
  for (std::size_t j = 0; j < other.binomial.size(); ++j) binomial[j] = checked_add(binomial[j], other.binomial[j]);
  return *this;
}

}  // namespace cwsphere
