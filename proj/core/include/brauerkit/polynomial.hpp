#pragma once

// Dense univariate polynomials over Z and Q, coefficients in ascending
// degree order. Everything is exact (GMP integers and rationals).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace brauerkit {

using Integer = mpz_class;
using Rational = mpq_class;

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = v;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coefficients() const { return c_; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  T eval(const T& x) const {
    T acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// p(q(x)).
  Polynomial compose(const Polynomial& q) const {
    Polynomial acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * q;
      acc += constant(c_[i]);
    }
    return acc;
  }

  /// Multiply by x^k.
  Polynomial shift_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> r(k, T(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using ZPoly = Polynomial<Integer>;
using QPoly = Polynomial<Rational>;

// --- conversions -----------------------------------------------------------

QPoly to_rational(const ZPoly& f);

/// Integer polynomial with the same roots: clears denominators and removes
/// content, leading coefficient made positive.
ZPoly primitive_integer(const QPoly& f);

/// Returns true and fills `out` when every coefficient is integral.
bool to_integer(const QPoly& f, ZPoly& out);

Integer content(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);

// --- division over Q -------------------------------------------------------

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& f);
QPoly gcd(QPoly a, QPoly b);

/// Returns g = gcd(a, b) (monic) together with s, t such that s a + t b = g.
struct ExtendedGcd {
  QPoly g, s, t;
};
ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);

/// Exact quotient a / b over Z; returns false if b does not divide a in Z[x].
bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

bool is_squarefree(const ZPoly& f);

/// Product of the distinct irreducible factors (as a primitive integer polynomial).
ZPoly squarefree_part(const ZPoly& f);

/// Squarefree decomposition f = c * prod g_i^i over Q, primitive factors.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f);

// --- power sums and characteristic polynomials -----------------------------

/// Power sums s_0..s_count of the roots of a monic polynomial.
std::vector<Rational> power_sums(const QPoly& monic_f, std::size_t count);

/// Monic polynomial whose roots have the given power sums s_1..s_n
/// (index 0 holds n).
QPoly from_power_sums(const std::vector<Rational>& sums);

/// Characteristic polynomial over Q of multiplication by `element`
/// in Q[x]/(f), f monic of degree n.
QPoly charpoly(const QPoly& element, const ZPoly& f);

/// Discriminant of a monic polynomial.
Rational discriminant(const ZPoly& f);

// --- misc ------------------------------------------------------------------

/// Exponent of p in a nonzero integer.
int valuation(const Integer& a, const Integer& p);
int valuation(const Rational& a, const Integer& p);

std::string to_string(const ZPoly& f, char var = 'x');
std::string to_string(const QPoly& f, char var = 'x');

/// Lexicographic comparison of coefficient vectors (ascending degree).
bool lex_less(const ZPoly& a, const ZPoly& b);

}  // namespace brauerkit
