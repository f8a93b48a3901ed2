#include "brauerkit/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "brauerkit/error.hpp"

namespace brauerkit {

QPoly to_rational(const ZPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.size());
  for (const auto& v : f.coefficients()) c.emplace_back(v);
  return QPoly(std::move(c));
}

ZPoly primitive_integer(const QPoly& f) {
  if (f.is_zero()) return {};
  Integer den = 1;
  for (const auto& v : f.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(f.size());
  for (const auto& v : f.coefficients()) {
    Rational s = v * den;
    c.push_back(s.get_num());
  }
  ZPoly r = primitive_part(ZPoly(std::move(c)));
  if (r.leading() < 0) r = -r;
  return r;
}

bool to_integer(const QPoly& f, ZPoly& out) {
  std::vector<Integer> c;
  c.reserve(f.size());
  for (const auto& v : f.coefficients()) {
    if (v.get_den() != 1) return false;
    c.push_back(v.get_num());
  }
  out = ZPoly(std::move(c));
  return true;
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& v : f.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.is_zero()) return {};
  Integer g = content(f);
  std::vector<Integer> c = f.coefficients();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(c));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<Rational> r = a.coefficients();
  std::vector<Rational> q(a.size() - b.size() + 1, Rational(0));
  const Rational& lb = b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational t = r[i] / lb;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly monic(const QPoly& f) {
  if (f.is_zero()) return f;
  Rational inv = 1 / f.leading();
  return f * inv;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    quotient = {};
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Integer> r = a.coefficients();
  std::vector<Integer> q(a.size() - b.size() + 1);
  const Integer& lb = b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return false;
    Integer t = r[i] / lb;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  quotient = ZPoly(std::move(q));
  return true;
}

bool is_squarefree(const ZPoly& f) {
  if (f.degree() <= 0) return true;
  QPoly g = gcd(to_rational(f), to_rational(f.derivative()));
  return g.degree() == 0;
}

ZPoly squarefree_part(const ZPoly& f) {
  if (f.degree() <= 0) return ZPoly{1};
  QPoly qf = to_rational(f);
  QPoly g = gcd(qf, to_rational(f.derivative()));
  return primitive_integer(divmod(qf, g).first);
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f) {
  // Yun's algorithm over Q.
  std::vector<std::pair<ZPoly, int>> out;
  if (f.degree() <= 0) return out;
  QPoly a = monic(to_rational(f));
  QPoly da = a.derivative();
  QPoly b = gcd(a, da);
  QPoly c = divmod(a, b).first;
  QPoly d = divmod(da, b).first - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    QPoly g = gcd(c, d);
    if (g.degree() > 0) out.emplace_back(primitive_integer(g), i);
    c = divmod(c, g).first;
    d = divmod(d, g).first - c.derivative();
    ++i;
  }
  return out;
}

std::vector<Rational> power_sums(const QPoly& f, std::size_t count) {
  const int n = f.degree();
  // elementary symmetric functions e_k = (-1)^k a_{n-k}
  std::vector<Rational> e(n + 1);
  for (int k = 0; k <= n; ++k) {
    e[k] = f.coeff(n - k);
    if (k % 2) e[k] = -e[k];
  }
  std::vector<Rational> p(count + 1);
  p[0] = n;
  for (std::size_t k = 1; k <= count; ++k) {
    Rational acc = 0;
    const std::size_t top = std::min<std::size_t>(k - 1, n);
    for (std::size_t i = 1; i <= top; ++i) {
      Rational t = e[i] * p[k - i];
      if (i % 2) acc += t; else acc -= t;
    }
    if (k <= static_cast<std::size_t>(n)) {
      Rational t = e[k] * static_cast<unsigned long>(k);
      if (k % 2) acc += t; else acc -= t;
    }
    p[k] = acc;
  }
  return p;
}

QPoly from_power_sums(const std::vector<Rational>& sums) {
  const std::size_t n = sums.size() - 1;
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Rational t = e[k - i] * sums[i];
      if (i % 2) acc += t; else acc -= t;
    }
    e[k] = acc / static_cast<unsigned long>(k);
  }
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = (k % 2) ? Rational(-e[k]) : e[k];
  return QPoly(std::move(c));
}

QPoly charpoly(const QPoly& element, const ZPoly& f) {
  const int n = f.degree();
  QPoly qf = to_rational(f);
  std::vector<Rational> s = power_sums(qf, n > 0 ? n - 1 : 0);
  std::vector<Rational> traces(n + 1);
  traces[0] = n;
  QPoly pw = QPoly::constant(1);
  QPoly base = element % qf;
  for (int k = 1; k <= n; ++k) {
    pw = (pw * base) % qf;
    Rational tr = 0;
    for (std::size_t j = 0; j < pw.size(); ++j) tr += pw[j] * s[j];
    traces[k] = tr;
  }
  return from_power_sums(traces);
}

Rational discriminant(const ZPoly& f) {
  const int n = f.degree();
  if (n <= 0) return 1;
  std::vector<Rational> s = power_sums(to_rational(f), 2 * n - 2);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = s[i + j];
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational fct = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= fct * m[col][c];
    }
  }
  return det;
}

int valuation(const Integer& a, const Integer& p) {
  if (a == 0) fail(ErrorCode::InvalidArgument, "valuation of zero");
  Integer t = a;
  int v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& a, const Integer& p) {
  return valuation(Integer(a.get_num()), p) - valuation(Integer(a.get_den()), p);
}

namespace {

template <class T>
std::string poly_string(const Polynomial<T>& f, char var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const T& c = f[i];
    if (c == 0) continue;
    T a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_string(const ZPoly& f, char var) { return poly_string(f, var); }
std::string to_string(const QPoly& f, char var) { return poly_string(f, var); }

bool lex_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(),
                                      b.coefficients().begin(), b.coefficients().end());
}

}  // namespace brauerkit
