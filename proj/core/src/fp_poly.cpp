#include "brauerkit/fp_poly.hpp"

#include <algorithm>
#include <random>

#include "brauerkit/error.hpp"

namespace brauerkit {

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  a %= p;
  if (a == 0) fail(ErrorCode::InvalidArgument, "inverse of zero modulo p");
  return powmod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= p_;
  trim();
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::reduce(const ZPoly& f, u64 p) {
  std::vector<u64> c(f.size());
  Integer pp(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), f[i].get_mpz_t(), pp.get_mpz_t());
    c[i] = r.get_ui();
  }
  return FpPoly(p, std::move(c));
}

bool FpPoly::reduce(const QPoly& f, u64 p, FpPoly& out) {
  std::vector<u64> c(f.size());
  Integer pp(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer num = f[i].get_num(), den = f[i].get_den();
    if (mpz_divisible_p(den.get_mpz_t(), pp.get_mpz_t())) return false;
    Integer rn, rd;
    mpz_fdiv_r(rn.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
    mpz_fdiv_r(rd.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
    c[i] = mulmod(rn.get_ui(), invmod(rd.get_ui(), p), p);
  }
  out = FpPoly(p, std::move(c));
  return true;
}

u64 FpPoly::eval(u64 x) const {
  u64 acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = (mulmod(acc, x, p_) + c_[i]) % p_;
  return acc;
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(p_);
  std::vector<u64> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mulmod(c_[i], i % p_, p_);
  return FpPoly(p_, std::move(d));
}

FpPoly FpPoly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return *this * invmod(c_.back(), p_);
}

ZPoly FpPoly::lift() const {
  std::vector<Integer> c;
  c.reserve(c_.size());
  for (u64 v : c_) c.emplace_back(static_cast<unsigned long>(v));
  return ZPoly(std::move(c));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  const u64 p = a.p_;
  std::vector<u64> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 s = a.coeff(i) + b.coeff(i);
    r[i] = s >= p ? s - p : s;
  }
  return FpPoly(p, std::move(r));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  const u64 p = a.p_;
  std::vector<u64> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = a.coeff(i), y = b.coeff(i);
    r[i] = x >= y ? x - y : x + (p - y);
  }
  return FpPoly(p, std::move(r));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  const u64 p = a.p_;
  if (a.is_zero() || b.is_zero()) return FpPoly(p);
  std::vector<u64> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a.c_[i], b.c_[j], p)) % p;
    }
  }
  return FpPoly(p, std::move(r));
}

FpPoly operator*(const FpPoly& a, u64 s) {
  std::vector<u64> r = a.c_;
  for (auto& v : r) v = mulmod(v, s, a.p_);
  return FpPoly(a.p_, std::move(r));
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  const u64 p = a.modulus();
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero polynomial mod p");
  if (a.degree() < b.degree()) return {FpPoly(p), a};
  std::vector<u64> r = a.coefficients();
  std::vector<u64> q(a.degree() - b.degree() + 1, 0);
  const u64 inv = invmod(b.leading(), p);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    u64 t = mulmod(r[i], inv, p);
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) {
      u64 sub = mulmod(t, b.coeff(j), p);
      u64& x = r[i - db + j];
      x = x >= sub ? x - sub : x + (p - sub);
    }
  }
  r.resize(db);
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpExtendedGcd extended_gcd(const FpPoly& a, const FpPoly& b) {
  const u64 p = a.modulus();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1(p);
  FpPoly t0(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    FpPoly s2 = s0 - q * s1;
    FpPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  u64 inv = invmod(r0.leading(), p);
  return {r0 * inv, s0 * inv, t0 * inv};
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b) % m; }

FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m) {
  const u64 p = m.modulus();
  FpPoly result = FpPoly::constant(p, 1) % m;
  FpPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

namespace {

FpPoly pth_root(const FpPoly& f) {
  const u64 p = f.modulus();
  std::vector<u64> c;
  for (std::size_t i = 0; i < f.coefficients().size(); i += p) c.push_back(f.coefficients()[i]);
  return FpPoly(p, std::move(c));
}

std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f) {
  const u64 p = f.modulus();
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly x = FpPoly::x(p);
  FpPoly h = x % f;
  Integer pe(static_cast<unsigned long>(p));
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = powmod(h, pe, f);
    FpPoly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = divmod(f, g).first;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

void equal_degree(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  const u64 p = g.modulus();
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  Integer exponent;
  if (p != 2) {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, d);
    exponent = (q - 1) / 2;
  }
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    std::vector<u64> c(g.degree());
    for (auto& v : c) v = dist(rng);
    FpPoly a(p, std::move(c));
    if (a.degree() <= 0) continue;
    FpPoly b(p);
    if (p == 2) {
      FpPoly t = a % g;
      b = t;
      for (int j = 1; j < d; ++j) {
        t = mulmod(t, t, g);
        b = b + t;
      }
    } else {
      b = powmod(a, exponent, g) - FpPoly::constant(p, 1);
    }
    FpPoly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f0) {
  const u64 p = f0.modulus();
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly f = f0.monic();
  if (f.degree() <= 0) return out;
  FpPoly c = gcd(f, f.derivative());
  FpPoly w = divmod(f, c).first;
  int i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(c))) {
      out.emplace_back(g, m * static_cast<int>(p));
    }
  }
  return out;
}

std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f) {
  std::vector<std::pair<FpPoly, int>> out;
  std::mt19937_64 rng(0x5eed5eedULL);
  for (auto& [sq, mult] : squarefree_decomposition(f)) {
    for (auto& [part, d] : distinct_degree(sq)) {
      std::vector<FpPoly> pieces;
      equal_degree(part, d, rng, pieces);
      for (auto& piece : pieces) out.emplace_back(std::move(piece), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

bool is_irreducible(const FpPoly& f) {
  if (f.degree() <= 0) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].second == 1;
}

std::vector<std::pair<FpPoly, int>> factor_mod_p(const ZPoly& f, u64 p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "modulus is not prime");
  return factor(FpPoly::reduce(f, p));
}

}  // namespace brauerkit
