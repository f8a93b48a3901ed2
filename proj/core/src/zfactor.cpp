#include "brauerkit/zfactor.hpp"

#include <algorithm>
#include <bitset>

#include "brauerkit/error.hpp"
#include "brauerkit/fp_poly.hpp"

namespace brauerkit {
namespace {

constexpr int kMaxDegree = 64;

// Coefficients reduced into the symmetric range (-m/2, m/2].
ZPoly symmetric_mod(const ZPoly& f, const Integer& m) {
  std::vector<Integer> c(f.size());
  Integer half = m / 2;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r(c[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    if (c[i] > half) c[i] -= m;
  }
  return ZPoly(std::move(c));
}

ZPoly positive_mod(const ZPoly& f, const Integer& m) {
  std::vector<Integer> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(c[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  return ZPoly(std::move(c));
}

// Lifts F = G*H mod p to mod p^a, with G, H monic. F monic mod p^a.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& F, const FpPoly& g0, const FpPoly& h0, u64 p, int a) {
  FpExtendedGcd eg = extended_gcd(g0, h0);
  if (eg.g.degree() != 0) fail(ErrorCode::InternalInvariant, "Hensel factors not coprime");
  const FpPoly& t = eg.t;  // s g + t h = 1
  ZPoly G = g0.lift(), H = h0.lift();
  Integer pk(static_cast<unsigned long>(p));
  Integer P(static_cast<unsigned long>(p));
  for (int k = 1; k < a; ++k) {
    ZPoly diff = F - G * H;
    std::vector<Integer> c = diff.coefficients();
    for (auto& v : c) {
      Integer r, next = pk * P;
      mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), next.get_mpz_t());
      if (!mpz_divisible_p(r.get_mpz_t(), pk.get_mpz_t()))
        fail(ErrorCode::InternalInvariant, "Hensel step: residue not divisible");
      v = r / pk;
    }
    FpPoly e = FpPoly::reduce(ZPoly(std::move(c)), p);
    FpPoly dg = (t * e) % g0;
    FpPoly dh = divmod(e - dg * h0, g0).first;
    G += dg.lift() * pk;
    H += dh.lift() * pk;
    pk *= P;
    G = positive_mod(G, pk);
    H = positive_mod(H, pk);
  }
  return {G, H};
}

FpPoly product(const std::vector<FpPoly>& fs, std::size_t lo, std::size_t hi, u64 p) {
  FpPoly r = FpPoly::constant(p, 1);
  for (std::size_t i = lo; i < hi; ++i) r = r * fs[i];
  return r;
}

void lift_all(const ZPoly& F, const std::vector<FpPoly>& fs, std::size_t lo, std::size_t hi, u64 p, int a,
              std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(F);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  auto [G, H] = hensel_pair(F, product(fs, lo, mid, p), product(fs, mid, hi, p), p, a);
  lift_all(G, fs, lo, mid, p, a, out);
  lift_all(H, fs, mid, hi, p, a, out);
}

// Squarefree primitive f of degree >= 2.
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  if (n > kMaxDegree) fail(ErrorCode::Unsupported, "factorization degree too large");

  // choose a good prime with few modular factors
  u64 best_p = 0;
  std::vector<FpPoly> best;
  int tried = 0;
  for (u64 p = 3; tried < 6 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    FpPoly fp = FpPoly::reduce(f, p);
    if (fp.degree() != n) continue;
    if (gcd(fp, fp.derivative()).degree() != 0) continue;
    ++tried;
    auto fac = factor(fp);
    if (fac.size() == 1) return {f};
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best.clear();
      for (auto& [g, m] : fac) best.push_back(g);
    }
  }
  if (best_p == 0) fail(ErrorCode::InternalInvariant, "no good prime for factorization");
  const u64 p = best_p;

  // coefficient bound for factors: 2^n * ||f||_2 * |lc|
  Integer norm2 = 0;
  for (const auto& v : f.coefficients()) norm2 += v * v;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = root * abs(f.leading());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  bound *= 2;
  int a = 1;
  Integer M(static_cast<unsigned long>(p));
  while (M <= bound) {
    M *= static_cast<unsigned long>(p);
    ++a;
  }

  // monic version of f mod M
  Integer lc_inv;
  Integer lcm = f.leading();
  mpz_mod(lcm.get_mpz_t(), lcm.get_mpz_t(), M.get_mpz_t());
  if (mpz_invert(lc_inv.get_mpz_t(), lcm.get_mpz_t(), M.get_mpz_t()) == 0)
    fail(ErrorCode::InternalInvariant, "leading coefficient not invertible");
  ZPoly F = positive_mod(f * lc_inv, M);

  std::vector<ZPoly> lifted;
  lift_all(F, best, 0, best.size(), p, a, lifted);

  std::vector<ZPoly> out;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly G = ZPoly::constant(rest.leading());
      for (std::size_t i : idx) G = positive_mod(G * lifted[i], M);
      G = symmetric_mod(G, M);
      ZPoly cand = primitive_part(G);
      ZPoly quotient;
      if (cand.degree() > 0 && exact_divide(rest, cand, quotient)) {
        if (cand.leading() < 0) cand = -cand;
        out.push_back(cand);
        rest = quotient;
        std::vector<ZPoly> kept;
        for (std::size_t i = 0, j = 0; i < r; ++i) {
          if (j < s && idx[j] == i) {
            ++j;
            continue;
          }
          kept.push_back(lifted[i]);
        }
        lifted = std::move(kept);
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) {
    if (rest.leading() < 0) rest = -rest;
    out.push_back(rest);
  }
  return out;
}

std::bitset<kMaxDegree + 1> degree_sums(const std::vector<std::pair<FpPoly, int>>& fac) {
  std::bitset<kMaxDegree + 1> sums;
  sums.set(0);
  for (const auto& [g, m] : fac)
    for (int k = 0; k < m; ++k) sums |= (sums << g.degree());
  return sums;
}

enum class RootTest { HasRoot, NoRoot, Skipped };

// Only attempted when the constant and leading coefficients are small.
RootTest rational_root_test(const ZPoly& f) {
  const Integer& a0 = f[0];
  const Integer& an = f.leading();
  if (a0 == 0) return RootTest::HasRoot;
  if (abs(a0) > 1000000 || abs(an) > 1000000) return RootTest::Skipped;
  auto divisors = [](long v) {
    std::vector<long> d;
    v = v < 0 ? -v : v;
    for (long i = 1; i * i <= v; ++i)
      if (v % i == 0) {
        d.push_back(i);
        if (i != v / i) d.push_back(v / i);
      }
    return d;
  };
  QPoly qf = to_rational(f);
  for (long num : divisors(a0.get_si()))
    for (long den : divisors(an.get_si()))
      for (long sgn : {1L, -1L}) {
        Rational r(sgn * num, den);
        r.canonicalize();
        if (qf.eval(r) == 0) return RootTest::HasRoot;
      }
  return RootTest::NoRoot;
}

}  // namespace

std::vector<std::pair<ZPoly, int>> factor_over_q(const ZPoly& f) {
  if (f.degree() <= 0) fail(ErrorCode::InvalidArgument, "cannot factor a constant polynomial");
  std::vector<std::pair<ZPoly, int>> out;
  for (auto& [piece, mult] : squarefree_decomposition(f)) {
    for (auto& g : factor_squarefree(primitive_part(piece))) out.emplace_back(g, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  return out;
}

bool is_irreducible_over_q(const ZPoly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  if (content(f) != 1 && n >= 1) return is_irreducible_over_q(primitive_part(f));
  if (!is_squarefree(f)) return false;
  RootTest roots = rational_root_test(f);
  if (roots == RootTest::HasRoot) return false;
  if (n <= 3 && roots == RootTest::NoRoot) return true;
  if (n <= kMaxDegree) {
    std::bitset<kMaxDegree + 1> common;
    common.set();
    int used = 0;
    for (u64 p = 2; used < 3 && p < 10000; ++p) {
      if (!is_prime(p)) continue;
      FpPoly fp = FpPoly::reduce(f, p);
      if (fp.degree() != n || gcd(fp, fp.derivative()).degree() != 0) continue;
      ++used;
      auto fac = factor(fp);
      if (fac.size() == 1) return true;
      common &= degree_sums(fac);
    }
    bool only_trivial = true;
    for (int d = 1; d < n; ++d)
      if (common.test(d)) only_trivial = false;
    if (only_trivial) return true;
  }
  auto fac = factor_over_q(f);
  return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace brauerkit
