#pragma once

// Polynomials over the prime field F_p (p < 2^63) and their factorization:
// squarefree decomposition, distinct-degree and Cantor-Zassenhaus
// equal-degree splitting.

#include <cstdint>
#include <utility>
#include <vector>

#include "brauerkit/polynomial.hpp"

namespace brauerkit {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
bool is_prime(u64 n);

class FpPoly {
 public:
  explicit FpPoly(u64 p) : p_(p) {}
  FpPoly(u64 p, std::vector<u64> coeffs);

  /// Reduction of an integer polynomial.
  static FpPoly reduce(const ZPoly& f, u64 p);
  /// Reduction of a p-integral rational polynomial; returns false if some
  /// denominator is divisible by p.
  static bool reduce(const QPoly& f, u64 p, FpPoly& out);
  static FpPoly constant(u64 p, u64 v) { return FpPoly(p, {v % p}); }
  static FpPoly x(u64 p) { return FpPoly(p, {0, 1}); }

  u64 modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<u64>& coefficients() const { return c_; }
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 leading() const { return c_.back(); }

  u64 eval(u64 x) const;
  FpPoly derivative() const;
  FpPoly monic() const;
  ZPoly lift() const;  ///< coefficients in [0, p)

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, u64 s);
  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  /// Canonical order: degree first, then coefficients from the top down.
  friend bool operator<(const FpPoly& a, const FpPoly& b);

 private:
  void trim();

  u64 p_;
  std::vector<u64> c_;
};

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly gcd(FpPoly a, FpPoly b);

struct FpExtendedGcd {
  FpPoly g, s, t;
};
FpExtendedGcd extended_gcd(const FpPoly& a, const FpPoly& b);

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m);

/// (factor, multiplicity) pairs; factors monic, pairwise coprime, squarefree.
std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f);

/// Complete factorization into monic irreducibles with multiplicity, in
/// canonical order. The product of factors^multiplicity equals monic(f).
std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f);

bool is_irreducible(const FpPoly& f);

/// Factorization of f mod p (f is reduced first).
std::vector<std::pair<FpPoly, int>> factor_mod_p(const ZPoly& f, u64 p);

}  // namespace brauerkit
