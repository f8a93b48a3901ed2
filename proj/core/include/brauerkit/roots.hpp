#pragma once

// Exact root location for integer polynomials.
//
// Real roots are counted with Sturm sequences. All complex roots are
// enclosed in certified disjoint disks: approximations come from a
// Weierstrass (Durand-Kerner) iteration on dyadic rationals, and the disks
// D(z_i, n |W_i|) are certified by the Gerschgorin argument for the
// Weierstrass correction W_i. No floating point is involved.

#include <vector>

#include "brauerkit/polynomial.hpp"

namespace brauerkit {

class SturmSequence {
 public:
  /// f must be squarefree (not checked here).
  explicit SturmSequence(const ZPoly& f);

  int sign_changes_at(const Rational& x) const;
  int sign_changes_at_pos_infinity() const;
  int sign_changes_at_neg_infinity() const;

  /// Number of distinct real roots in the half-open interval (a, b].
  int count_in(const Rational& a, const Rational& b) const;
  int count_above(const Rational& a) const;  ///< roots in (a, +inf)
  int count_all() const;

 private:
  std::vector<QPoly> seq_;
};

/// Exact number of real roots; throws NotSquarefree.
int count_real_roots(const ZPoly& f);

/// Closed isolating interval; lo == hi when the root is rational and hit exactly.
struct RealInterval {
  Rational lo, hi;
};

/// Isolating intervals of the real roots of a squarefree f, ascending.
std::vector<RealInterval> isolate_real_roots(const ZPoly& f);

/// Cauchy bound: every complex root has absolute value below it.
Rational root_bound(const ZPoly& f);

struct Complex {
  Rational re, im;
  friend bool operator==(const Complex&, const Complex&) = default;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Rational norm2(const Complex& a);

struct RootDisk {
  Complex center;
  Rational radius;
};

bool disks_intersect(const RootDisk& a, const RootDisk& b);

struct RootEnclosures {
  std::vector<RootDisk> real;   ///< real roots, ascending; centers on the real line
  std::vector<RootDisk> upper;  ///< roots with positive imaginary part
  int precision_bits = 0;
};

/// Certified disjoint disks, one per root, for a squarefree f. The disks of
/// the lower half-plane roots are the conjugates of `upper`.
/// `min_precision_bits` controls how small the radii get.
RootEnclosures enclose_roots(const ZPoly& f, int min_precision_bits = 64);

/// Disk guaranteed to contain phi(z) for every z in `disk`.
RootDisk image_disk(const QPoly& phi, const RootDisk& disk);

}  // namespace brauerkit
