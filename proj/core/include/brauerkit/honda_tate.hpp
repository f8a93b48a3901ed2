#pragma once

// Frobenius data of abelian varieties over finite fields: Weil numbers,
// the local invariants of their endomorphism algebras, and the splitting
// obstruction for reductions of varieties with noncommutative End^0.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauerkit/csa.hpp"

namespace brauerkit {

struct PrimePower {
  u64 p = 2;
  int m = 1;
  Integer q() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Throws InvalidArgument unless p is prime and m >= 1.
PrimePower make_prime_power(u64 p, int m);
/// Decomposes q = p^m. Throws InvalidArgument if q is not a prime power.
PrimePower prime_power_of(const Integer& q);

struct WeilNumber {
  ZPoly minpoly;
  PrimePower q;
};

/// f irreducible with every complex root of absolute value sqrt(q), decided
/// exactly. Throws NotMonic.
bool is_weil_number(const ZPoly& f, const PrimePower& q);

/// Throws InvalidArgument if f is not a Weil q-polynomial.
WeilNumber make_weil_number(const ZPoly& f, const PrimePower& q);

/// Q(pi); Q itself is presented by x when pi is rational.
NumberField frobenius_field(const WeilNumber& w);

/// Local invariants of End^0 of the simple isogeny class attached to pi.
/// Throws AmbiguousSlopeMatching, NonMonogenicAtP.
BrauerClass tate_invariants(const WeilNumber& w);

struct IsogenyClassInvariants {
  NumberField center;
  BrauerClass endo_class;
  Integer e;  ///< Schur index
  Integer g;  ///< dimension
};

IsogenyClassInvariants isogeny_invariants(const WeilNumber& w);

enum class Obstruction { MustSplit, NoObstruction, NotApplicable };
std::string_view to_string(Obstruction o);

struct ObstructionReport {
  Obstruction verdict = Obstruction::NotApplicable;
  std::optional<BrauerClass> frobenius_class;  ///< B, absent when not applicable
  std::optional<EmbedDecision> decision;
  std::string reason;
};

/// Can the reduction with Frobenius w be simple, given the prime subalgebra
/// D (center F, from z_to_f) of End^0(A) = endo_a? MustSplit when D embeds
/// in no division algebra with Tate's invariants for w.
ObstructionReport reduction_obstruction(const BrauerClass& endo_a, const Integer& ell, const BrauerClass& d,
                                        const SubfieldMap& z_to_f, const WeilNumber& w);

struct QmSurfaceRow {
  WeilNumber weil;
  ObstructionReport report;
};

struct QmSurfaceReport {
  PrimePower q;
  std::vector<QmSurfaceRow> rows;
  bool all_must_split = true;
};

/// Runs the obstruction over every Weil q-number of degree <= 2 for an
/// indefinite quaternion algebra over Q. Throws NotIndefinite, RamifiedAtP.
QmSurfaceReport qm_surface_check(const BrauerClass& endo_a, const PrimePower& q);

/// All Weil q-polynomials of degree 1, 2 or 4, in canonical order.
std::vector<WeilNumber> enumerate_weil_polys(const PrimePower& q, int degree);

/// Indefinite quaternion algebra over Q ramified exactly at the given primes.
BrauerClass quaternion_class(const std::vector<u64>& ramified_primes, bool ramified_at_infinity = false);

struct CsvIssue {
  std::size_t line = 0;
  std::string message;
};

struct CsvImport {
  std::vector<WeilNumber> numbers;
  std::vector<std::size_t> lines;  ///< source line of each number
  std::vector<CsvIssue> issues;
};

/// Rows `p,m,coeffs` with coeffs space separated in ascending degree. An
/// optional header row is skipped. L-polynomials (constant term 1) are
/// reversed, and a power of an irreducible polynomial is replaced by its
/// radical. Malformed rows are reported and skipped.
CsvImport import_weil_csv(std::istream& in);

}  // namespace brauerkit
