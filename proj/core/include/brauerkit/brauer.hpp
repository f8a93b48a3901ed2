#pragma once

// Brauer classes over number fields, stored as their local invariants in Q/Z.

#include <map>
#include <utility>
#include <vector>

#include "brauerkit/number_field.hpp"

namespace brauerkit {

/// r mod 1, in [0, 1).
Rational mod_one(const Rational& r);

class BrauerClass {
 public:
  explicit BrauerClass(NumberField center) : center_(std::move(center)) {}

  const NumberField& center() const { return center_; }
  /// Nonzero invariants only, keyed by place identity.
  const std::map<Place, Rational>& invariants() const { return inv_; }
  Rational invariant(const Place& v) const;
  bool is_trivial() const { return inv_.empty(); }

  friend bool operator==(const BrauerClass& a, const BrauerClass& b) {
    return a.center_ == b.center_ && a.inv_ == b.inv_;
  }

 private:
  friend BrauerClass make_class(const NumberField&, const std::vector<std::pair<Place, Rational>>&);

  NumberField center_;
  std::map<Place, Rational> inv_;
};

/// Validating constructor. Invariants are reduced mod 1 and zeros dropped.
/// Throws InvalidPlace, BadArchimedean, ReciprocityViolation.
BrauerClass make_class(const NumberField& center, const std::vector<std::pair<Place, Rational>>& data);

BrauerClass trivial_class(const NumberField& center);

/// a + sign*b. Throws CenterMismatch.
BrauerClass combine(const BrauerClass& a, const BrauerClass& b, int sign = 1);
BrauerClass multiply(const BrauerClass& a, const Integer& k);
inline BrauerClass opposite(const BrauerClass& a) { return multiply(a, -1); }

/// Order in the Brauer group: lcm of the denominators.
Integer schur_index(const BrauerClass& c);

/// Extension of scalars along K -> L: inv_w = [L_w : K_v] inv_v.
/// Throws CenterMismatch if c does not live on the source of emb.
BrauerClass restrict(const BrauerClass& c, const SubfieldMap& emb);

}  // namespace brauerkit
