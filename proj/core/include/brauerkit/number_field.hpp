#pragma once

// Number fields given by a monic irreducible integer polynomial, or
// abstractly by their local degrees. Places, restriction of places along
// field embeddings, composita and Newton polygons.

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "brauerkit/fp_poly.hpp"
#include "brauerkit/polynomial.hpp"
#include "brauerkit/roots.hpp"

namespace brauerkit {

/// Key of a rational place: a prime p, or kInfinity for the real place of Q.
inline constexpr u64 kInfinity = 0;

/// Local degrees [L_w : Q_v] of the places w above each listed rational place.
struct LocalDegreeProfile {
  std::map<u64, std::vector<int>> entries;
  friend bool operator==(const LocalDegreeProfile&, const LocalDegreeProfile&) = default;
};

struct Place {
  enum class Kind { Finite, Real, Complex };

  Kind kind = Kind::Finite;
  u64 p = 0;      ///< residue characteristic (finite places)
  int index = 0;  ///< position among places above p, or among real/complex places
  int e = 0;      ///< ramification index (0 when unknown, i.e. abstract fields)
  int f = 0;      ///< residue degree (0 when unknown)
  int degree = 1; ///< local degree over Q_p (finite) or R (1 real, 2 complex)
  std::vector<u64> factor;              ///< residue factor of the local generator mod p
  std::optional<RealInterval> interval; ///< isolating interval of a real place

  static Place finite(u64 p, int index) { return make(Kind::Finite, p, index, 1); }
  static Place real(int index) { return make(Kind::Real, 0, index, 1); }
  static Place complex(int index) { return make(Kind::Complex, 0, index, 2); }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_real() const { return kind == Kind::Real; }
  bool is_complex() const { return kind == Kind::Complex; }

  // Identity is (kind, p, index); the remaining fields are derived data.
  friend bool operator==(const Place& a, const Place& b) {
    return std::tie(a.kind, a.p, a.index) == std::tie(b.kind, b.p, b.index);
  }
  friend auto operator<=>(const Place& a, const Place& b) {
    return std::tie(a.kind, a.p, a.index) <=> std::tie(b.kind, b.p, b.index);
  }

 private:
  static Place make(Kind kind, u64 p, int index, int degree) {
    Place v;
    v.kind = kind;
    v.p = p;
    v.index = index;
    v.degree = degree;
    return v;
  }
};

std::string describe(const Place& v);

/// An integral element beta whose minimal polynomial satisfies Dedekind's
/// criterion at p, so its factorization mod p describes the primes above p.
struct LocalGenerator {
  QPoly in_generator;      ///< beta in terms of the field generator
  ZPoly minpoly;           ///< monic, integral
  QPoly generator_in_beta; ///< the field generator in terms of beta
  bool is_default = true;  ///< beta is the field generator itself
};

struct LocalData {
  u64 p = 0;
  LocalGenerator generator;
  std::vector<Place> places;    ///< canonical order
  std::vector<FpPoly> factors;  ///< residue factor of each place
};

struct ArchimedeanPlaces {
  int r1 = 0;
  int r2 = 0;
  std::vector<Place> real;
  std::vector<Place> complex;
};

class NumberField {
 public:
  /// Q, presented by the polynomial x.
  static NumberField rationals();
  /// Throws NotMonic / NotIrreducible.
  static NumberField from_polynomial(const ZPoly& f);
  /// Throws InvalidArgument when a profile entry does not sum to the degree.
  static NumberField abstract(int degree, LocalDegreeProfile profile);

  bool is_concrete() const;
  bool is_rationals() const { return is_concrete() && degree() == 1; }
  int degree() const;
  const ZPoly& polynomial() const;
  const LocalDegreeProfile& profile() const;

  /// Cached, thread-safe. Concrete fields only.
  const LocalData& local_data(u64 p) const;
  /// Certified root disks in the canonical place order; refined on request.
  RootEnclosures enclosures(int min_bits = 64) const;

  std::string describe() const;

  friend bool operator==(const NumberField& a, const NumberField& b);

 private:
  struct Impl;
  explicit NumberField(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

/// An embedding of number fields K -> L: K's generator maps to `image`,
/// a polynomial in L's generator.
class SubfieldMap {
 public:
  /// Validates f_K(image) = 0 in L. Throws InvalidMap.
  static SubfieldMap make(NumberField source, NumberField target, QPoly image);
  static SubfieldMap identity(const NumberField& k);
  static SubfieldMap from_rationals(const NumberField& target);

  const NumberField& source() const { return source_; }
  const NumberField& target() const { return target_; }
  const QPoly& image() const { return image_; }
  int relative_degree() const { return target_.degree() / source_.degree(); }

  /// Image of an element of K (polynomial in K's generator), reduced in L.
  QPoly apply(const QPoly& element) const;

 private:
  SubfieldMap(NumberField s, NumberField t, QPoly image)
      : source_(std::move(s)), target_(std::move(t)), image_(std::move(image)) {}

  NumberField source_;
  NumberField target_;
  QPoly image_;
};

// --- operations --------------------------------------------------------------

/// Finite places above p, with e and f read off Dedekind's criterion.
/// Throws NonMonogenicAtP if no p-maximal local generator is found.
std::vector<Place> places_above(const NumberField& k, u64 p);

ArchimedeanPlaces infinite_places(const NumberField& k);

/// The place of k with the identity (kind, p, index) of w, with all derived
/// data filled in. Throws InvalidPlace.
Place resolve_place(const NumberField& k, const Place& w);

struct PlaceBelow {
  Place place;
  int local_degree = 1;
};

/// The place of K under a place w of L, and [L_w : K_v].
PlaceBelow place_below(const SubfieldMap& emb, const Place& w);

/// Places of L above a place v of K, each with its local degree.
std::vector<PlaceBelow> places_over(const SubfieldMap& emb, const Place& v);

struct Compositum {
  NumberField field;
  SubfieldMap from_first;   ///< F -> compositum
  SubfieldMap from_second;  ///< K -> compositum
  int shift = 0;            ///< t in theta + t*alpha used by the norm method
};

/// Degree bound for composita: BRAUERKIT_DEGREE_LIMIT or 16.
int default_degree_limit();

/// One candidate per irreducible factor of f_F over K.
std::vector<Compositum> compositum_candidates(const NumberField& f, const NumberField& k,
                                             int degree_limit = default_degree_limit());

struct NewtonSegment {
  Rational slope;  ///< p-adic valuation of the roots on this segment
  int length = 0;
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

struct NewtonPolygon {
  std::vector<NewtonSegment> segments;  ///< ascending slope
  int zero_roots = 0;                   ///< multiplicity of the root 0 (infinite slope)
};

NewtonPolygon newton_polygon(const ZPoly& f, u64 p);

// --- element arithmetic in Q[x]/(f) -----------------------------------------

QPoly reduce_mod(const QPoly& a, const ZPoly& f);
QPoly multiply_mod(const QPoly& a, const QPoly& b, const ZPoly& f);
QPoly inverse_mod(const QPoly& a, const ZPoly& f);
/// a(b(x)) mod f.
QPoly compose_mod(const QPoly& a, const QPoly& b, const ZPoly& f);

/// Residue of an integral element of K at a finite place: its image in
/// F_p[y]/(factor). Throws InvalidArgument if the element is not p-integral.
FpPoly residue_at(const NumberField& k, const QPoly& element, const Place& v);

/// Dedekind's criterion for Z[x]/(f) at p.
bool dedekind_criterion(const ZPoly& f, u64 p);

}  // namespace brauerkit
