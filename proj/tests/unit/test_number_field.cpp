#include <doctest.h>

#include <cstdlib>

#include "brauerkit/error.hpp"
#include "support/catalog.hpp"

using namespace brauerkit;
using namespace brauerkit::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInvariant;
}

int sum_ef(const std::vector<Place>& places) {
  int s = 0;
  for (const auto& v : places) s += v.e * v.f;
  return s;
}

}  // namespace

TEST_CASE("field construction validates the polynomial") {
  CHECK(code_of([] { NumberField::from_polynomial(ZPoly{1, 0, 2}); }) == ErrorCode::NotMonic);
  CHECK(code_of([] { NumberField::from_polynomial(ZPoly{-1, 0, 1}); }) == ErrorCode::NotIrreducible);
  CHECK(NumberField::rationals().is_rationals());
  CHECK(catalog().z8.degree() == 4);
  CHECK(code_of([] { NumberField::abstract(4, {{{2, {1, 2}}}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("places above p") {
  const Catalog& c = catalog();
  auto five = places_above(c.qi, 5);
  REQUIRE(five.size() == 2);
  for (const auto& v : five) CHECK((v.e == 1 && v.f == 1));
  auto two = places_above(c.qi, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].e == 2);
  CHECK(two[0].f == 1);
  CHECK(places_above(NumberField::from_polynomial({5, -1, 1}), 5).size() == 2);
  auto three = places_above(c.qi, 3);
  REQUIRE(three.size() == 1);
  CHECK(three[0].f == 2);
}

TEST_CASE("places above p when Z[x] is not p-maximal") {
  // Z[5i] has index 5 in Z[i]; 5 still splits.
  auto k = NumberField::from_polynomial({25, 0, 1});
  auto five = places_above(k, 5);
  REQUIRE(five.size() == 2);
  CHECK(sum_ef(five) == 2);
  // Z[sqrt5] has index 2 in the maximal order; 2 is inert.
  auto two = places_above(catalog().s5, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].f == 2);
  // Q(zeta_8) presented by i + sqrt2: 3 splits into two primes of degree 2.
  auto z = NumberField::from_polynomial({9, 0, -2, 0, 1});
  auto three = places_above(z, 3);
  REQUIRE(three.size() == 2);
  for (const auto& v : three) CHECK(v.f == 2);
}

TEST_CASE("sum of e f over places is the degree") {
  const Catalog& c = catalog();
  for (const auto& k : {c.qi, c.s2, c.s3, c.sm3, c.s5, c.z8, c.z12, c.cubic})
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) CHECK(sum_ef(places_above(k, p)) == k.degree());
}

TEST_CASE("infinite places") {
  const Catalog& c = catalog();
  auto a = infinite_places(c.qi);
  CHECK(a.r1 == 0);
  CHECK(a.r2 == 1);
  auto b = infinite_places(c.s3);
  CHECK(b.r1 == 2);
  CHECK(b.r2 == 0);
  auto d = infinite_places(c.cubic);
  CHECK(d.r1 == 1);
  CHECK(d.r2 == 1);
  for (const auto& k : {c.q, c.qi, c.s2, c.s3, c.sm3, c.s5, c.z8, c.z12, c.cubic}) {
    auto inf = infinite_places(k);
    CHECK(inf.r1 + 2 * inf.r2 == k.degree());
    CHECK(inf.r1 == count_real_roots(k.polynomial()));
  }
}

TEST_CASE("place below") {
  const Catalog& c = catalog();
  SubfieldMap into_z8 = SubfieldMap::make(c.qi, c.z8, QPoly{0, 0, 1});
  for (const auto& w : places_above(c.z8, 5)) {
    PlaceBelow b = place_below(into_z8, w);
    CHECK(b.local_degree == 2);
    CHECK(b.place.p == 5);
  }
  for (const auto& w : places_above(c.z8, 2)) CHECK(place_below(SubfieldMap::from_rationals(c.z8), w).local_degree == 4);
  for (const auto& w : places_above(c.cubic, 7)) {
    PlaceBelow b = place_below(SubfieldMap::identity(c.cubic), w);
    CHECK(b.place == w);
    CHECK(b.local_degree == 1);
  }
  SubfieldMap s2_into_z8 = SubfieldMap::make(c.s2, c.z8, QPoly{0, 1, 0, -1});
  for (const auto& w : infinite_places(c.z8).complex) {
    PlaceBelow b = place_below(s2_into_z8, w);
    CHECK(b.place.is_real());
    CHECK(b.local_degree == 2);
  }
  for (const auto& w : infinite_places(c.z8).complex) {
    PlaceBelow b = place_below(into_z8, w);
    CHECK(b.place.is_complex());
    CHECK(b.local_degree == 1);
  }
}

TEST_CASE("places over a place sum to the relative degree") {
  for (const auto& emb : catalog_towers()) {
    const NumberField& k = emb.source();
    for (u64 p : {2, 3, 5, 7, 13}) {
      for (const auto& v : places_above(k, p)) {
        int total = 0;
        for (const auto& w : places_over(emb, v)) total += w.local_degree;
        CHECK(total == emb.relative_degree());
      }
    }
    auto inf = infinite_places(k);
    std::vector<Place> arch = inf.real;
    arch.insert(arch.end(), inf.complex.begin(), inf.complex.end());
    if (k.is_rationals()) arch = {Place::real(0)};
    for (const auto& v : arch) {
      int total = 0;
      for (const auto& w : places_over(emb, v)) total += w.local_degree;
      CHECK(total == emb.relative_degree());
    }
  }
}

TEST_CASE("subfield maps are validated") {
  const Catalog& c = catalog();
  CHECK(code_of([&] { SubfieldMap::make(c.qi, c.z8, QPoly{0, 1}); }) == ErrorCode::InvalidMap);
  CHECK_NOTHROW(SubfieldMap::make(c.qi, c.z8, QPoly{0, 0, -1}));
}

TEST_CASE("compositum candidates") {
  const Catalog& c = catalog();
  auto same = compositum_candidates(c.s2, c.s2);
  REQUIRE(same.size() == 2);
  for (const auto& x : same) CHECK(x.field.degree() == 2);
  auto mixed = compositum_candidates(c.s2, c.s3);
  REQUIRE(mixed.size() == 1);
  CHECK(mixed[0].field.degree() == 4);
  auto base = compositum_candidates(c.q, c.s3);
  REQUIRE(base.size() == 1);
  CHECK(base[0].field == c.s3);
  auto cyc = compositum_candidates(c.qi, c.z8);
  CHECK(cyc.size() == 2);
  auto six = compositum_candidates(c.cubic, c.qi);
  REQUIRE(six.size() == 1);
  CHECK(six[0].field.degree() == 6);
  for (const auto& [f, k] : {std::pair{c.s2, c.s3}, std::pair{c.qi, c.sm3}, std::pair{c.cubic, c.s2}, std::pair{c.z8, c.s2}}) {
    for (const auto& x : compositum_candidates(f, k)) {
      const int n = x.field.degree();
      CHECK((f.degree() * k.degree()) % n == 0);
      CHECK(n >= std::max(f.degree(), k.degree()));
      CHECK(x.from_first.source() == f);
      CHECK(x.from_second.source() == k);
    }
  }
}

TEST_CASE("compositum degree limit") {
  const Catalog& c = catalog();
  CHECK(code_of([&] { compositum_candidates(c.cubic, c.z8, 8); }) == ErrorCode::DegreeLimitExceeded);
  CHECK(compositum_candidates(c.cubic, c.qi, 6).size() == 1);
}

TEST_CASE("Newton polygons") {
  auto a = newton_polygon(ZPoly{5, 0, 1}, 5);
  REQUIRE(a.segments.size() == 1);
  CHECK(a.segments[0].slope == Rational(1, 2));
  CHECK(a.segments[0].length == 2);
  auto b = newton_polygon(ZPoly{5, -1, 1}, 5);
  REQUIRE(b.segments.size() == 2);
  CHECK(b.segments[0] == NewtonSegment{0, 1});
  CHECK(b.segments[1] == NewtonSegment{1, 1});
  auto c = newton_polygon(ZPoly{-2, 1}, 5);
  REQUIRE(c.segments.size() == 1);
  CHECK(c.segments[0] == NewtonSegment{0, 1});
  auto z = newton_polygon(ZPoly{0, 0, 3, 1}, 3);
  CHECK(z.zero_roots == 2);
  for (const auto& f : catalog_polynomials()) {
    if (!f.is_monic() || f[0] == 0) continue;
    for (u64 p : {2, 3, 5}) {
      auto np = newton_polygon(f, p);
      int len = 0;
      for (std::size_t i = 0; i < np.segments.size(); ++i) {
        len += np.segments[i].length;
        if (i > 0) CHECK(np.segments[i - 1].slope < np.segments[i].slope);
      }
      CHECK(len == f.degree());
    }
  }
}

TEST_CASE("residues at places") {
  const Catalog& c = catalog();
  auto five = places_above(c.qi, 5);
  // i reduces to a square root of -1 in F_5 at each place, and the two differ.
  FpPoly r0 = residue_at(c.qi, QPoly{0, 1}, five[0]);
  FpPoly r1 = residue_at(c.qi, QPoly{0, 1}, five[1]);
  CHECK(r0 != r1);
  CHECK(code_of([&] { residue_at(c.qi, QPoly::constant(Rational(1, 5)), five[0]); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("abstract fields carry their profile") {
  NumberField k = NumberField::abstract(2, {{{2, {2}}, {3, {1, 1}}, {kInfinity, {2}}}});
  CHECK_FALSE(k.is_concrete());
  auto two = places_above(k, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].degree == 2);
  CHECK(places_above(k, 3).size() == 2);
  CHECK(infinite_places(k).r2 == 1);
  CHECK(code_of([&] { places_above(k, 5); }) == ErrorCode::ProfileIncomplete);
}

TEST_CASE("degree limit from the environment") {
  setenv("BRAUERKIT_DEGREE_LIMIT", "5", 1);
  CHECK(default_degree_limit() == 5);
  unsetenv("BRAUERKIT_DEGREE_LIMIT");
  CHECK(default_degree_limit() == 16);
}
