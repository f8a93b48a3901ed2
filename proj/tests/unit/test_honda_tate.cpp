#include <doctest.h>

#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <sstream>

#include "brauerkit/error.hpp"
#include "brauerkit/fp_poly.hpp"
#include "brauerkit/zfactor.hpp"
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

// An ordinary quartic reduces to x^2 h(x) with h(0) != 0. When h is squarefree
// its factors give the unit-root places, and q/pi mirrors each one with the same
// residue degree. p is then a common index divisor whenever some residue degree
// occurs more often than there are monic irreducibles of that degree over F_p.
bool ordinary_common_index_divisor(const ZPoly& f, u64 p) {
  FpPoly bar = FpPoly::reduce(f, p);
  const auto& c = bar.coefficients();
  if (c.size() != 5 || c[0] != 0 || c[1] != 0 || c[2] == 0) return false;
  FpPoly h(p, std::vector<u64>(c.begin() + 2, c.end()));
  auto fac = factor(h);
  std::map<int, int> by_degree;
  for (const auto& [g, e] : fac) {
    if (e > 1) return false;
    by_degree[g.degree()] += 2;
  }
  for (const auto& [d, n] : by_degree) {
    const long irreducibles = d == 1 ? static_cast<long>(p) : static_cast<long>((p * p - p) / 2);
    if (n > irreducibles) return true;
  }
  return false;
}

PrimePower pq(u64 p, int m = 1) { return make_prime_power(p, m); }

WeilNumber weil(ZPoly f, PrimePower q) { return make_weil_number(f, q); }

// Roots of a quartic by Durand-Kerner in long double; used as an independent
// check on the degree-4 enumeration.
bool roots_on_circle(const ZPoly& f, long double r) {
  using C = std::complex<long double>;
  const int n = f.degree();
  std::vector<C> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::polar(r, 0.4L + 2.0L * 3.14159265358979L * i / n);
  auto eval = [&](C x) {
    C v = 0;
    for (int i = n; i >= 0; --i) v = v * x + C(f[i].get_d(), 0);
    return v;
  };
  for (int it = 0; it < 2000; ++it) {
    for (int i = 0; i < n; ++i) {
      C den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      z[i] -= eval(z[i]) / den;
    }
  }
  for (const auto& x : z)
    if (std::fabs(std::abs(x) - r) > 1e-6L * r) return false;
  return true;
}

}  // namespace

TEST_CASE("prime powers") {
  CHECK(prime_power_of(49) == pq(7, 2));
  CHECK(prime_power_of(2).m == 1);
  CHECK(code_of([] { prime_power_of(12); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_prime_power(4, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Weil numbers") {
  CHECK(is_weil_number(ZPoly{5, -1, 1}, pq(5)));
  CHECK(is_weil_number(ZPoly{-2, 1}, pq(2, 2)));
  CHECK_FALSE(is_weil_number(ZPoly{5, -5, 1}, pq(5)));
  CHECK(is_weil_number(ZPoly{-5, 0, 1}, pq(5)));
  CHECK_FALSE(is_weil_number(ZPoly{-4, 0, 1}, pq(2, 2)));  // reducible
  CHECK_FALSE(is_weil_number(ZPoly{-2, 1}, pq(2)));
  CHECK_FALSE(is_weil_number(ZPoly{1, 0, 1}, pq(2)));
  CHECK(is_weil_number(ZPoly{4, 2, 1, 1, 1}, pq(2)) == roots_on_circle(ZPoly{4, 2, 1, 1, 1}, std::sqrt(2.0L)));
  CHECK(code_of([] { is_weil_number(ZPoly{5, -1, 2}, pq(5)); }) == ErrorCode::NotMonic);
  CHECK(code_of([] { make_weil_number(ZPoly{5, -5, 1}, pq(5)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("degree-2 Weil test matches the coefficient bound") {
  for (u64 qv = 2; qv <= 25; ++qv) {
    PrimePower q;
    try {
      q = prime_power_of(qv);
    } catch (const Error&) {
      continue;
    }
    const long qq = static_cast<long>(qv);
    for (long a = -12; a <= 12; ++a) {
      for (long b : {qq, -qq}) {
        ZPoly f{b, a, 1};
        bool expect = false;
        if (b == qq) expect = a * a < 4 * qq;
        else expect = a == 0 && static_cast<long>(std::lround(std::sqrt(double(qq)))) *
                                        static_cast<long>(std::lround(std::sqrt(double(qq)))) != qq;
        CHECK(is_weil_number(f, q) == expect);
      }
    }
  }
}

TEST_CASE("enumeration of Weil polynomials") {
  auto q2 = enumerate_weil_polys(pq(2), 2);
  CHECK(q2.size() == 6);
  std::set<std::string> names;
  for (const auto& w : q2) names.insert(to_string(w.minpoly));
  for (const char* s : {"x^2 - 2x + 2", "x^2 - x + 2", "x^2 + 2", "x^2 + x + 2", "x^2 + 2x + 2", "x^2 - 2"})
    CHECK(names.count(s) == 1);
  CHECK(enumerate_weil_polys(pq(3), 2).size() == 8);
  bool has = false, bad = false;
  for (const auto& w : enumerate_weil_polys(pq(5), 2)) {
    has = has || w.minpoly == ZPoly{5, -1, 1};
    bad = bad || w.minpoly == ZPoly{5, -5, 1};
  }
  CHECK(has);
  CHECK_FALSE(bad);
  CHECK(enumerate_weil_polys(pq(3, 2), 1).size() == 2);
  CHECK(enumerate_weil_polys(pq(3), 1).empty());
  CHECK(code_of([] { enumerate_weil_polys(pq(3), 3); }) == ErrorCode::InvalidArgument);
  for (u64 qv : {2, 3, 4, 5, 7, 9, 11, 13, 25}) {
    PrimePower q = prime_power_of(qv);
    auto got = enumerate_weil_polys(q, 1);
    for (auto& w : enumerate_weil_polys(q, 2)) got.push_back(w);
    auto want = brute_force_weil_deg_le2(q);
    REQUIRE(got.size() == want.size());
    std::set<std::string> a, b;
    for (const auto& w : got) a.insert(to_string(w.minpoly));
    for (const auto& f : want) b.insert(to_string(f));
    CHECK(a == b);
  }
}

TEST_CASE("degree-4 enumeration matches a numerical root check") {
  for (u64 qv : {2, 3}) {
    const PrimePower q = prime_power_of(qv);
    const long qq = static_cast<long>(qv);
    std::set<std::string> got;
    for (const auto& w : enumerate_weil_polys(q, 4)) got.insert(to_string(w.minpoly));
    std::set<std::string> want;
    for (long a = -8; a <= 8; ++a)
      for (long b = -20; b <= 20; ++b) {
        ZPoly f{qq * qq, qq * a, b, a, 1};
        if (!is_irreducible_over_q(f)) continue;
        if (roots_on_circle(f, std::sqrt(static_cast<long double>(qq)))) want.insert(to_string(f));
      }
    CHECK(got == want);
  }
  CHECK(enumerate_weil_polys(pq(2), 4).size() == 19);
}

TEST_CASE("Tate invariants") {
  auto ord = isogeny_invariants(weil({5, -1, 1}, pq(5)));
  CHECK(ord.endo_class.is_trivial());
  CHECK(ord.e == 1);
  CHECK(ord.g == 1);

  auto ss = tate_invariants(weil({-2, 1}, pq(2, 2)));
  CHECK(ss.center().is_rationals());
  CHECK(ss.invariant(Place::finite(2, 0)) == Rational(1, 2));
  CHECK(ss.invariant(Place::real(0)) == Rational(1, 2));

  auto nine = isogeny_invariants(weil({-3, 1}, pq(3, 2)));
  CHECK(nine.e == 2);
  CHECK(nine.g == 1);

  auto real = isogeny_invariants(weil({-5, 0, 1}, pq(5)));
  CHECK(real.e == 2);
  CHECK(real.g == 2);
  CHECK(real.endo_class.invariant(Place::real(0)) == Rational(1, 2));
  CHECK(real.endo_class.invariant(Place::real(1)) == Rational(1, 2));
  for (const auto& [v, x] : real.endo_class.invariants()) CHECK(!v.is_finite());

  // Supersingular over F_25 with a non-monogenic presentation.
  auto s25 = isogeny_invariants(weil({25, 0, 1}, pq(5, 2)));
  CHECK(s25.e == 2);
  CHECK(s25.g == 2);
}

TEST_CASE("Tate invariants of quartic Weil numbers") {
  // Non-ordinary quartics whose fields have p as a common index divisor,
  // checked by hand: p-rank one with a ramified middle place (three places of
  // degree 1 over F_2), or biquadratic with two places of degree 2 above 2.
  const std::set<std::vector<long>> hand_checked = {
      {4, -2, 0, -1, 1},  {4, 2, 0, 1, 1},   {4, 0, -1, 0, 1},  {16, -4, 0, -1, 1}, {16, 4, 0, 1, 1},
      {16, -4, 4, -1, 1}, {16, 4, 4, 1, 1},  {16, 0, -5, 0, 1}, {16, 0, 3, 0, 1}};
  int rejected = 0, accepted = 0;
  for (u64 qv : {2, 3, 4}) {
    const PrimePower q = prime_power_of(qv);
    for (const auto& w : enumerate_weil_polys(q, 4)) {
      std::vector<long> key;
      for (int i = 0; i <= 4; ++i) key.push_back(w.minpoly[i].get_si());
      const bool forced = ordinary_common_index_divisor(w.minpoly, q.p);
      if (forced || hand_checked.count(key)) {
        CHECK(code_of([&] { isogeny_invariants(w); }) == ErrorCode::NonMonogenicAtP);
        ++rejected;
        continue;
      }
      IsogenyClassInvariants inv = isogeny_invariants(w);
      ++accepted;
      CHECK(invariant_sum(inv.endo_class) == 0);
      CHECK(2 * inv.g == inv.e * 4);
      for (const auto& [v, x] : inv.endo_class.invariants())
        if (v.is_finite()) CHECK(v.p == q.p);
    }
  }
  CHECK(rejected == 41);
  CHECK(accepted > 0);
}

TEST_CASE("local generator search reaches sparse levels") {
  // Q(zeta_12) presented by x^4 + 3x^2 + 9 has index 27 and one place above 3.
  auto inv = isogeny_invariants(weil({9, 0, 3, 0, 1}, pq(3)));
  CHECK(inv.e == 1);
  auto three = places_above(NumberField::from_polynomial({9, 0, 3, 0, 1}), 3);
  REQUIRE(three.size() == 1);
  CHECK(three[0].e == 2);
  CHECK(three[0].f == 2);
}

TEST_CASE("reduction obstruction") {
  BrauerClass endo = quaternion_class({2, 3});
  const NumberField q = NumberField::rationals();
  const SubfieldMap id = SubfieldMap::identity(q);
  auto a = reduction_obstruction(endo, 2, endo, id, weil({5, -1, 1}, pq(5)));
  CHECK(a.verdict == Obstruction::MustSplit);
  REQUIRE(a.decision.has_value());
  CHECK(a.decision->candidates[0].verdict.failing_condition == FailingCondition::Condition1);
  CHECK(reduction_obstruction(endo, 2, endo, id, weil({5, 0, 1}, pq(5))).verdict == Obstruction::MustSplit);
  auto na = reduction_obstruction(endo, 2, endo, id, weil({3, -1, 1}, pq(3)));
  CHECK(na.verdict == Obstruction::NotApplicable);
  CHECK_FALSE(na.frobenius_class.has_value());
  // B_{5,inf} over Q: d = 2 but the classes differ at 2, 3 and 5.
  auto s = reduction_obstruction(endo, 2, endo, id, weil({-5, 1}, pq(5, 2)));
  CHECK(s.verdict == Obstruction::MustSplit);
  CHECK(s.decision->candidates[0].verdict.failing_condition == FailingCondition::Condition2);
}

TEST_CASE("reduction without obstruction") {
  // End^0 = B_{2,inf}; pi = sqrt5 over F_5 gives Tate's class {inf1, inf2} on
  // Q(sqrt5), which is exactly B_{2,inf} extended to Q(sqrt5).
  BrauerClass endo = quaternion_class({2}, true);
  const SubfieldMap id = SubfieldMap::identity(NumberField::rationals());
  auto r = reduction_obstruction(endo, 2, endo, id, weil({-5, 0, 1}, pq(5)));
  CHECK(r.verdict == Obstruction::NoObstruction);
  CHECK(r.decision->embeddable);
}

TEST_CASE("QM surface check") {
  BrauerClass endo = quaternion_class({2, 3});
  for (u64 qv : {5, 7, 11, 13, 25, 49}) {
    QmSurfaceReport r = qm_surface_check(endo, prime_power_of(qv));
    CHECK(r.all_must_split);
    CHECK(r.rows.size() == brute_force_weil_deg_le2(r.q).size());
  }
  CHECK(code_of([&] { qm_surface_check(quaternion_class({5}, true), pq(7)); }) == ErrorCode::NotIndefinite);
  CHECK(code_of([&] { qm_surface_check(endo, pq(3)); }) == ErrorCode::RamifiedAtP);
}

TEST_CASE("quaternion classes") {
  BrauerClass b = quaternion_class({2, 3});
  CHECK(schur_index(b) == 2);
  CHECK(b.invariant(Place::real(0)) == 0);
  CHECK(quaternion_class({5}, true).invariant(Place::real(0)) == Rational(1, 2));
  CHECK(code_of([] { quaternion_class({2}); }) == ErrorCode::ReciprocityViolation);
}

TEST_CASE("CSV import") {
  std::istringstream in(
      "p,m,coeffs\n"
      "5,1,5 -1 1\n"
      "2,1,1 -1 2\n"
      "3,1,9 -6 1\n"
      "5,1,5 -5 1\n"
      "x,1,1 2\n"
      "7,1\n"
      "\n"
      "2,2,-2 1\n");
  CsvImport imp = import_weil_csv(in);
  REQUIRE(imp.numbers.size() == 3);
  CHECK(imp.numbers[0].minpoly == ZPoly{5, -1, 1});
  CHECK(imp.lines[0] == 2);
  // The L-polynomial 1 - x + 2x^2 is reversed to x^2 - x + 2.
  CHECK(imp.numbers[1].minpoly == ZPoly{2, -1, 1});
  CHECK(imp.numbers[2].minpoly == ZPoly{-2, 1});
  CHECK(imp.lines[2] == 9);
  std::set<std::size_t> bad;
  for (const auto& issue : imp.issues) bad.insert(issue.line);
  // (x - 3)^2 reduces to x - 3, which is not a Weil 3-number.
  CHECK(bad == std::set<std::size_t>{4, 5, 6, 7});
}
