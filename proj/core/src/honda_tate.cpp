#include "brauerkit/honda_tate.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "brauerkit/error.hpp"
#include "brauerkit/zfactor.hpp"

namespace brauerkit {
namespace {

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer pow_q(const Integer& q, int k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

// h with f(x) = x^g h(x + q/x), for f satisfying the Weil symmetry.
ZPoly real_weil_polynomial(const ZPoly& f, const Integer& q) {
  const int g = f.degree() / 2;
  ZPoly rest = f;
  std::vector<Integer> h(g + 1);
  const ZPoly x2q{0, 0, 1};
  const ZPoly base = x2q + ZPoly::constant(q);
  for (int k = g; k >= 0; --k) {
    h[k] = rest.coeff(g + k);
    ZPoly term = ZPoly::constant(h[k]);
    for (int i = 0; i < k; ++i) term = term * base;
    rest -= term.shift_up(g - k);
  }
  if (!rest.is_zero()) fail(ErrorCode::InternalInvariant, "Weil symmetry holds but h does not exist");
  return ZPoly(std::move(h));
}

// Residue-field test for the Newton slope attached to a place.
struct SlopeConstraint {
  bool positive;         // pi lies in the prime
  bool below_maximum;    // q/pi lies in the prime
};

struct SlopeMatcher {
  const std::vector<Place>& places;
  const std::vector<SlopeConstraint>& constraints;
  const std::vector<NewtonSegment>& segments;
  int m;
  std::vector<int> remaining;  // unassigned length per segment
  std::vector<int> choice;
  std::set<std::vector<Rational>> outcomes;

  void run(std::size_t i) {
    if (i == places.size()) {
      for (int r : remaining)
        if (r != 0) return;
      std::vector<Rational> inv;
      for (std::size_t j = 0; j < places.size(); ++j) {
        Rational x = segments[choice[j]].slope * places[j].e * places[j].f / m;
        inv.push_back(mod_one(x));
      }
      outcomes.insert(inv);
      return;
    }
    const int deg = places[i].e * places[i].f;
    for (std::size_t s = 0; s < segments.size(); ++s) {
      const Rational& lambda = segments[s].slope;
      if (remaining[s] < deg) continue;
      if (constraints[i].positive != (lambda > 0)) continue;
      if (constraints[i].below_maximum != (lambda < m)) continue;
      remaining[s] -= deg;
      choice[i] = static_cast<int>(s);
      run(i + 1);
      remaining[s] += deg;
    }
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n\"";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool parse_integer(const std::string& s, Integer& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return out.set_str(s[0] == '+' ? s.substr(1) : s, 10) == 0;
}

// The Weil polynomial carried by a CSV row: reversed if given as an
// L-polynomial, reduced to the radical if a power of an irreducible.
ZPoly normalize_row_polynomial(const ZPoly& f) {
  ZPoly g = f;
  if (!g.is_monic() && g.degree() > 0 && g[0] == 1) {
    std::vector<Integer> c = g.coefficients();
    std::reverse(c.begin(), c.end());
    g = ZPoly(std::move(c));
  }
  if (!g.is_monic()) fail(ErrorCode::NotMonic, "polynomial is neither monic nor an L-polynomial");
  auto fac = factor_over_q(g);
  if (fac.size() != 1) fail(ErrorCode::InvalidArgument, "polynomial has several distinct irreducible factors");
  ZPoly h = fac[0].first;
  if (h.leading() < 0) h = -h;
  return h;
}

}  // namespace

Integer PrimePower::q() const { return pow_q(Integer(static_cast<unsigned long>(p)), m); }

PrimePower make_prime_power(u64 p, int m) {
  if (p < 2 || !is_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not a prime");
  if (m < 1) fail(ErrorCode::InvalidArgument, "exponent must be positive");
  return {p, m};
}

PrimePower prime_power_of(const Integer& q) {
  if (q < 2) fail(ErrorCode::InvalidArgument, "q must be a prime power");
  for (int m = 1; mpz_sizeinbase(q.get_mpz_t(), 2) >= static_cast<std::size_t>(m); ++m) {
    Integer r;
    if (mpz_root(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(m)) == 0) continue;
    if (r.fits_ulong_p() && is_prime(r.get_ui())) return {r.get_ui(), m};
  }
  fail(ErrorCode::InvalidArgument, q.get_str() + " is not a prime power");
}

bool is_weil_number(const ZPoly& f, const PrimePower& qq) {
  if (!f.is_monic()) fail(ErrorCode::NotMonic, "Weil polynomial must be monic: " + to_string(f));
  const Integer q = qq.q();
  const int n = f.degree();
  if (n < 1) return false;
  if (!is_irreducible_over_q(f)) return false;
  if (n == 1) return f[0] * f[0] == q;
  if (f == ZPoly{0, 0, 1} - ZPoly::constant(q)) return true;
  if (n % 2 != 0) return false;
  const int g = n / 2;
  const Integer qg = pow_q(q, g);
  for (int i = 0; i <= n; ++i)
    if (f[i] * pow_q(q, i) != qg * f[n - i]) return false;
  ZPoly h = real_weil_polynomial(f, q);
  if (count_real_roots(h) != g) return false;
  // beta^2 <= 4q for each root beta of h: no root of k(u) = h(x) h(-x), u = x^2, above 4q
  std::vector<Integer> even, odd;
  for (int i = 0; i <= h.degree(); ++i) (i % 2 == 0 ? even : odd).push_back(h[i]);
  ZPoly E(even), O(odd);
  ZPoly k = E * E - (O * O).shift_up(1);
  ZPoly ks = squarefree_part(k);
  SturmSequence s(ks);
  return s.count_above(Rational(4 * q)) == 0;
}

WeilNumber make_weil_number(const ZPoly& f, const PrimePower& q) {
  if (!is_weil_number(f, q))
    fail(ErrorCode::InvalidArgument, to_string(f) + " is not a Weil " + q.q().get_str() + "-polynomial");
  return {f, q};
}

NumberField frobenius_field(const WeilNumber& w) {
  if (w.minpoly.degree() == 1) return NumberField::rationals();
  return NumberField::from_polynomial(w.minpoly);
}

BrauerClass tate_invariants(const WeilNumber& w) {
  const NumberField k = frobenius_field(w);
  const u64 p = w.q.p;
  const int m = w.q.m;
  const Integer q = w.q.q();

  QPoly pi, q_over_pi;
  if (w.minpoly.degree() == 1) {
    Rational c(-w.minpoly[0]);
    pi = QPoly::constant(c);
    q_over_pi = QPoly::constant(Rational(q) / c);
  } else {
    pi = QPoly::x();
    q_over_pi = inverse_mod(pi, w.minpoly) * Rational(q);
  }

  NewtonPolygon np = newton_polygon(w.minpoly, p);
  if (np.zero_roots != 0) fail(ErrorCode::InternalInvariant, "Frobenius cannot be zero");
  std::vector<Place> places = places_above(k, p);
  std::vector<SlopeConstraint> constraints;
  for (const auto& v : places)
    constraints.push_back({residue_at(k, pi, v).is_zero(), residue_at(k, q_over_pi, v).is_zero()});

  SlopeMatcher matcher{places, constraints, np.segments, m, {}, std::vector<int>(places.size()), {}};
  for (const auto& s : np.segments) matcher.remaining.push_back(s.length);
  matcher.run(0);
  if (matcher.outcomes.empty()) fail(ErrorCode::InternalInvariant, "Newton slopes match no place assignment");
  if (matcher.outcomes.size() > 1)
    fail(ErrorCode::AmbiguousSlopeMatching, "Newton slopes of " + to_string(w.minpoly) +
                                                " admit several assignments to the places above " +
                                                std::to_string(p));
  const std::vector<Rational>& inv = *matcher.outcomes.begin();
  std::vector<std::pair<Place, Rational>> data;
  for (std::size_t i = 0; i < places.size(); ++i) data.emplace_back(places[i], inv[i]);
  for (const auto& v : infinite_places(k).real) data.emplace_back(v, Rational(1, 2));
  return make_class(k, data);
}

IsogenyClassInvariants isogeny_invariants(const WeilNumber& w) {
  BrauerClass cls = tate_invariants(w);
  Integer e = schur_index(cls);
  Integer twice_g = e * w.minpoly.degree();
  if (twice_g % 2 != 0) fail(ErrorCode::NonIntegralDimension, "e [Q(pi):Q] is odd");
  return {cls.center(), cls, e, twice_g / 2};
}

std::string_view to_string(Obstruction o) {
  switch (o) {
    case Obstruction::MustSplit: return "MustSplit";
    case Obstruction::NoObstruction: return "NoObstruction";
    case Obstruction::NotApplicable: return "NotApplicable";
  }
  return "?";
}

ObstructionReport reduction_obstruction(const BrauerClass& endo_a, const Integer& ell, const BrauerClass& d,
                                        const SubfieldMap& z_to_f, const WeilNumber& w) {
  if (!(z_to_f.source() == endo_a.center())) fail(ErrorCode::CenterMismatch, "map must start at the center of End^0(A)");
  if (!(z_to_f.target() == d.center())) fail(ErrorCode::CenterMismatch, "map must end at the center of D");
  if (!is_prime_integer(ell) || schur_index(endo_a) % ell != 0)
    fail(ErrorCode::InvalidArgument, "l must be a prime dividing the Schur index of End^0(A)");
  if (schur_index(d) != ell) fail(ErrorCode::InvalidArgument, "D must have Schur index l");
  if (!is_weil_number(w.minpoly, w.q)) fail(ErrorCode::InvalidArgument, "not a Weil number");

  ObstructionReport out;
  for (const auto& [v, x] : endo_a.invariants()) {
    if (v.is_finite() && v.p == w.q.p) {
      out.verdict = Obstruction::NotApplicable;
      out.reason = "End^0(A) ramifies at " + describe(v) + " above p=" + std::to_string(w.q.p);
      return out;
    }
  }
  BrauerClass b = tate_invariants(w);
  out.frobenius_class = b;
  out.decision = embed_decision(d, b);
  out.verdict = out.decision->embeddable ? Obstruction::NoObstruction : Obstruction::MustSplit;
  out.reason = out.decision->embeddable ? "D embeds in End^0 for some compositum"
                                        : "D embeds in no division algebra with these invariants";
  return out;
}

QmSurfaceReport qm_surface_check(const BrauerClass& endo_a, const PrimePower& q) {
  if (endo_a.center().degree() != 1) fail(ErrorCode::InvalidArgument, "quaternion algebra must be defined over Q");
  if (schur_index(endo_a) != 2) fail(ErrorCode::InvalidArgument, "End^0(A) must be a quaternion division algebra");
  for (const auto& [v, x] : endo_a.invariants()) {
    if (!v.is_finite()) fail(ErrorCode::NotIndefinite, "quaternion algebra ramifies at infinity");
    if (v.p == q.p) fail(ErrorCode::RamifiedAtP, "quaternion algebra ramifies at p=" + std::to_string(q.p));
  }
  QmSurfaceReport out;
  out.q = q;
  const SubfieldMap id = SubfieldMap::identity(endo_a.center());
  std::vector<WeilNumber> numbers = enumerate_weil_polys(q, 1);
  for (auto& w : enumerate_weil_polys(q, 2)) numbers.push_back(std::move(w));
  for (auto& w : numbers) {
    ObstructionReport r = reduction_obstruction(endo_a, 2, endo_a, id, w);
    if (r.verdict != Obstruction::MustSplit) out.all_must_split = false;
    out.rows.push_back({std::move(w), std::move(r)});
  }
  return out;
}

std::vector<WeilNumber> enumerate_weil_polys(const PrimePower& qq, int degree) {
  const Integer q = qq.q();
  std::vector<ZPoly> cands;
  switch (degree) {
    case 1: {
      Integer r = isqrt(q);
      if (r * r == q) {
        cands.push_back(ZPoly::constant(-r) + ZPoly::x());
        cands.push_back(ZPoly::constant(r) + ZPoly::x());
      }
      break;
    }
    case 2: {
      const Integer amax = isqrt(4 * q);
      for (Integer a = -amax; a <= amax; ++a) cands.push_back(ZPoly(std::vector<Integer>{q, -a, 1}));
      cands.push_back(ZPoly(std::vector<Integer>{-q, 0, 1}));
      break;
    }
    case 4: {
      // x^4 + a x^3 + b x^2 + q a x + q^2 with 2 sqrt(q) |a| - 2q <= b <= a^2/4 + 2q
      const Integer amax = isqrt(16 * q);
      for (Integer a = -amax; a <= amax; ++a) {
        Integer t = 4 * q * a * a;
        Integer lo = isqrt(t);
        if (lo * lo < t) lo += 1;
        lo -= 2 * q;
        Integer hi;
        Integer a2 = a * a;
        mpz_fdiv_q_ui(hi.get_mpz_t(), a2.get_mpz_t(), 4);
        hi += 2 * q;
        for (Integer b = lo; b <= hi; ++b) cands.push_back(ZPoly(std::vector<Integer>{q * q, q * a, b, a, 1}));
      }
      break;
    }
    default:
      fail(ErrorCode::InvalidArgument, "enumeration supports degrees 1, 2 and 4");
  }
  std::vector<WeilNumber> out;
  for (auto& f : cands)
    if (is_weil_number(f, qq)) out.push_back({std::move(f), qq});
  std::sort(out.begin(), out.end(),
            [](const WeilNumber& a, const WeilNumber& b) { return lex_less(a.minpoly, b.minpoly); });
  return out;
}

BrauerClass quaternion_class(const std::vector<u64>& ramified_primes, bool ramified_at_infinity) {
  NumberField q = NumberField::rationals();
  std::vector<std::pair<Place, Rational>> data;
  for (u64 p : ramified_primes) data.emplace_back(Place::finite(p, 0), Rational(1, 2));
  if (ramified_at_infinity) data.emplace_back(Place::real(0), Rational(1, 2));
  BrauerClass c = make_class(q, data);
  if (schur_index(c) != 2) fail(ErrorCode::InvalidArgument, "a quaternion algebra needs ramification");
  return c;
}

CsvImport import_weil_csv(std::istream& in) {
  CsvImport out;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fields = split(t, ',');
    if (first) {
      first = false;
      if (!fields.empty() && trim(fields[0]) == "p") continue;
    }
    auto issue = [&](const std::string& msg) { out.issues.push_back({lineno, msg}); };
    if (fields.size() != 3) {
      issue("expected 3 fields p,m,coeffs, got " + std::to_string(fields.size()));
      continue;
    }
    Integer p, m;
    if (!parse_integer(trim(fields[0]), p) || !p.fits_ulong_p() || p < 2 || !is_prime(p.get_ui())) {
      issue("p is not a prime: '" + trim(fields[0]) + "'");
      continue;
    }
    if (!parse_integer(trim(fields[1]), m) || m < 1 || m > 64) {
      issue("m is not a positive integer: '" + trim(fields[1]) + "'");
      continue;
    }
    std::vector<Integer> coeffs;
    bool ok = true;
    std::istringstream cs(trim(fields[2]));
    std::string tok;
    while (cs >> tok) {
      Integer v;
      if (!parse_integer(tok, v)) {
        ok = false;
        break;
      }
      coeffs.push_back(v);
    }
    if (!ok || coeffs.empty()) {
      issue("coefficients are not integers: '" + trim(fields[2]) + "'");
      continue;
    }
    try {
      PrimePower q{p.get_ui(), static_cast<int>(m.get_si())};
      ZPoly f = normalize_row_polynomial(ZPoly(std::move(coeffs)));
      if (!is_weil_number(f, q)) {
        issue(to_string(f) + " is not a Weil " + q.q().get_str() + "-polynomial");
        continue;
      }
      out.numbers.push_back({f, q});
      out.lines.push_back(lineno);
    } catch (const Error& e) {
      issue(std::string(to_string(e.code())) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace brauerkit
