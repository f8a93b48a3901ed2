#include "brauerkit/number_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>

#include "brauerkit/error.hpp"
#include "brauerkit/zfactor.hpp"

namespace brauerkit {

struct NumberField::Impl {
  bool concrete = true;
  int degree = 1;
  ZPoly f;
  LocalDegreeProfile profile;

  std::mutex mu;
  std::map<u64, std::unique_ptr<LocalData>> local;
  std::map<int, RootEnclosures> enclosures;
};

namespace {

constexpr long kSearchBudgetPerLevel = 20000;
constexpr int kMaxRefinementBits = 4096;

Integer pow_integer(u64 p, int k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(k));
  return r;
}

// Solves M c = rhs over Q; M is square with columns given. Returns false if singular.
bool solve_linear(std::vector<std::vector<Rational>> columns, std::vector<Rational> rhs, std::vector<Rational>& out) {
  const std::size_t n = rhs.size();
  // row-major augmented matrix
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = columns[j][i];
    a[i][n] = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  out.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][n] / a[i][i];
  return true;
}

// The field generator x written as a polynomial in beta, where beta generates Q[x]/(f).
bool generator_in_terms_of(const QPoly& beta, const ZPoly& f, QPoly& out) {
  const int n = f.degree();
  std::vector<std::vector<Rational>> cols;
  QPoly power = QPoly::constant(1);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> col(n);
    for (int i = 0; i < n; ++i) col[i] = power.coeff(i);
    cols.push_back(std::move(col));
    power = multiply_mod(power, beta, f);
  }
  std::vector<Rational> rhs(n, Rational(0));
  if (n == 1) {
    // x is the rational number -f(0); express it as a constant
    out = QPoly::constant(Rational(-f[0]));
    return true;
  }
  rhs[1] = 1;
  std::vector<Rational> c;
  if (!solve_linear(std::move(cols), std::move(rhs), c)) return false;
  out = QPoly(std::move(c));
  return true;
}

bool integral_squarefree_charpoly(const QPoly& element, const ZPoly& f, ZPoly& out) {
  QPoly chi = charpoly(element, f);
  if (!to_integer(chi, out)) return false;
  return is_squarefree(out);
}

LocalGenerator find_local_generator(const ZPoly& f, u64 p) {
  LocalGenerator gen;
  gen.in_generator = QPoly::x();
  gen.minpoly = f;
  gen.generator_in_beta = QPoly::x();
  if (f.degree() == 1) {
    gen.in_generator = QPoly::x();
    return gen;
  }
  if (dedekind_criterion(f, p)) return gen;

  const int n = f.degree();
  const int vdisc = valuation(discriminant(f), Integer(static_cast<unsigned long>(p)));
  for (int k = 1; 2 * k <= vdisc; ++k) {
    // Numerators range over residues mod p^(k+1), so every element of
    // O cap p^-k Z[x] is tried together with its shifts by Z[x] mod p.
    const Integer pk = pow_integer(p, k);
    const Integer range = pk * static_cast<unsigned long>(p);
    Integer total = 1;
    for (int i = 0; i < n; ++i) total *= range;
    const bool exhaustive = total <= kSearchBudgetPerLevel;
    const long count = exhaustive ? total.get_si() : kSearchBudgetPerLevel;
    const Rational scale(Integer(1), pk);
    // Large levels are sampled with a fixed seed so results are reproducible.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(p * 1000003 + k));
    for (long idx = 1; idx < count; ++idx) {
      std::vector<Rational> coeffs(n);
      Integer rest = exhaustive ? Integer(idx) : Integer(rng.get_z_range(total));
      bool all_divisible = true;
      for (int i = 0; i < n; ++i) {
        Integer digit = rest % range;
        rest /= range;
        if (digit % static_cast<unsigned long>(p) != 0) all_divisible = false;
        coeffs[i] = Rational(digit) * scale;
        coeffs[i].canonicalize();
      }
      if (all_divisible) continue;
      QPoly beta(std::move(coeffs));
      ZPoly chi;
      if (!integral_squarefree_charpoly(beta, f, chi)) continue;
      if (!dedekind_criterion(chi, p)) continue;
      QPoly back;
      if (!generator_in_terms_of(beta, f, back)) continue;
      gen.in_generator = beta;
      gen.minpoly = chi;
      gen.generator_in_beta = back;
      gen.is_default = false;
      return gen;
    }
  }
  fail(ErrorCode::NonMonogenicAtP,
       "no p-maximal local generator found for " + to_string(f) + " at p=" + std::to_string(p));
}

std::unique_ptr<LocalData> compute_local_data(const ZPoly& f, u64 p) {
  auto data = std::make_unique<LocalData>();
  data->p = p;
  data->generator = find_local_generator(f, p);
  auto fac = factor_mod_p(data->generator.minpoly, p);
  for (std::size_t i = 0; i < fac.size(); ++i) {
    const auto& [g, e] = fac[i];
    Place v = Place::finite(p, static_cast<int>(i));
    v.e = e;
    v.f = g.degree();
    v.degree = v.e * v.f;
    v.factor = g.coefficients();
    data->places.push_back(std::move(v));
    data->factors.push_back(g);
  }
  return data;
}

Complex conjugate(const Complex& z) { return {z.re, -z.im}; }

void require_prime(u64 p) {
  if (p < 2 || !is_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not a prime");
}

Place rational_finite_place(u64 p) {
  Place v = Place::finite(p, 0);
  v.e = 1;
  v.f = 1;
  v.degree = 1;
  v.factor = {0, 1};
  return v;
}

Place rational_real_place() {
  Place v = Place::real(0);
  v.interval = RealInterval{0, 0};
  return v;
}

}  // namespace

Place resolve_place(const NumberField& k, const Place& w) {
  if (w.is_finite()) {
    if (w.p < 2 || !is_prime(w.p)) fail(ErrorCode::InvalidPlace, "place has no prime: " + describe(w));
    auto places = places_above(k, w.p);
    if (w.index < 0 || w.index >= static_cast<int>(places.size()))
      fail(ErrorCode::InvalidPlace, "no place " + describe(w) + " in " + k.describe());
    return places[w.index];
  }
  ArchimedeanPlaces inf = infinite_places(k);
  const auto& list = w.is_real() ? inf.real : inf.complex;
  if (w.index < 0 || w.index >= static_cast<int>(list.size()))
    fail(ErrorCode::InvalidPlace, "no place " + describe(w) + " in " + k.describe());
  return list[w.index];
}

namespace {

FpPoly eval_mod(const FpPoly& h, const FpPoly& x, const FpPoly& m) {
  const u64 p = m.modulus();
  FpPoly acc(p);
  for (std::size_t i = h.coefficients().size(); i-- > 0;) {
    acc = mulmod(acc, x, m);
    acc = (acc + FpPoly::constant(p, h.coeff(i))) % m;
  }
  return acc;
}

PlaceBelow finite_place_below(const SubfieldMap& emb, const Place& w) {
  const NumberField& K = emb.source();
  const NumberField& L = emb.target();
  const u64 p = w.p;
  const LocalData& Lp = L.local_data(p);
  const LocalData& Kp = K.local_data(p);
  const ZPoly& mL = Lp.generator.minpoly;

  // beta_K in terms of beta_L
  QPoly alpha = compose_mod(emb.image(), Lp.generator.generator_in_beta, mL);
  QPoly psi = compose_mod(Kp.generator.in_generator, alpha, mL);
  FpPoly psi_bar(p);
  if (!FpPoly::reduce(psi, p, psi_bar))
    fail(ErrorCode::InternalInvariant, "local generator image is not p-integral");

  const FpPoly& gw = Lp.factors[w.index];
  int found = -1;
  for (std::size_t i = 0; i < Kp.factors.size(); ++i) {
    if (eval_mod(Kp.factors[i], psi_bar, gw).is_zero()) {
      if (found >= 0) fail(ErrorCode::InternalInvariant, "place below is not unique");
      found = static_cast<int>(i);
    }
  }
  if (found < 0) fail(ErrorCode::InternalInvariant, "no place below " + describe(w));
  const Place& v = Kp.places[found];
  const Place& wl = Lp.places[w.index];
  if ((wl.e * wl.f) % (v.e * v.f) != 0) fail(ErrorCode::InternalInvariant, "local degrees do not divide");
  return {v, (wl.e * wl.f) / (v.e * v.f)};
}

PlaceBelow archimedean_place_below(const SubfieldMap& emb, const Place& w) {
  const NumberField& K = emb.source();
  const NumberField& L = emb.target();
  ArchimedeanPlaces kinf = infinite_places(K);
  for (int bits = 64; bits <= kMaxRefinementBits; bits *= 2) {
    RootEnclosures el = L.enclosures(bits);
    RootEnclosures ek = K.enclosures(bits);
    const RootDisk& src = w.is_real() ? el.real[w.index] : el.upper[w.index];
    RootDisk img = image_disk(emb.image(), src);
    std::vector<Place> hits;
    for (std::size_t i = 0; i < ek.real.size(); ++i)
      if (disks_intersect(img, ek.real[i])) hits.push_back(kinf.real[i]);
    for (std::size_t j = 0; j < ek.upper.size(); ++j) {
      RootDisk lower{conjugate(ek.upper[j].center), ek.upper[j].radius};
      if (disks_intersect(img, ek.upper[j]) || disks_intersect(img, lower)) hits.push_back(kinf.complex[j]);
    }
    if (hits.size() == 1) {
      const Place& v = hits[0];
      if (v.is_complex() && w.is_real())
        fail(ErrorCode::InternalInvariant, "real place above a complex place");
      int local = (w.is_complex() && v.is_real()) ? 2 : 1;
      return {v, local};
    }
    if (hits.empty()) fail(ErrorCode::InternalInvariant, "image of a root lies in no root disk");
  }
  fail(ErrorCode::InternalInvariant, "could not separate archimedean places");
}

// --- polynomials over Q[z]/(N) ----------------------------------------------

struct ExtField {
  ZPoly modulus;
  QPoly reduce(const QPoly& a) const { return reduce_mod(a, modulus); }
  QPoly mul(const QPoly& a, const QPoly& b) const { return multiply_mod(a, b, modulus); }
  QPoly inv(const QPoly& a) const { return inverse_mod(a, modulus); }
};

using ExtPoly = std::vector<QPoly>;  // ascending in y

void trim(ExtPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

ExtPoly ext_mul(const ExtField& k, const ExtPoly& a, const ExtPoly& b) {
  if (a.empty() || b.empty()) return {};
  ExtPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + k.mul(a[i], b[j]);
  trim(r);
  return r;
}

ExtPoly ext_rem(const ExtField& k, ExtPoly a, const ExtPoly& b) {
  const std::size_t db = b.size() - 1;
  QPoly lead_inv = k.inv(b.back());
  trim(a);
  while (a.size() >= b.size()) {
    QPoly factor = k.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = a[shift + i] - k.mul(factor, b[i]);
    a.back() = QPoly();
    trim(a);
  }
  return a;
}

ExtPoly ext_monic_gcd(const ExtField& k, ExtPoly a, ExtPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ExtPoly r = ext_rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  QPoly lead_inv = k.inv(a.back());
  for (auto& c : a) c = k.mul(c, lead_inv);
  return a;
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Compositum make_candidate(const NumberField& F, const NumberField& K, const ZPoly& N, int s) {
  ExtField ext{N};
  const QPoly z = QPoly::x();

  // alpha = A(z): common root of f_K(y) and f_F(z - s y)
  ExtPoly fk;
  for (const auto& c : K.polynomial().coefficients()) fk.push_back(QPoly::constant(Rational(c)));
  ExtPoly lin{ext.reduce(z), QPoly::constant(Rational(-s))};
  ExtPoly ff;
  const auto& fc = F.polynomial().coefficients();
  for (std::size_t i = fc.size(); i-- > 0;) {
    ff = ext_mul(ext, ff, lin);
    if (ff.empty()) ff.push_back(QPoly());
    ff[0] = ff[0] + QPoly::constant(Rational(fc[i]));
    trim(ff);
  }
  ExtPoly g = ext_monic_gcd(ext, fk, ff);
  if (g.size() != 2) fail(ErrorCode::InternalInvariant, "compositum: common factor is not linear");
  QPoly A = ext.reduce(-g[0]);
  QPoly Theta = ext.reduce(z - A * Rational(s));

  // prefer F's generator, then K's, then the primitive element itself
  ZPoly minpoly;
  QPoly z_in_chosen;
  bool ok = false;
  for (const QPoly& cand : {Theta, A}) {
    if (!integral_squarefree_charpoly(cand, N, minpoly)) continue;
    if (!generator_in_terms_of(cand, N, z_in_chosen)) continue;
    ok = true;
    break;
  }
  if (!ok) {
    minpoly = N;
    z_in_chosen = z;
  }
  NumberField field = NumberField::from_polynomial(minpoly);
  QPoly imgF = compose_mod(Theta, z_in_chosen, minpoly);
  QPoly imgK = compose_mod(A, z_in_chosen, minpoly);
  return Compositum{field, SubfieldMap::make(F, field, imgF), SubfieldMap::make(K, field, imgK), s};
}

}  // namespace

// --- Place ------------------------------------------------------------------

std::string describe(const Place& v) {
  std::ostringstream os;
  switch (v.kind) {
    case Place::Kind::Finite:
      os << "p" << v.p << "." << v.index;
      break;
    case Place::Kind::Real:
      os << "real." << v.index;
      break;
    case Place::Kind::Complex:
      os << "complex." << v.index;
      break;
  }
  return os.str();
}

// --- NumberField ------------------------------------------------------------

NumberField NumberField::rationals() {
  auto impl = std::make_shared<Impl>();
  impl->f = ZPoly{0, 1};
  impl->degree = 1;
  return NumberField(impl);
}

NumberField NumberField::from_polynomial(const ZPoly& f) {
  if (f.degree() < 1) fail(ErrorCode::InvalidArgument, "field polynomial must have positive degree");
  if (!f.is_monic()) fail(ErrorCode::NotMonic, "field polynomial is not monic: " + to_string(f));
  if (!is_irreducible_over_q(f)) fail(ErrorCode::NotIrreducible, "field polynomial is reducible: " + to_string(f));
  auto impl = std::make_shared<Impl>();
  impl->f = f;
  impl->degree = f.degree();
  return NumberField(impl);
}

NumberField NumberField::abstract(int degree, LocalDegreeProfile profile) {
  if (degree < 1) fail(ErrorCode::InvalidArgument, "field degree must be positive");
  for (const auto& [key, degs] : profile.entries) {
    if (key != kInfinity) require_prime(key);
    int sum = 0;
    for (int d : degs) {
      if (d < 1) fail(ErrorCode::InvalidArgument, "local degrees must be positive");
      if (key == kInfinity && d > 2) fail(ErrorCode::InvalidArgument, "archimedean local degree must be 1 or 2");
      sum += d;
    }
    if (sum != degree)
      fail(ErrorCode::InvalidArgument, "local degrees above " + (key == kInfinity ? std::string("infinity")
                                                                                 : std::to_string(key)) +
                                           " sum to " + std::to_string(sum) + ", not " + std::to_string(degree));
  }
  auto impl = std::make_shared<Impl>();
  impl->concrete = false;
  impl->degree = degree;
  impl->profile = std::move(profile);
  return NumberField(impl);
}

bool NumberField::is_concrete() const { return impl_->concrete; }
int NumberField::degree() const { return impl_->degree; }

const ZPoly& NumberField::polynomial() const {
  if (!impl_->concrete) fail(ErrorCode::Unsupported, "abstract field has no defining polynomial");
  return impl_->f;
}

const LocalDegreeProfile& NumberField::profile() const { return impl_->profile; }

const LocalData& NumberField::local_data(u64 p) const {
  if (!impl_->concrete) fail(ErrorCode::Unsupported, "local data needs a concrete field");
  require_prime(p);
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->local.find(p);
    if (it != impl_->local.end()) return *it->second;
  }
  auto data = compute_local_data(impl_->f, p);
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto [it, inserted] = impl_->local.emplace(p, std::move(data));
  return *it->second;
}

RootEnclosures NumberField::enclosures(int min_bits) const {
  if (!impl_->concrete) fail(ErrorCode::Unsupported, "root enclosures need a concrete field");
  constexpr int kBase = 64;
  RootEnclosures base;
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->enclosures.find(kBase);
    if (it != impl_->enclosures.end()) base = it->second;
  }
  if (base.precision_bits == 0) {
    base = enclose_roots(impl_->f, kBase);
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->enclosures.emplace(kBase, base);
  }
  if (min_bits <= base.precision_bits) return base;
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->enclosures.find(min_bits);
    if (it != impl_->enclosures.end()) return it->second;
  }
  // Refined disks keep the indices fixed by the base enclosure.
  RootEnclosures fine = enclose_roots(impl_->f, min_bits);
  RootEnclosures out;
  out.precision_bits = fine.precision_bits;
  out.real = fine.real;
  out.upper.assign(base.upper.size(), RootDisk{});
  std::vector<bool> used(base.upper.size(), false);
  for (const auto& d : fine.upper) {
    int match = -1;
    for (std::size_t j = 0; j < base.upper.size(); ++j) {
      if (!disks_intersect(d, base.upper[j])) continue;
      if (match >= 0) fail(ErrorCode::InternalInvariant, "refined root disk meets two base disks");
      match = static_cast<int>(j);
    }
    if (match < 0 || used[match]) fail(ErrorCode::InternalInvariant, "refined root disks do not match base disks");
    used[match] = true;
    out.upper[match] = d;
  }
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->enclosures.emplace(min_bits, out);
  return out;
}

std::string NumberField::describe() const {
  if (impl_->concrete) return "Q[x]/(" + to_string(impl_->f) + ")";
  return "abstract field of degree " + std::to_string(impl_->degree);
}

bool operator==(const NumberField& a, const NumberField& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.impl_->concrete != b.impl_->concrete) return false;
  if (a.impl_->concrete) return a.impl_->f == b.impl_->f;
  return a.impl_->degree == b.impl_->degree && a.impl_->profile == b.impl_->profile;
}

// --- SubfieldMap ------------------------------------------------------------

SubfieldMap SubfieldMap::make(NumberField source, NumberField target, QPoly image) {
  if (target.degree() % source.degree() != 0)
    fail(ErrorCode::InvalidMap, "degree of " + source.describe() + " does not divide degree of " + target.describe());
  if (source.degree() == 1) {
    Rational root = source.is_concrete() ? Rational(-source.polynomial()[0]) : Rational(0);
    if (!(image.degree() <= 0 && image.coeff(0) == root))
      fail(ErrorCode::InvalidMap, "image of a rational generator must be that rational number");
    return SubfieldMap(std::move(source), std::move(target), std::move(image));
  }
  if (!source.is_concrete() || !target.is_concrete())
    fail(ErrorCode::Unsupported, "maps between abstract fields are only supported from Q");
  image = reduce_mod(image, target.polynomial());
  QPoly value = compose_mod(to_rational(source.polynomial()), image, target.polynomial());
  if (!value.is_zero())
    fail(ErrorCode::InvalidMap, "f_K(" + to_string(image) + ") is not 0 in " + target.describe());
  return SubfieldMap(std::move(source), std::move(target), std::move(image));
}

SubfieldMap SubfieldMap::identity(const NumberField& k) {
  if (k.degree() == 1) return make(k, k, QPoly::constant(k.is_concrete() ? Rational(-k.polynomial()[0]) : Rational(0)));
  return SubfieldMap(k, k, QPoly::x());
}

SubfieldMap SubfieldMap::from_rationals(const NumberField& target) {
  return SubfieldMap(NumberField::rationals(), target, QPoly());
}

QPoly SubfieldMap::apply(const QPoly& element) const {
  if (!target_.is_concrete()) {
    if (element.degree() > 0) fail(ErrorCode::Unsupported, "abstract target only receives rational elements");
    return element;
  }
  return compose_mod(element, image_, target_.polynomial());
}

// --- places -----------------------------------------------------------------

std::vector<Place> places_above(const NumberField& k, u64 p) {
  require_prime(p);
  if (k.is_concrete()) return k.local_data(p).places;
  auto it = k.profile().entries.find(p);
  if (it == k.profile().entries.end()) {
    if (k.degree() == 1) return {rational_finite_place(p)};
    fail(ErrorCode::ProfileIncomplete, "profile has no entry for p=" + std::to_string(p));
  }
  std::vector<Place> out;
  for (std::size_t i = 0; i < it->second.size(); ++i) {
    Place v = Place::finite(p, static_cast<int>(i));
    v.degree = it->second[i];
    out.push_back(v);
  }
  return out;
}

ArchimedeanPlaces infinite_places(const NumberField& k) {
  ArchimedeanPlaces out;
  if (k.is_concrete()) {
    RootEnclosures enc = k.enclosures();
    for (std::size_t i = 0; i < enc.real.size(); ++i) {
      Place v = Place::real(static_cast<int>(i));
      const RootDisk& d = enc.real[i];
      v.interval = RealInterval{d.center.re - d.radius, d.center.re + d.radius};
      out.real.push_back(std::move(v));
    }
    for (std::size_t j = 0; j < enc.upper.size(); ++j) out.complex.push_back(Place::complex(static_cast<int>(j)));
  } else {
    auto it = k.profile().entries.find(kInfinity);
    if (it == k.profile().entries.end()) {
      if (k.degree() != 1) fail(ErrorCode::ProfileIncomplete, "profile has no archimedean entry");
      out.real.push_back(rational_real_place());
    } else {
      for (int d : it->second) {
        if (d == 1) out.real.push_back(Place::real(static_cast<int>(out.real.size())));
        else out.complex.push_back(Place::complex(static_cast<int>(out.complex.size())));
      }
    }
  }
  out.r1 = static_cast<int>(out.real.size());
  out.r2 = static_cast<int>(out.complex.size());
  if (out.r1 + 2 * out.r2 != k.degree()) fail(ErrorCode::InternalInvariant, "r1 + 2 r2 differs from the degree");
  return out;
}

PlaceBelow place_below(const SubfieldMap& emb, const Place& w_in) {
  const NumberField& K = emb.source();
  const NumberField& L = emb.target();
  const Place w = resolve_place(L, w_in);
  if (K.degree() == 1) {
    if (w.is_finite()) return {rational_finite_place(w.p), w.degree};
    return {rational_real_place(), w.is_real() ? 1 : 2};
  }
  if (K == L && emb.image() == QPoly::x()) return {w, 1};
  if (w.is_finite()) return finite_place_below(emb, w);
  return archimedean_place_below(emb, w);
}

std::vector<PlaceBelow> places_over(const SubfieldMap& emb, const Place& v_in) {
  const Place v = resolve_place(emb.source(), v_in);
  std::vector<Place> candidates;
  if (v.is_finite()) {
    candidates = places_above(emb.target(), v.p);
  } else {
    ArchimedeanPlaces inf = infinite_places(emb.target());
    candidates = inf.real;
    candidates.insert(candidates.end(), inf.complex.begin(), inf.complex.end());
  }
  std::vector<PlaceBelow> out;
  for (const auto& w : candidates) {
    PlaceBelow below = place_below(emb, w);
    if (below.place == v) out.push_back({w, below.local_degree});
  }
  return out;
}

// --- composita --------------------------------------------------------------

int default_degree_limit() {
  const char* env = std::getenv("BRAUERKIT_DEGREE_LIMIT");
  if (env == nullptr || *env == '\0') return 16;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) return 16;
  return static_cast<int>(v);
}

std::vector<Compositum> compositum_candidates(const NumberField& F, const NumberField& K, int degree_limit) {
  if (!F.is_concrete() || !K.is_concrete()) fail(ErrorCode::Unsupported, "composita need concrete fields");
  const int nF = F.degree(), nK = K.degree();
  if (nF * nK > degree_limit)
    fail(ErrorCode::DegreeLimitExceeded, "compositum degree bound " + std::to_string(nF * nK) + " exceeds limit " +
                                             std::to_string(degree_limit));
  if (nF == 1) return {Compositum{K, SubfieldMap::make(F, K, QPoly::constant(Rational(-F.polynomial()[0]))),
                                  SubfieldMap::identity(K), 0}};
  if (nK == 1) return {Compositum{F, SubfieldMap::identity(F),
                                  SubfieldMap::make(K, F, QPoly::constant(Rational(-K.polynomial()[0]))), 0}};

  const int N = nF * nK;
  auto pf = power_sums(to_rational(F.polynomial()), N);
  auto pk = power_sums(to_rational(K.polynomial()), N);
  for (int s = 0; s <= 4 * N + 8; ++s) {
    std::vector<Rational> sums(N + 1);
    sums[0] = N;
    for (int k = 1; k <= N; ++k) {
      Rational t = 0;
      Integer spow = 1;
      for (int r = k; r >= 0; --r) {
        // term with theta^r alpha^(k-r) s^(k-r)
        t += Rational(binomial(k, r) * spow) * pf[r] * pk[k - r];
        spow *= s;
      }
      sums[k] = t;
    }
    ZPoly norm;
    if (!to_integer(from_power_sums(sums), norm))
      fail(ErrorCode::InternalInvariant, "norm polynomial is not integral");
    if (!is_squarefree(norm)) continue;
    std::vector<Compositum> out;
    for (const auto& [factor, mult] : factor_over_q(norm)) out.push_back(make_candidate(F, K, factor, s));
    return out;
  }
  fail(ErrorCode::InternalInvariant, "no squarefree shift for the norm polynomial");
}

// --- Newton polygons --------------------------------------------------------

NewtonPolygon newton_polygon(const ZPoly& f, u64 p) {
  require_prime(p);
  if (f.degree() < 1) fail(ErrorCode::InvalidArgument, "Newton polygon needs a nonconstant polynomial");
  const Integer P(static_cast<unsigned long>(p));
  struct Pt {
    int x;
    int y;
  };
  std::vector<Pt> pts;
  for (int i = 0; i <= f.degree(); ++i)
    if (f[i] != 0) pts.push_back({i, valuation(f[i], P)});
  NewtonPolygon out;
  out.zero_roots = pts.front().x;
  // lower convex hull, left to right
  std::vector<Pt> hull;
  for (const Pt& q : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // drop b if it lies on or above segment a-q
      long cross = static_cast<long>(b.x - a.x) * (q.y - a.y) - static_cast<long>(b.y - a.y) * (q.x - a.x);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(q);
  }
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    int len = hull[i + 1].x - hull[i].x;
    Rational slope(hull[i].y - hull[i + 1].y, len);
    slope.canonicalize();
    out.segments.push_back({slope, len});
  }
  std::sort(out.segments.begin(), out.segments.end(),
            [](const NewtonSegment& a, const NewtonSegment& b) { return a.slope < b.slope; });
  return out;
}

// --- element arithmetic -----------------------------------------------------

QPoly reduce_mod(const QPoly& a, const ZPoly& f) { return a % to_rational(f); }

QPoly multiply_mod(const QPoly& a, const QPoly& b, const ZPoly& f) { return reduce_mod(a * b, f); }

QPoly inverse_mod(const QPoly& a, const ZPoly& f) {
  ExtendedGcd eg = extended_gcd(reduce_mod(a, f), to_rational(f));
  if (eg.g.degree() != 0) fail(ErrorCode::InvalidArgument, "element is not invertible");
  return reduce_mod(eg.s * (1 / eg.g[0]), f);
}

QPoly compose_mod(const QPoly& a, const QPoly& b, const ZPoly& f) {
  const QPoly fq = to_rational(f);
  const QPoly br = b % fq;
  QPoly acc;
  for (std::size_t i = a.size(); i-- > 0;) acc = (acc * br + QPoly::constant(a[i])) % fq;
  return acc;
}

FpPoly residue_at(const NumberField& k, const QPoly& element, const Place& v_in) {
  if (!v_in.is_finite()) fail(ErrorCode::InvalidPlace, "residues need a finite place");
  const Place v = resolve_place(k, v_in);
  if (!k.is_concrete()) fail(ErrorCode::Unsupported, "residues need a concrete field");
  const LocalData& data = k.local_data(v.p);
  QPoly in_beta = compose_mod(element, data.generator.generator_in_beta, data.generator.minpoly);
  FpPoly bar(v.p);
  if (!FpPoly::reduce(in_beta, v.p, bar))
    fail(ErrorCode::InvalidArgument, "element is not integral at " + describe(v));
  return bar % data.factors[v.index];
}

bool dedekind_criterion(const ZPoly& f, u64 p) {
  auto fac = factor_mod_p(f, p);
  FpPoly g = FpPoly::constant(p, 1), h = FpPoly::constant(p, 1);
  for (const auto& [gi, ei] : fac) {
    g = g * gi;
    for (int k = 1; k < ei; ++k) h = h * gi;
  }
  ZPoly diff = f - g.lift() * h.lift();
  std::vector<Integer> c = diff.coefficients();
  const Integer P(static_cast<unsigned long>(p));
  for (auto& v : c) {
    if (v % P != 0) fail(ErrorCode::InternalInvariant, "Dedekind: f is not g*h mod p");
    v /= P;
  }
  FpPoly F = FpPoly::reduce(ZPoly(std::move(c)), p);
  return gcd(gcd(F, g), h).degree() == 0;
}

}  // namespace brauerkit
