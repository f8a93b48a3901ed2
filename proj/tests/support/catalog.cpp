#include "catalog.hpp"

#include <algorithm>
#include <numeric>

#include "brauerkit/error.hpp"

namespace brauerkit::testing {
namespace {

constexpr u64 kSmallPrimes[] = {2, 3, 5, 7, 11, 13};

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::vector<Place> finite_places(const NumberField& k) {
  std::vector<Place> out;
  for (u64 p : kSmallPrimes) {
    try {
      for (const auto& v : places_above(k, p)) out.push_back(v);
    } catch (const Error&) {
    }
  }
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long i = 1; i <= n; ++i)
    if (n % i == 0) out.push_back(i);
  return out;
}

Rational frac(const Rational& x) {
  Rational r = x;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  r -= fl;
  return r;
}

}  // namespace

const Catalog& catalog() {
  static const Catalog c;
  return c;
}

std::vector<SubfieldMap> catalog_towers() {
  const Catalog& c = catalog();
  std::vector<SubfieldMap> out;
  for (const auto& f : {c.q, c.qi, c.s2, c.s3, c.sm3, c.s5, c.z8, c.z12, c.cubic})
    out.push_back(SubfieldMap::from_rationals(f));
  for (const auto& f : {c.qi, c.s2, c.sm3, c.z8}) out.push_back(SubfieldMap::identity(f));
  out.push_back(SubfieldMap::make(c.qi, c.z8, QPoly{0, 0, 1}));
  out.push_back(SubfieldMap::make(c.s2, c.z8, QPoly{0, 1, 0, -1}));
  out.push_back(SubfieldMap::make(c.qi, c.z12, QPoly{0, 0, 0, 1}));
  out.push_back(SubfieldMap::make(c.sm3, c.z12, QPoly{-1, 0, 2}));
  out.push_back(SubfieldMap::make(c.s3, c.z12, QPoly{0, 2, 0, -1}));
  return out;
}

Integer restricted_index_oracle(const BrauerClass& b, const SubfieldMap& emb) {
  Integer out = 1;
  for (const auto& [v, x] : b.invariants()) {
    for (const auto& w : places_over(emb, v)) {
      Rational y = frac(x * w.local_degree);
      Integer den = y.get_den();
      mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), den.get_mpz_t());
    }
  }
  return out;
}

Rational invariant_sum(const BrauerClass& c) {
  Rational s = 0;
  for (const auto& [v, x] : c.invariants()) s += x;
  return frac(s);
}

BrauerClass random_class(Rng& rng, const NumberField& k, const Integer& n, bool use_real_places) {
  std::vector<Place> places = finite_places(k);
  std::shuffle(places.begin(), places.end(), rng);
  const long nn = n.get_si();
  const std::vector<long> divs = divisors(nn);
  const std::size_t count = std::min<std::size_t>(places.size() - 1, static_cast<std::size_t>(uniform(rng, 1, 3)));

  std::vector<std::pair<Place, Rational>> data;
  Rational sum = 0;
  for (std::size_t i = 0; i < count; ++i) {
    long den = pick(rng, divs);
    Rational x(uniform(rng, 0, den - 1), den);
    x.canonicalize();
    data.emplace_back(places[i], x);
    sum += x;
  }
  ArchimedeanPlaces inf = infinite_places(k);
  if (use_real_places && nn % 2 == 0 && !inf.real.empty() && uniform(rng, 0, 2) == 0) {
    data.emplace_back(pick(rng, inf.real), Rational(1, 2));
    sum += Rational(1, 2);
  }
  data.emplace_back(places[count], frac(-sum));
  return make_class(k, data);
}

BrauerClass random_prime_class(Rng& rng, const NumberField& k, u64 ell) {
  for (;;) {
    BrauerClass c = random_class(rng, k, Integer(ell), ell == 2);
    if (schur_index(c) == ell) return c;
  }
}

std::vector<TensorConfig> random_tensor_configs(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  const std::vector<SubfieldMap> towers = catalog_towers();
  const std::vector<u64> ells{2, 3, 5};
  std::vector<TensorConfig> out;
  std::size_t steer = 0;
  while (out.size() < count) {
    const SubfieldMap& tower = pick(rng, towers);
    const u64 ell = pick(rng, ells);
    const long m = tower.relative_degree();
    long d = 1;
    switch (uniform(rng, 0, 2)) {
      case 0: d = 1; break;
      case 1: d = static_cast<long>(ell); break;
      default: d = static_cast<long>(ell * ell);
    }
    d *= pick(rng, std::vector<long>{1, 1, 2, 3});
    BrauerClass b = random_class(rng, tower.source(), Integer(m * d));
    const Integer ord_b = schur_index(b);
    if (ord_b % m != 0) continue;
    BrauerClass res_b = restrict(b, tower);
    const Integer dd = ord_b / m;
    if (schur_index(res_b) != dd) continue;

    BrauerClass dtilde = res_b;
    if (dd % ell == 0 && (dd / ell) % ell != 0 && (steer++ % 4) == 0) {
      const Integer t = dd / ell;
      Integer j;
      const Integer ell_z(ell);
      mpz_invert(j.get_mpz_t(), t.get_mpz_t(), ell_z.get_mpz_t());
      dtilde = multiply(res_b, t * j);
    } else {
      dtilde = random_prime_class(rng, tower.target(), ell);
    }
    out.push_back(TensorConfig{tower, b, dtilde, ell});
  }
  return out;
}

std::vector<EmbedConfig> random_embed_configs(std::uint64_t seed, std::size_t count) {
  const Catalog& c = catalog();
  struct Pair {
    NumberField f, k;
    std::optional<SubfieldMap> k_to_f;
    std::vector<Compositum> candidates;
  };
  std::vector<Pair> pairs{
      {c.q, c.q, SubfieldMap::identity(c.q), {}},
      {c.qi, c.q, SubfieldMap::from_rationals(c.qi), {}},
      {c.s2, c.q, SubfieldMap::from_rationals(c.s2), {}},
      {c.cubic, c.q, SubfieldMap::from_rationals(c.cubic), {}},
      {c.qi, c.qi, SubfieldMap::identity(c.qi), {}},
      {c.z8, c.qi, SubfieldMap::make(c.qi, c.z8, QPoly{0, 0, 1}), {}},
      {c.qi, c.s2, std::nullopt, {}},
      {c.sm3, c.qi, std::nullopt, {}},
      {c.qi, c.z8, std::nullopt, {}},
      {c.q, c.s3, std::nullopt, {}},
  };
  for (auto& p : pairs) p.candidates = compositum_candidates(p.f, p.k);

  Rng rng(seed);
  const std::vector<u64> ells{2, 3};
  std::vector<EmbedConfig> out;
  while (out.size() < count) {
    const Pair& pair = pick(rng, pairs);
    const u64 ell = pick(rng, ells);
    const long n = pick(rng, std::vector<long>{1, 2, 3, 4, 6, 8, 9, 12});
    BrauerClass b = random_class(rng, pair.k, Integer(n));
    std::optional<BrauerClass> d;
    if (pair.k_to_f && uniform(rng, 0, 1) == 0) {
      BrauerClass res = restrict(b, *pair.k_to_f);
      const Integer r = schur_index(res);
      if (r % ell == 0) {
        const long j = uniform(rng, 1, static_cast<long>(ell) - 1);
        d = multiply(res, (r / ell) * j);
      }
    }
    if (!d) d = random_prime_class(rng, pair.f, ell);
    out.push_back(EmbedConfig{*d, b, pair.candidates});
  }
  return out;
}

bool raw_yu_embeds(const BrauerClass& d, const BrauerClass& b, const Compositum& candidate) {
  const Integer ell = schur_index(d);
  const Integer m = candidate.from_second.relative_degree();
  const NumberField& ft = candidate.field;
  EmbeddingVerdict field =
      yu_embedding_test(division_algebra(trivial_class(ft)), division_algebra(b), candidate.from_second);
  BrauerClass res_d = restrict(d, candidate.from_first);
  BrauerClass res_b = restrict(b, candidate.from_second);
  CentralSimpleAlgebra x{res_d, ell / schur_index(res_d)};
  CentralSimpleAlgebra y{res_b, schur_index(b) / schur_index(res_b)};
  EmbeddingVerdict yu = yu_embedding_test(x, y, SubfieldMap::identity(ft));
  return field.embeddable && yu.capacity_computed % (ell * ell * m) == 0;
}

namespace {

using Vec = std::vector<u64>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by a monic b over F_p; quotient returned through q.
Vec poly_divmod(Vec a, const Vec& b, u64 p, Vec& q) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size()) {
    const u64 c = a.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - (c * b[i]) % p) % p;
    trim(a);
  }
  return a;
}

}  // namespace

std::vector<BruteFactor> brute_force_factor(Vec f, u64 p) {
  for (auto& c : f) c %= p;
  trim(f);
  std::vector<BruteFactor> out;
  for (int k = 1; 2 * k <= static_cast<int>(f.size()) - 1; ++k) {
    Vec g(k + 1, 0);
    g[k] = 1;
    u64 total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (u64 idx = 0; idx < total; ++idx) {
      u64 rest = idx;
      for (int i = 0; i < k; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      int mult = 0;
      for (;;) {
        if (static_cast<int>(f.size()) - 1 < k) break;
        Vec q;
        if (!poly_divmod(f, g, p, q).empty()) break;
        f = q;
        ++mult;
      }
      if (mult > 0) out.push_back({g, mult});
    }
  }
  if (f.size() > 1) {
    bool merged = false;
    for (auto& bf : out)
      if (bf.factor == f) {
        ++bf.multiplicity;
        merged = true;
      }
    if (!merged) out.push_back({f, 1});
  }
  std::sort(out.begin(), out.end(), [](const BruteFactor& a, const BruteFactor& b) {
    if (a.factor.size() != b.factor.size()) return a.factor.size() < b.factor.size();
    return std::lexicographical_compare(a.factor.rbegin(), a.factor.rend(), b.factor.rbegin(), b.factor.rend());
  });
  return out;
}

int grid_real_root_count(const ZPoly& f) {
  Rational bound = 1;
  for (int i = 0; i < f.degree(); ++i) {
    Rational r(abs(f[i]), abs(f.leading()));
    if (r + 1 > bound) bound = r + 1;
  }
  auto eval = [&](const Rational& x) {
    Rational v = 0;
    for (int i = f.degree(); i >= 0; --i) v = v * x + f[i];
    return sgn(v);
  };
  int previous = -1, stable = 0;
  for (int level = 3; level < 24; ++level) {
    const long steps = 1L << level;
    int count = 0, last_sign = 0;
    for (long s = 0; s <= steps; ++s) {
      Rational t(2 * s, steps);
      t.canonicalize();
      Rational x = -bound + t * bound;
      const int sg = eval(x);
      if (sg == 0) {
        ++count;
      } else {
        if (last_sign != 0 && sg != last_sign) ++count;
        last_sign = sg;
      }
      if (sg == 0) last_sign = 0;
    }
    if (count == previous) {
      if (++stable >= 5 && level >= 8) return count;
    } else {
      stable = 0;
    }
    previous = count;
  }
  return previous;
}

std::vector<ZPoly> brute_force_weil_deg_le2(const PrimePower& pq) {
  const Integer q = pq.q();
  std::vector<ZPoly> out;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
  const bool square = s * s == q;
  if (square) {
    out.push_back(ZPoly(std::vector<Integer>{-s, 1}));
    out.push_back(ZPoly(std::vector<Integer>{s, 1}));
  }
  for (Integer a = -2 * s - 1; a <= 2 * s + 1; ++a)
    if (a * a < 4 * q) out.push_back(ZPoly(std::vector<Integer>{q, a, 1}));
  if (!square) out.push_back(ZPoly(std::vector<Integer>{-q, 0, 1}));
  return out;
}

std::vector<ZPoly> catalog_polynomials() {
  return {
      ZPoly{1, 0, 1},           ZPoly{-2, 0, 1},          ZPoly{0, -1, 0, 1},       ZPoly{-1, -1, 0, 1},
      ZPoly{1, 0, -10, 0, 1},   ZPoly{1, 0, 0, 0, 1},     ZPoly{1, 0, -1, 0, 1},    ZPoly{24, -50, 35, -10, 1},
      ZPoly{0, 4, 0, -5, 0, 1}, ZPoly{0, 5, 0, -20, 0, 16}, ZPoly{5, -1, 1},        ZPoly{-5, 0, 1},
      ZPoly{9999, -20000, 10000}, ZPoly{-1, 0, 0, 0, 0, 0, 1}, ZPoly{25, -5, 3, -1, 1}, ZPoly{4, 2, -1, 1, 1},
      ZPoly{-7, 3, 0, 1},       ZPoly{1, 1, 1, 1, 1},     ZPoly{-6, 11, -6, 1},     ZPoly{2, 0, -4, 0, 1},
  };
}

}  // namespace brauerkit::testing
