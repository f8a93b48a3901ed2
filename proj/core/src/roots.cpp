#include "brauerkit/roots.hpp"

#include <algorithm>

#include "brauerkit/error.hpp"

namespace brauerkit {
namespace {

int sign_of(const Rational& v) { return sgn(v); }

// Divide by |leading coefficient|: a positive scaling, so signs survive.
QPoly normalize_positive(const QPoly& f) {
  if (f.is_zero()) return f;
  Rational s = abs(f.leading());
  return f * Rational(1 / s);
}

Rational pow2(int bits) {
  Rational r = 1;
  if (bits >= 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  else mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), -bits);
  return r;
}

// Nearest multiple of 2^-bits.
Rational round_dyadic(const Rational& x, int bits) {
  Rational y = x;
  mpq_mul_2exp(y.get_mpq_t(), y.get_mpq_t(), bits);
  Integer num = y.get_num() * 2 + y.get_den();
  Integer den = y.get_den() * 2;
  Integer t;
  mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rational r(t);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

Complex round_dyadic(const Complex& z, int bits) { return {round_dyadic(z.re, bits), round_dyadic(z.im, bits)}; }

// Rational upper bound for sqrt(s), accurate to about 2^-bits.
Rational sqrt_upper(const Rational& s, int bits) {
  if (s == 0) return 0;
  Rational t = s;
  mpq_mul_2exp(t.get_mpq_t(), t.get_mpq_t(), 2 * bits);
  Integer v;
  mpz_cdiv_q(v.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r < v) r += 1;
  Rational out(r);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return out;
}

Complex eval(const QPoly& f, const Complex& z) {
  Complex acc{0, 0};
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * z;
    acc.re += f[i];
  }
  return acc;
}

bool less_by_re_im(const RootDisk& a, const RootDisk& b) {
  if (a.center.re != b.center.re) return a.center.re < b.center.re;
  return a.center.im < b.center.im;
}

}  // namespace

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Rational d = norm2(b);
  if (d == 0) fail(ErrorCode::InvalidArgument, "complex division by zero");
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Rational norm2(const Complex& a) { return a.re * a.re + a.im * a.im; }

bool disks_intersect(const RootDisk& a, const RootDisk& b) {
  Rational r = a.radius + b.radius;
  return norm2(a.center - b.center) <= r * r;
}

SturmSequence::SturmSequence(const ZPoly& f) {
  QPoly a = normalize_positive(to_rational(f));
  QPoly b = normalize_positive(a.derivative());
  seq_.push_back(a);
  if (b.is_zero()) return;
  seq_.push_back(b);
  while (true) {
    QPoly r = -(seq_[seq_.size() - 2] % seq_.back());
    if (r.is_zero()) break;
    seq_.push_back(normalize_positive(r));
  }
}

int SturmSequence::sign_changes_at(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& s : seq_) {
    int sg = sign_of(s.eval(x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int SturmSequence::sign_changes_at_pos_infinity() const {
  int changes = 0, last = 0;
  for (const auto& s : seq_) {
    int sg = sign_of(s.leading());
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int SturmSequence::sign_changes_at_neg_infinity() const {
  int changes = 0, last = 0;
  for (const auto& s : seq_) {
    int sg = sign_of(s.leading());
    if (s.degree() % 2) sg = -sg;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int SturmSequence::count_in(const Rational& a, const Rational& b) const {
  return sign_changes_at(a) - sign_changes_at(b);
}

int SturmSequence::count_above(const Rational& a) const {
  return sign_changes_at(a) - sign_changes_at_pos_infinity();
}

int SturmSequence::count_all() const { return sign_changes_at_neg_infinity() - sign_changes_at_pos_infinity(); }

int count_real_roots(const ZPoly& f) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "zero polynomial");
  if (!is_squarefree(f)) fail(ErrorCode::NotSquarefree, "polynomial is not squarefree: " + to_string(f));
  if (f.degree() == 0) return 0;
  return SturmSequence(f).count_all();
}

Rational root_bound(const ZPoly& f) {
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rational r(abs(f[i]), abs(f.leading()));
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<RealInterval> isolate_real_roots(const ZPoly& f) {
  std::vector<RealInterval> out;
  if (f.degree() <= 0) return out;
  SturmSequence s(f);
  Rational b = root_bound(f);
  QPoly qf = to_rational(f);
  struct Job {
    Rational lo, hi;
    int count;
  };
  std::vector<Job> stack{{-b, b, s.count_in(-b, b)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.count == 0) continue;
    if (j.count == 1) {
      out.push_back({j.lo, j.hi});
      continue;
    }
    Rational mid = (j.lo + j.hi) / 2;
    int left = s.count_in(j.lo, mid);
    stack.push_back({mid, j.hi, j.count - left});
    stack.push_back({j.lo, mid, left});
  }
  // tighten intervals whose right end is an exact root
  for (auto& iv : out) {
    if (qf.eval(iv.hi) == 0) iv.lo = iv.hi;
  }
  std::sort(out.begin(), out.end(), [](const RealInterval& a, const RealInterval& b) { return a.hi < b.hi; });
  return out;
}

RootEnclosures enclose_roots(const ZPoly& f, int min_precision_bits) {
  const int n = f.degree();
  if (n <= 0) return {};
  if (!is_squarefree(f)) fail(ErrorCode::NotSquarefree, "root enclosure needs a squarefree polynomial");
  const QPoly q = monic(to_rational(f));
  const int real_count = count_real_roots(f);

  if (n == 1) {
    RootEnclosures out;
    out.real.push_back({{-q[0], 0}, 0});
    out.precision_bits = min_precision_bits;
    return out;
  }

  // Durand-Kerner starting points on a spiral of radius root_bound.
  Rational bound = root_bound(f);
  std::vector<Complex> z(n);
  Complex w{Rational(2, 5), Rational(9, 10)};
  Complex pw{bound, 0};
  for (int i = 0; i < n; ++i) {
    pw = pw * w;
    z[i] = round_dyadic(pw, 32);
  }

  int bits = std::max(min_precision_bits, 32);
  const int max_bits = std::max(bits, 4096);
  while (bits <= max_bits) {
    const Rational target = pow2(-2 * bits);
    for (int iter = 0; iter < 400; ++iter) {
      Rational worst = 0;
      for (int i = 0; i < n; ++i) {
        Complex den{1, 0};
        for (int j = 0; j < n; ++j)
          if (j != i) den = den * (z[i] - z[j]);
        if (norm2(den) == 0) {
          z[i] = z[i] + Complex{pow2(-bits / 2), pow2(-bits / 2 - 1)};
          worst = 1;
          continue;
        }
        Complex corr = eval(q, z[i]) / den;
        worst = std::max(worst, norm2(corr));
        z[i] = round_dyadic(z[i] - corr, bits + 8);
      }
      if (worst <= target) break;
    }

    // Snap to a conjugation-closed configuration.
    const Rational tau = pow2(-bits / 2);
    std::vector<Complex> reals, uppers, lowers;
    for (const auto& v : z) {
      if (abs(v.im) <= tau) reals.push_back({v.re, 0});
      else if (v.im > 0) uppers.push_back(v);
      else lowers.push_back(v);
    }
    bool ok = static_cast<int>(reals.size()) == real_count && uppers.size() == lowers.size();
    std::vector<Complex> centers;
    if (ok) {
      centers = reals;
      for (const auto& u : uppers) centers.push_back(u);
      for (const auto& u : uppers) centers.push_back({u.re, -u.im});
      // Certified radii and pairwise disjointness.
      std::vector<Rational> radii(n);
      for (int i = 0; i < n && ok; ++i) {
        Complex den{1, 0};
        for (int j = 0; j < n; ++j)
          if (j != i) den = den * (centers[i] - centers[j]);
        if (norm2(den) == 0) {
          ok = false;
          break;
        }
        Complex wi = eval(q, centers[i]) / den;
        radii[i] = sqrt_upper(norm2(wi), bits + 16) * n;
      }
      for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j)
          if (disks_intersect({centers[i], radii[i]}, {centers[j], radii[j]})) ok = false;
      if (ok) {
        RootEnclosures out;
        out.precision_bits = bits;
        const std::size_t nr = reals.size(), nu = uppers.size();
        for (std::size_t i = 0; i < nr; ++i) out.real.push_back({centers[i], radii[i]});
        for (std::size_t i = 0; i < nu; ++i) out.upper.push_back({centers[nr + i], radii[nr + i]});
        std::sort(out.real.begin(), out.real.end(), less_by_re_im);
        std::sort(out.upper.begin(), out.upper.end(), less_by_re_im);
        return out;
      }
    }
    bits *= 2;
  }
  fail(ErrorCode::InternalInvariant, "root enclosure did not certify for " + to_string(f));
}

RootDisk image_disk(const QPoly& phi, const RootDisk& disk) {
  if (phi.is_zero()) return {{0, 0}, 0};
  const int d = phi.degree();
  std::vector<Complex> a(d + 1);
  for (int i = 0; i <= d; ++i) a[i] = {phi[i], 0};
  // Taylor shift: afterwards a[k] = phi^(k)(c) / k!
  const Complex& c = disk.center;
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) a[j] = a[j] + c * a[j + 1];
  Rational radius = 0, rp = 1;
  for (int k = 1; k <= d; ++k) {
    rp *= disk.radius;
    radius += (abs(a[k].re) + abs(a[k].im)) * rp;
  }
  return {a[0], radius};
}

}  // namespace brauerkit
