#include "brauerkit/brauer.hpp"

#include "brauerkit/error.hpp"

namespace brauerkit {

Rational mod_one(const Rational& r) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational out = r - fl;
  out.canonicalize();
  return out;
}

Rational BrauerClass::invariant(const Place& v) const {
  auto it = inv_.find(v);
  return it == inv_.end() ? Rational(0) : it->second;
}

BrauerClass make_class(const NumberField& center, const std::vector<std::pair<Place, Rational>>& data) {
  BrauerClass c(center);
  Rational total = 0;
  for (const auto& [v_in, value] : data) {
    Place v = resolve_place(center, v_in);
    if (c.inv_.count(v)) fail(ErrorCode::InvalidArgument, "place listed twice: " + describe(v));
    Rational x = mod_one(value);
    if (v.is_real() && x != 0 && x != Rational(1, 2))
      fail(ErrorCode::BadArchimedean, "invariant at a real place must be 0 or 1/2, got " + x.get_str());
    if (v.is_complex() && x != 0)
      fail(ErrorCode::BadArchimedean, "invariant at a complex place must be 0, got " + x.get_str());
    total += x;
    c.inv_.emplace(std::move(v), x);
  }
  if (mod_one(total) != 0)
    fail(ErrorCode::ReciprocityViolation, "invariants sum to " + mod_one(total).get_str() + " mod 1");
  std::erase_if(c.inv_, [](const auto& kv) { return kv.second == 0; });
  return c;
}

BrauerClass trivial_class(const NumberField& center) { return BrauerClass(center); }

BrauerClass combine(const BrauerClass& a, const BrauerClass& b, int sign) {
  if (!(a.center() == b.center())) fail(ErrorCode::CenterMismatch, "classes live over different fields");
  std::map<Place, Rational> sum = a.invariants();
  for (const auto& [v, x] : b.invariants()) sum[v] += sign * x;
  std::vector<std::pair<Place, Rational>> data(sum.begin(), sum.end());
  return make_class(a.center(), data);
}

BrauerClass multiply(const BrauerClass& a, const Integer& k) {
  std::vector<std::pair<Place, Rational>> data;
  for (const auto& [v, x] : a.invariants()) data.emplace_back(v, Rational(x * k));
  return make_class(a.center(), data);
}

Integer schur_index(const BrauerClass& c) {
  Integer l = 1;
  for (const auto& [v, x] : c.invariants()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

BrauerClass restrict(const BrauerClass& c, const SubfieldMap& emb) {
  if (!(c.center() == emb.source())) fail(ErrorCode::CenterMismatch, "class does not live on the source field");
  std::vector<std::pair<Place, Rational>> data;
  for (const auto& [v, x] : c.invariants())
    for (const auto& [w, local] : places_over(emb, v)) data.emplace_back(w, Rational(x * local));
  return make_class(emb.target(), data);
}

}  // namespace brauerkit
