#include "brauerkit/io.hpp"

#include "brauerkit/error.hpp"

namespace brauerkit::io {
namespace {

[[noreturn]] void malformed(const std::string& msg) { fail(ErrorCode::MalformedInput, msg); }

const json& field_of(const json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing key '") + key + "'");
  return *it;
}

long small_integer(const json& j, const char* what) {
  Integer v = integer_from_json(j);
  if (!v.fits_slong_p()) malformed(std::string(what) + " is out of range");
  return v.get_si();
}

u64 prime_from_json(const json& j) {
  Integer v = integer_from_json(j);
  if (!v.fits_ulong_p() || v < 2 || !is_prime(v.get_ui())) malformed("'" + j.dump() + "' is not a prime");
  return v.get_ui();
}

json place_list(const std::vector<Place>& places) {
  json out = json::array();
  for (const auto& v : places) out.push_back(to_json(v));
  return out;
}

}  // namespace

Integer integer_from_json(const json& j) {
  Integer v;
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) v = Integer(std::to_string(j.get<unsigned long long>()));
    else v = Integer(std::to_string(j.get<long long>()));
    return v;
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    bool ok = !s.empty();
    for (std::size_t i = (s.size() > 0 && s[0] == '-') ? 1 : 0; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') ok = false;
    if (s == "-") ok = false;
    if (!ok || v.set_str(s, 10) != 0) malformed("'" + s + "' is not an integer");
    return v;
  }
  malformed("expected an integer, got " + j.dump());
}

json to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(integer_from_json(j));
    Integer num = integer_from_json(json(s.substr(0, slash)));
    Integer den = integer_from_json(json(s.substr(slash + 1)));
    if (den == 0) malformed("zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  return Rational(integer_from_json(j));
}

json to_json(const Rational& v) {
  if (v.get_den() == 1) return to_json(Integer(v.get_num()));
  return v.get_str();
}

ZPoly zpoly_from_json(const json& j) {
  if (!j.is_array()) malformed("polynomial must be an array of coefficients");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return ZPoly(std::move(c));
}

json to_json(const ZPoly& f) {
  json out = json::array();
  for (const auto& c : f.coefficients()) out.push_back(c.get_str());
  return out;
}

QPoly qpoly_from_json(const json& j) {
  if (!j.is_array()) malformed("polynomial must be an array of coefficients");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return QPoly(std::move(c));
}

json to_json(const QPoly& f) {
  json out = json::array();
  for (const auto& c : f.coefficients()) out.push_back(c.get_str());
  return out;
}

NumberField field_from_json(const json& j) {
  if (j.is_string() && (j == "Q" || j == "QQ")) return NumberField::rationals();
  if (!j.is_object()) malformed("field must be an object");
  if (j.contains("poly")) return NumberField::from_polynomial(zpoly_from_json(j["poly"]));
  if (j.contains("abstract")) {
    const json& a = j["abstract"];
    int degree = static_cast<int>(small_integer(field_of(a, "degree"), "degree"));
    LocalDegreeProfile profile;
    if (a.contains("profile")) {
      const json& pr = a["profile"];
      if (!pr.is_object()) malformed("profile must be an object");
      for (auto it = pr.begin(); it != pr.end(); ++it) {
        u64 key = kInfinity;
        if (it.key() != "inf" && it.key() != "infinity") key = prime_from_json(json(it.key()));
        if (!it.value().is_array()) malformed("profile entries must be arrays of local degrees");
        std::vector<int> degs;
        for (const auto& d : it.value()) degs.push_back(static_cast<int>(small_integer(d, "local degree")));
        profile.entries[key] = degs;
      }
    }
    return NumberField::abstract(degree, profile);
  }
  malformed("field needs 'poly' or 'abstract'");
}

json to_json(const NumberField& k) {
  if (k.is_concrete()) return json{{"poly", to_json(k.polynomial())}};
  json profile = json::object();
  for (const auto& [key, degs] : k.profile().entries) profile[key == kInfinity ? "inf" : std::to_string(key)] = degs;
  return json{{"abstract", {{"degree", k.degree()}, {"profile", profile}}}};
}

Place place_from_json(const json& j, const NumberField& k) {
  if (!j.is_object()) malformed("place must be an object");
  if (j.contains("real")) return resolve_place(k, Place::real(static_cast<int>(small_integer(j["real"], "index"))));
  if (j.contains("complex"))
    return resolve_place(k, Place::complex(static_cast<int>(small_integer(j["complex"], "index"))));
  if (j.contains("inf") || j.contains("infinity")) return resolve_place(k, Place::real(0));
  if (!j.contains("p")) malformed("place needs 'p', 'real' or 'complex'");
  const Integer pz = integer_from_json(j["p"]);
  if (!pz.fits_ulong_p() || pz < 2 || !is_prime(pz.get_ui()))
    fail(ErrorCode::InvalidPlace, "'" + j["p"].dump() + "' is not a prime");
  const u64 p = pz.get_ui();
  std::vector<Place> places = places_above(k, p);
  if (j.contains("index")) return resolve_place(k, Place::finite(p, static_cast<int>(small_integer(j["index"], "index"))));
  if (j.contains("factor")) {
    FpPoly want = FpPoly::reduce(zpoly_from_json(j["factor"]), p);
    if (!want.is_zero()) want = want.monic();
    for (const auto& v : places)
      if (v.factor == want.coefficients()) return v;
    fail(ErrorCode::InvalidPlace, "no place above " + std::to_string(p) + " has factor " + j["factor"].dump());
  }
  if (places.size() == 1) return places[0];
  fail(ErrorCode::InvalidPlace, "several places above " + std::to_string(p) + "; give 'factor' or 'index'");
}

json to_json(const Place& v) {
  switch (v.kind) {
    case Place::Kind::Real: {
      json out{{"real", v.index}};
      if (v.interval) out["interval"] = {to_json(v.interval->lo), to_json(v.interval->hi)};
      return out;
    }
    case Place::Kind::Complex:
      return json{{"complex", v.index}};
    case Place::Kind::Finite:
      break;
  }
  json out{{"p", v.p}, {"index", v.index}, {"degree", v.degree}};
  if (v.e > 0) {
    out["e"] = v.e;
    out["f"] = v.f;
  }
  if (!v.factor.empty()) {
    json f = json::array();
    for (u64 c : v.factor) f.push_back(std::to_string(c));
    out["factor"] = f;
  }
  return out;
}

BrauerClass class_from_json(const json& j) {
  NumberField k = j.contains("center") ? field_from_json(j["center"]) : NumberField::rationals();
  std::vector<std::pair<Place, Rational>> data;
  if (j.contains("inv")) {
    if (!j["inv"].is_array()) malformed("'inv' must be an array");
    for (const auto& e : j["inv"]) {
      Place v = place_from_json(field_of(e, "place"), k);
      Rational x;
      if (e.contains("value")) {
        x = rational_from_json(e["value"]);
      } else {
        Integer num = integer_from_json(field_of(e, "num"));
        Integer den = integer_from_json(field_of(e, "den"));
        if (den == 0) malformed("zero denominator");
        x = Rational(num, den);
        x.canonicalize();
      }
      data.emplace_back(v, x);
    }
  }
  return make_class(k, data);
}

json to_json(const BrauerClass& c) {
  json inv = json::array();
  for (const auto& [v, x] : c.invariants())
    inv.push_back({{"place", to_json(v)}, {"num", to_json(Integer(x.get_num()))}, {"den", to_json(Integer(x.get_den()))}});
  return json{{"center", to_json(c.center())}, {"inv", inv}};
}

CentralSimpleAlgebra algebra_from_json(const json& j) {
  BrauerClass c = class_from_json(field_of(j, "class"));
  Integer cap = j.contains("capacity") ? integer_from_json(j["capacity"]) : Integer(1);
  if (cap < 1) malformed("capacity must be positive");
  return CentralSimpleAlgebra{c, cap};
}

json to_json(const CentralSimpleAlgebra& a) {
  return json{{"class", to_json(a.cls)},
              {"capacity", to_json(a.capacity)},
              {"index", to_json(a.index())},
              {"dimension", to_json(a.dimension())}};
}

SubfieldMap map_from_json(const json& j) {
  NumberField target = field_from_json(field_of(j, "target"));
  if (!j.contains("source")) return SubfieldMap::from_rationals(target);
  NumberField source = field_from_json(j["source"]);
  return SubfieldMap::make(source, target, qpoly_from_json(field_of(j, "image")));
}

json to_json(const SubfieldMap& m) {
  return json{{"source", to_json(m.source())}, {"target", to_json(m.target())}, {"image", to_json(m.image())}};
}

PrimePower prime_power_from_json(const json& j) {
  if (j.is_object()) {
    u64 p = prime_from_json(field_of(j, "p"));
    long m = small_integer(field_of(j, "m"), "m");
    if (m < 1 || m > 1000) malformed("m must be a positive integer");
    return make_prime_power(p, static_cast<int>(m));
  }
  return prime_power_of(integer_from_json(j));
}

json to_json(const PrimePower& q) { return json{{"p", q.p}, {"m", q.m}}; }

WeilNumber weil_from_json(const json& j) {
  return WeilNumber{zpoly_from_json(field_of(j, "poly")), prime_power_from_json(field_of(j, "q"))};
}

json to_json(const WeilNumber& w) { return json{{"poly", to_json(w.minpoly)}, {"q", to_json(w.q)}}; }

json to_json(const Compositum& c) {
  return json{{"field", to_json(c.field)},
              {"degree", c.field.degree()},
              {"from_first", to_json(c.from_first.image())},
              {"from_second", to_json(c.from_second.image())},
              {"shift", c.shift}};
}

json to_json(const EmbeddingVerdict& v) {
  json out{{"embeddable", v.embeddable},
           {"capacity_computed", to_json(v.capacity_computed)},
           {"divisor_required", to_json(v.divisor_required)},
           {"failing_condition", nullptr}};
  if (v.failing_condition) out["failing_condition"] = std::string(to_string(*v.failing_condition));
  return out;
}

json to_json(const CandidateVerdict& v) {
  json out = to_json(v.verdict);
  out["compositum"] = to_json(v.candidate);
  out["relative_degree"] = to_json(v.relative_degree);
  out["d"] = v.d == 0 ? json(nullptr) : to_json(v.d);
  return out;
}

json to_json(const EmbedDecision& d) {
  json cands = json::array();
  for (const auto& c : d.candidates) cands.push_back(to_json(c));
  return json{{"embeddable", d.embeddable}, {"ell", to_json(d.ell)}, {"candidates", cands}};
}

json to_json(const PrimeSubalgebra& s) {
  return json{{"D", to_json(s.d)}, {"verified", s.verified}, {"capacity", to_json(s.capacity)}};
}

json to_json(const IsogenyClassInvariants& inv) {
  return json{{"center", to_json(inv.center)},
              {"endo_class", to_json(inv.endo_class)},
              {"e", to_json(inv.e)},
              {"g", to_json(inv.g)}};
}

json to_json(const ObstructionReport& r) {
  json out{{"verdict", std::string(to_string(r.verdict))}, {"reason", r.reason}};
  if (r.frobenius_class) out["frobenius_class"] = to_json(*r.frobenius_class);
  if (r.decision) out["decision"] = to_json(*r.decision);
  return out;
}

json to_json(const QmSurfaceReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json x = to_json(row.report);
    x["weil"] = to_json(row.weil);
    rows.push_back(x);
  }
  return json{{"q", to_json(r.q)}, {"rows", rows}, {"all_must_split", r.all_must_split}};
}

json to_json(const NewtonPolygon& np) {
  json segs = json::array();
  for (const auto& s : np.segments) segs.push_back({{"slope", to_json(s.slope)}, {"length", s.length}});
  return json{{"segments", segs}, {"zero_roots", np.zero_roots}};
}

json field_info(const NumberField& k, const std::vector<u64>& primes) {
  json out{{"field", to_json(k)}, {"degree", k.degree()}};
  ArchimedeanPlaces inf = infinite_places(k);
  out["r1"] = inf.r1;
  out["r2"] = inf.r2;
  out["real_places"] = place_list(inf.real);
  out["complex_places"] = place_list(inf.complex);
  json finite = json::object();
  for (u64 p : primes) finite[std::to_string(p)] = place_list(places_above(k, p));
  out["places_above"] = finite;
  if (k.is_concrete()) out["discriminant"] = to_json(discriminant(k.polynomial()));
  return out;
}

}  // namespace brauerkit::io
