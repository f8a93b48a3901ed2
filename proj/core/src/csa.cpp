#include "brauerkit/csa.hpp"

#include "brauerkit/error.hpp"

namespace brauerkit {
namespace {

Integer exact_quotient(const Integer& a, const Integer& b, const char* what) {
  if (b == 0 || a % b != 0) fail(ErrorCode::InternalInvariant, std::string(what) + ": division is not exact");
  return a / b;
}

void require_same(const NumberField& a, const NumberField& b, const char* what) {
  if (!(a == b)) fail(ErrorCode::CenterMismatch, what);
}

Integer prime_index(const BrauerClass& c, const char* what) {
  Integer ell = schur_index(c);
  if (!is_prime_integer(ell)) fail(ErrorCode::InvalidArgument, std::string(what) + " must have prime Schur index");
  return ell;
}

struct TowerData {
  Integer ell;
  Integer degree;  // [F~:K]
  BrauerClass res_b;
  Integer t_c;
};

TowerData tower_data(const CentralSimpleAlgebra& b, const CentralSimpleAlgebra& dtilde, const SubfieldMap& tower) {
  if (!b.is_division() || !dtilde.is_division())
    fail(ErrorCode::NotDivision, "tensor capacity needs division algebras");
  require_same(tower.source(), b.center(), "B does not live on the base field of the tower");
  require_same(tower.target(), dtilde.center(), "D~ does not live on the top field of the tower");
  Integer ell = prime_index(dtilde.cls, "D~");
  Integer m = tower.relative_degree();
  if (b.index() % m != 0) fail(ErrorCode::NonIntegralD, "[F~:K] does not divide ord_K[B]");
  BrauerClass res_b = restrict(b.cls, tower);
  Integer t_c = schur_index(combine(res_b, dtilde.cls, -1));
  return {ell, m, res_b, t_c};
}

}  // namespace

int prime_valuation(const Integer& n, const Integer& ell) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "valuation of zero");
  return valuation(n, ell);
}

bool is_prime_integer(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

CentralSimpleAlgebra division_algebra(const BrauerClass& cls) { return CentralSimpleAlgebra{cls, 1}; }

CentralSimpleAlgebra capacity_and_dim(const BrauerClass& cls, const Integer& total_dim) {
  if (total_dim <= 0) fail(ErrorCode::DimensionNotRealizable, "dimension must be positive");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), total_dim.get_mpz_t());
  const Integer ord = schur_index(cls);
  if (root * root != total_dim || root % ord != 0)
    fail(ErrorCode::DimensionNotRealizable,
         "dimension " + total_dim.get_str() + " is not (c * " + ord.get_str() + ")^2 for an integer c");
  return CentralSimpleAlgebra{cls, root / ord};
}

std::string_view to_string(FailingCondition c) {
  switch (c) {
    case FailingCondition::Condition1: return "Condition1";
    case FailingCondition::Condition2: return "Condition2";
    case FailingCondition::NoFieldEmbedding: return "NoFieldEmbedding";
  }
  return "?";
}

EmbeddingVerdict yu_embedding_test(const CentralSimpleAlgebra& x, const CentralSimpleAlgebra& y,
                                   const SubfieldMap& inclusion) {
  require_same(inclusion.source(), y.center(), "inclusion must start at the center of Y");
  require_same(inclusion.target(), x.center(), "inclusion must end at the center of X");
  BrauerClass c = combine(restrict(y.cls, inclusion), x.cls, -1);
  EmbeddingVerdict v;
  v.capacity_computed = exact_quotient(y.degree() * x.degree(), schur_index(c), "capacity");
  v.divisor_required = x.dimension() * inclusion.relative_degree();
  v.embeddable = v.capacity_computed % v.divisor_required == 0;
  return v;
}

Integer tensor_capacity(const CentralSimpleAlgebra& b, const CentralSimpleAlgebra& dtilde, const SubfieldMap& tower) {
  TowerData t = tower_data(b, dtilde, tower);
  return exact_quotient(t.ell * b.index(), t.t_c, "tensor capacity");
}

CaseCapacity tensor_capacity_by_cases(const CentralSimpleAlgebra& b, const CentralSimpleAlgebra& dtilde,
                                      const SubfieldMap& tower) {
  TowerData t = tower_data(b, dtilde, tower);
  const Integer d = b.index() / t.degree;
  if (schur_index(t.res_b) != d) fail(ErrorCode::InvalidArgument, "F~ does not embed in B");
  CaseCapacity out;
  switch (prime_valuation(d, t.ell)) {
    case 0:
      out.case_number = 1;
      out.capacity = t.degree;
      break;
    case 1: {
      out.case_number = 2;
      Integer s = d / t.ell;
      out.classes_agree = multiply(dtilde.cls, s) == multiply(t.res_b, s);
      out.capacity = t.ell * t.degree;
      if (out.classes_agree) out.capacity *= t.ell;
      break;
    }
    default:
      out.case_number = 3;
      out.capacity = t.ell * t.degree;
  }
  return out;
}

PrimeSubalgebra find_prime_subalgebra(const BrauerClass& e, const Integer& ell, const SubfieldMap& z_to_f) {
  if (!is_prime_integer(ell)) fail(ErrorCode::InvalidArgument, "l must be prime");
  require_same(z_to_f.source(), e.center(), "map must start at the center of E");
  const Integer m = schur_index(e);
  if (m % ell != 0) fail(ErrorCode::InvalidArgument, "l does not divide the Schur index of E");
  if (Integer(z_to_f.relative_degree()) != m / ell)
    fail(ErrorCode::DegreeMismatch, "[F:Z] = " + std::to_string(z_to_f.relative_degree()) + " but ord[E]/l = " +
                                        Integer(m / ell).get_str());
  PrimeSubalgebra out{restrict(e, z_to_f), false, 0};
  EmbeddingVerdict yu = yu_embedding_test(division_algebra(out.d), division_algebra(e), z_to_f);
  out.capacity = yu.capacity_computed;
  out.verified = schur_index(out.d) == ell && yu.embeddable;
  if (out.verified && out.capacity != ell * ell * z_to_f.relative_degree())
    fail(ErrorCode::InternalInvariant, "capacity of (E (x) F) (x) D^op is not l^2 [F:Z]");
  return out;
}

CandidateVerdict decide_candidate(const BrauerClass& d, const BrauerClass& b, const Compositum& candidate) {
  const Integer ell = prime_index(d, "D");
  const Integer ord_b = schur_index(b);
  const Integer m = candidate.from_second.relative_degree();
  BrauerClass res_b = restrict(b, candidate.from_second);
  BrauerClass res_d = restrict(d, candidate.from_first);

  CandidateVerdict out{candidate, {}, m, 0};
  EmbeddingVerdict& v = out.verdict;
  v.capacity_computed = exact_quotient(ell * ord_b, schur_index(combine(res_b, res_d, -1)), "tensor capacity");
  v.divisor_required = ell * ell * m;

  EmbeddingVerdict field = yu_embedding_test(division_algebra(trivial_class(candidate.field)), division_algebra(b),
                                             candidate.from_second);
  if (!field.embeddable || ord_b % m != 0) {
    v.failing_condition = FailingCondition::NoFieldEmbedding;
    return out;
  }
  out.d = ord_b / m;
  if (prime_valuation(out.d, ell) != 1) {
    v.failing_condition = FailingCondition::Condition1;
    return out;
  }
  const Integer t = out.d / ell;
  if (!(multiply(res_d, t) == multiply(res_b, t))) {
    v.failing_condition = FailingCondition::Condition2;
    return out;
  }
  if (schur_index(res_d) == 1 || schur_index(res_b) == 1)
    fail(ErrorCode::InternalInvariant, "an admissible compositum must split neither D nor B");
  v.embeddable = true;
  return out;
}

EmbedDecision embed_decision(const BrauerClass& d, const BrauerClass& b, int degree_limit) {
  EmbedDecision out;
  out.ell = prime_index(d, "D");
  for (const auto& cand : compositum_candidates(d.center(), b.center(), degree_limit)) {
    out.candidates.push_back(decide_candidate(d, b, cand));
    if (out.candidates.back().verdict.embeddable) out.embeddable = true;
  }
  return out;
}

}  // namespace brauerkit
