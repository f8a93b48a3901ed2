#pragma once

// Central simple algebras as (Brauer class, capacity) pairs, and embedding
// criteria between them.

#include <optional>
#include <string_view>
#include <vector>

#include "brauerkit/brauer.hpp"

namespace brauerkit {

/// M_c(D) with D the division algebra of `cls`.
struct CentralSimpleAlgebra {
  BrauerClass cls;
  Integer capacity = 1;

  const NumberField& center() const { return cls.center(); }
  Integer index() const { return schur_index(cls); }
  Integer degree() const { return capacity * index(); }
  /// Dimension over the center, (c * ord)^2.
  Integer dimension() const {
    Integer n = degree();
    return n * n;
  }
  bool is_division() const { return capacity == 1; }
};

CentralSimpleAlgebra division_algebra(const BrauerClass& cls);

/// The algebra of the given class with dimension total_dim over its center.
/// Throws DimensionNotRealizable.
CentralSimpleAlgebra capacity_and_dim(const BrauerClass& cls, const Integer& total_dim);

enum class FailingCondition { Condition1, Condition2, NoFieldEmbedding };
std::string_view to_string(FailingCondition c);

struct EmbeddingVerdict {
  bool embeddable = false;
  Integer capacity_computed = 1;  ///< capacity that must be divisible
  Integer divisor_required = 1;   ///< the dimension that must divide it
  std::optional<FailingCondition> failing_condition;
};

/// Embedding of X (center Z_X) into Y (center Z_Y) as Z_Y-algebras, where
/// `inclusion` maps Z_Y into Z_X: dim_{Z_Y} X must divide the capacity of
/// (Y (x) Z_X) (x) X^op.
EmbeddingVerdict yu_embedding_test(const CentralSimpleAlgebra& x, const CentralSimpleAlgebra& y,
                                   const SubfieldMap& inclusion);

/// Capacity of (B (x)_K F~) (x)_F~ D~^op as l * ord_K[B] / t_C, where t_C is the
/// Schur index of that algebra. B and D~ must be division algebras, with
/// ord[D~] = l prime and [F~:K] dividing ord_K[B].
/// Throws NotDivision, NonIntegralD, InvalidArgument.
Integer tensor_capacity(const CentralSimpleAlgebra& b, const CentralSimpleAlgebra& dtilde, const SubfieldMap& tower);

struct CaseCapacity {
  Integer capacity;
  int case_number = 0;       ///< 1: l does not divide d; 2: l divides d once; 3: l^2 divides d
  bool classes_agree = false; ///< case 2 only: t[D~] = t[B (x) F~]
};

/// The same capacity read off the divisibility of d = ord_K[B] / [F~:K] by l.
/// Additionally requires F~ to embed in B.
CaseCapacity tensor_capacity_by_cases(const CentralSimpleAlgebra& b, const CentralSimpleAlgebra& dtilde,
                                      const SubfieldMap& tower);

struct PrimeSubalgebra {
  BrauerClass d;
  bool verified = false;
  Integer capacity;  ///< capacity of (E (x)_Z F) (x)_F D^op
};

/// D = E (x)_Z F for a field F of degree ord[E]/l over Z, checked to have
/// Schur index l and to embed in E. Throws DegreeMismatch, InvalidArgument.
PrimeSubalgebra find_prime_subalgebra(const BrauerClass& e, const Integer& ell, const SubfieldMap& z_to_f);

struct CandidateVerdict {
  Compositum candidate;
  EmbeddingVerdict verdict;
  Integer relative_degree;  ///< [F~:K]
  Integer d;                ///< ord_K[B] / [F~:K] when integral, else 0
};

struct EmbedDecision {
  bool embeddable = false;
  Integer ell;
  std::vector<CandidateVerdict> candidates;
};

/// Whether the division algebra D (center F, prime Schur index l) embeds in
/// the division algebra B (center K), decided per compositum candidate of F and K.
EmbedDecision embed_decision(const BrauerClass& d, const BrauerClass& b, int degree_limit = default_degree_limit());

/// The verdict for a single candidate compositum.
CandidateVerdict decide_candidate(const BrauerClass& d, const BrauerClass& b, const Compositum& candidate);

/// Exponent of a prime l in n.
int prime_valuation(const Integer& n, const Integer& ell);
bool is_prime_integer(const Integer& n);

}  // namespace brauerkit
