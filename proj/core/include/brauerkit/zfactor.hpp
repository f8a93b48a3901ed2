#pragma once

// Factorization of integer polynomials over Q: modular factorization,
// Hensel lifting and Zassenhaus recombination.

#include <utility>
#include <vector>

#include "brauerkit/polynomial.hpp"

namespace brauerkit {

/// Irreducible factors over Q of a nonconstant integer polynomial, each
/// primitive with positive leading coefficient, with multiplicities, in
/// canonical order (degree, then coefficients). Constant content is dropped.
std::vector<std::pair<ZPoly, int>> factor_over_q(const ZPoly& f);

/// Irreducibility over Q. Tries cheap certificates first (rational roots,
/// factorization patterns modulo three good primes) before recombination.
bool is_irreducible_over_q(const ZPoly& f);

}  // namespace brauerkit
