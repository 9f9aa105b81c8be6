#pragma once

// Factorization and irreducibility over Z[x].

#include <evenmono/poly.hpp>

#include <vector>

namespace evenmono {

struct PolyFactor {
  IntPoly factor;  // primitive, positive leading coefficient, irreducible over Q
  unsigned exponent = 0;

  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// unit * content * prod(factor^exponent) is the factored polynomial.
struct ZFactorization {
  int unit = 1;
  Int content = 1;  // positive
  std::vector<PolyFactor> factors;  // sorted by IntPoly ordering

  IntPoly expand() const;
  /// Total count of irreducible factors with multiplicity.
  unsigned count() const;
};

/// Complete factorization over Q with the content split off.  Squarefree
/// decomposition over Q, then for each part: smallest good prime p >= 3,
/// factorization mod p, quadratic Hensel lifting past the Mignotte bound,
/// and subset recombination.  Throws ZeroPolynomial.
ZFactorization factor_over_Z(const IntPoly& f);

/// Certificate-first irreducibility test over Q: Eisenstein at primes
/// dividing the content of the non-leading coefficients, then an
/// irreducible reduction modulo a small prime, then full factorization.
/// Throws ConstantPolynomial for deg f < 1.
bool is_irreducible(const IntPoly& f);

/// True when f mod p is irreducible of the same degree for some prime
/// p < bound.  A sufficient, not necessary, condition for irreducibility.
bool has_irreducible_reduction(const IntPoly& f, unsigned prime_bound = 60);

}  // namespace evenmono
