#pragma once

// Monogenicity of a monic integer polynomial: Eisenstein predicates,
// Dedekind's index criterion at a prime, and the overall verdict driven by
// the factorization of the discriminant.

#include <evenmono/integer.hpp>
#include <evenmono/poly.hpp>

#include <optional>
#include <vector>

namespace evenmono {

enum class MonoStatus { monogenic, not_monogenic, unknown, reducible };

const char* to_string(MonoStatus s);

struct DedekindOutcome {
  Int prime;
  bool divides_index = false;
  /// Settled by the Eisenstein shortcut rather than the gcd test.
  bool by_eisenstein = false;
  /// Monic gcd of (g, h, F) mod p lifted to [0, p); the constant 1 when
  /// trivial.
  IntPoly common_factor{1};
};

struct MonogenicityReport {
  MonoStatus status = MonoStatus::unknown;
  std::optional<Int> failing_prime;
  Int disc;
  Factorization disc_factorization;
  /// Primes p with p^2 | disc, increasing, up to the first failure.
  std::vector<DedekindOutcome> per_prime;
};

/// p divides every non-leading coefficient and p^2 does not divide the
/// constant term.  Throws NonMonic.
bool is_p_eisenstein(const IntPoly& f, const Int& p);

/// Dedekind's criterion.  With fbar = prod(g_i^e_i) mod p, g = prod(g_i),
/// h = prod(g_i^(e_i - 1)) and F = (g*h - f)/p, the prime p divides the
/// index [O_K : Z[alpha]] iff gcd(g, h, F) mod p is nontrivial.
/// Irreducibility of f is the caller's responsibility.  Throws NonMonic and
/// ModulusTooLarge (p >= 2^62).
DedekindOutcome dedekind_test(const IntPoly& f, const Int& p);

/// Factorization of Delta(f).  When f = g(x^2) with g of odd degree q and
/// g(0) != 0 the identity Delta(f) = (-1)^q 4^q g(0) Delta(g)^2 is used so
/// only g(0) and Delta(g) need factoring.
Factorization discriminant_factorization(const IntPoly& f, const Int& disc, const FactorBudget& budget = {});

/// Throws NonMonic, ConstantPolynomial, ZeroDiscriminant.
MonogenicityReport is_monogenic(const IntPoly& f, const FactorBudget& budget = {});

/// Necessary condition for g(x^l) to be monogenic when its Galois group
/// sits in S_l wr C_q without containing C_l wr C_q: a0 is squarefree,
/// divides every other coefficient, and each prime divisor of a0 is q or
/// 1 mod q.  Only prunes searches.  Throws NonMonic, DegreeMismatch.
bool eisenstein_filter(const IntPoly& g, unsigned q);

}  // namespace evenmono
