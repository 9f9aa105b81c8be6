#pragma once

// Arbitrary-precision integer utilities: primality, factorization,
// perfect-square and squarefree predicates.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace evenmono {

using Int = mpz_class;

class IntPoly;

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Effort limits for factorize().  The defaults factor every discriminant
/// produced by the searches in this project instantly.
struct FactorBudget {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_iterations = 4'000'000;
};

/// sign * cofactor * prod(prime^exponent) is the factored integer.  A
/// cofactor > 1 is a composite with no prime factor <= trial_bound that rho
/// could not split within budget.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes
  Int cofactor = 1;

  bool complete() const { return cofactor == 1; }
  Int value() const;
  unsigned exponent_of(const Int& p) const;
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

enum class Tristate { no, yes, unknown };

const char* to_string(Tristate t);

/// Deterministic below 3.3e24; above that a strong BPSW-style test.
bool is_prime(const Int& n);

/// Trial division, then Miller-Rabin, perfect-power detection and
/// Brent's rho with increments 1, 2, 3, ... .  Never fails: what cannot be
/// split ends up in the cofactor.
Factorization factorize(const Int& n, const FactorBudget& budget = {});

/// Merge two factorizations of a and b into one of a*b.
Factorization multiply(const Factorization& a, const Factorization& b);

/// Root r >= 0 with r*r == n, if any.
std::optional<Int> is_perfect_square(const Int& n);

Tristate is_squarefree(const Int& n, const FactorBudget& budget = {});

/// Integer roots of p, ascending, each repeated by its multiplicity.
/// Throws ZeroPolynomial for p == 0.
std::vector<Int> integer_roots(const IntPoly& p);

/// All primes below kSmallPrimeLimit, increasing.  Trial division bounds
/// are clamped to this limit.
inline constexpr std::uint32_t kSmallPrimeLimit = 1u << 21;
const std::vector<std::uint32_t>& small_primes();

/// Least prime > p.
std::uint64_t next_prime(std::uint64_t p);

}  // namespace evenmono
