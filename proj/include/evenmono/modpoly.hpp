#pragma once

// Polynomials over F_p for word-size primes p < 2^62.

#include <evenmono/poly.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace evenmono {

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

class ModPoly {
 public:
  ModPoly() = default;
  /// Reduces every coefficient into [0, p).  Throws ModulusTooLarge.
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  ModPoly(std::uint64_t p, const IntPoly& f);

  static ModPoly x(std::uint64_t p) { return ModPoly(p, std::vector<std::uint64_t>{0, 1}); }
  static ModPoly constant(std::uint64_t p, std::uint64_t c) { return ModPoly(p, std::vector<std::uint64_t>{c}); }

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  ModPoly monic() const;
  ModPoly derivative() const;
  /// Representatives in [0, p).
  IntPoly lift() const;
  std::string to_string(char var = 'x') const;

  ModPoly& operator+=(const ModPoly& o);
  ModPoly& operator-=(const ModPoly& o);
  friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
  friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, std::uint64_t k);
  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.coeffs_ == b.coeffs_; }
  friend bool operator<(const ModPoly& a, const ModPoly& b);

 private:
  void normalize();

  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> coeffs_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

/// (quotient, remainder).  Throws ZeroPolynomial on division by zero.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
/// Monic gcd (zero when both inputs are zero).
ModPoly gcd(const ModPoly& a, const ModPoly& b);
/// Monic gcd g together with s, t such that s*a + t*b = g.
struct ModXgcd {
  ModPoly g, s, t;
};
ModXgcd xgcd(const ModPoly& a, const ModPoly& b);
/// base^e mod m.
ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m);

struct ModFactor {
  ModPoly factor;  // monic irreducible
  unsigned exponent = 0;

  friend bool operator==(const ModFactor&, const ModFactor&) = default;
};

/// Complete factorization into monic irreducibles (the leading coefficient
/// is dropped), sorted by degree then coefficients.  Equal-degree splitting
/// uses a fixed seed so results are reproducible.  Throws ZeroPolynomial.
std::vector<ModFactor> factor_mod_p(const ModPoly& f);

/// Degrees of the irreducible factors of a squarefree f, ascending, computed
/// by distinct-degree factorization alone.
std::vector<unsigned> factor_degrees(const ModPoly& f);

bool is_squarefree(const ModPoly& f);

}  // namespace evenmono
