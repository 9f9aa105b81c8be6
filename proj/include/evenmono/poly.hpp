#pragma once

// Dense univariate polynomials over Z.

#include <evenmono/integer.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evenmono {

/// Coefficients are stored in ascending degree with no leading zeros; the
/// zero polynomial is the empty vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const Int& c, std::size_t e);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  const Int& leading() const;
  Int constant() const { return coeff(0); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Int operator()(const Int& x) const;

  IntPoly derivative() const;
  /// Non-negative gcd of the coefficients.
  Int content() const;
  /// Divided by content, sign chosen so the leading coefficient is positive.
  IntPoly primitive_part() const;
  /// this(inner(x)).
  IntPoly compose(const IntPoly& inner) const;
  /// x^deg * this(1/x).
  IntPoly reversed() const;

  std::string to_string(char var = 'x') const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Int& k);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Int& k) { return a *= k; }
  friend IntPoly operator*(const Int& k, IntPoly a) { return a *= k; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Deterministic total order: degree first, then coefficients from the top.
  friend bool operator<(const IntPoly& a, const IntPoly& b);

 private:
  void normalize();

  std::vector<Int> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned e);

/// Quotient when b divides a exactly over Z, otherwise nullopt.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// lc(b)^(deg a - deg b + 1) * a = q * b + r.
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b);

/// Primitive gcd over Z[x] with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// g(x^l).
IntPoly compose_power(const IntPoly& g, unsigned l);

/// g with g(x^2) = f when every odd coefficient of f vanishes.
std::optional<IntPoly> sqrt_decompose(const IntPoly& f);

/// Res(a, b) by the subresultant PRS.
Int resultant(const IntPoly& a, const IntPoly& b);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).  Throws ConstantPolynomial when
/// deg f < 1.
Int discriminant(const IntPoly& f);

}  // namespace evenmono
