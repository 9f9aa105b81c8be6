#pragma once

// Cyclotomic and real-cyclotomic minimal polynomials, and matching a
// polynomial against -zeta_d - zeta_d^-1 +- 2.

#include <evenmono/poly.hpp>

#include <optional>
#include <vector>

namespace evenmono {

unsigned euler_phi(unsigned n);

/// Phi_d by exact division of x^d - 1 by Phi_e for the proper divisors e.
IntPoly cyclotomic_poly(unsigned d);

/// Minimal polynomial of zeta_d + zeta_d^-1, degree phi(d)/2.  Throws
/// DegenerateConductor for d < 3.
IntPoly real_cyclotomic_minpoly(unsigned d);

/// Minimal polynomial of t - alpha (negate) or alpha + t, alpha a root of
/// the monic h.  Throws NonMonic.
IntPoly shifted_variant(const IntPoly& h, const Int& t, bool negate);

struct ShiftMatch {
  unsigned d = 0;
  /// +1: -zeta-zeta^-1+2, -1: -zeta-zeta^-1-2.
  int sign = 1;
  /// Matched through the reciprocal partner of g.
  bool mirror = false;

  friend bool operator==(const ShiftMatch&, const ShiftMatch&) = default;
};

/// Conductors d with phi(d) = 2q after folding d = 2 mod 4 onto d/2,
/// ascending.
std::vector<unsigned> remark_conductors(unsigned q);

/// First match over ascending d, sign +1 before -1, g itself before its
/// reciprocal partner (only tried when g(0) = +-1).
std::optional<ShiftMatch> match_remark(const IntPoly& g);

}  // namespace evenmono
