#pragma once

// Galois groups of irreducible even sextics f = x^6 + a x^4 + b x^2 + c.

#include <evenmono/integer.hpp>
#include <evenmono/poly.hpp>

#include <optional>
#include <set>
#include <string_view>
#include <vector>

namespace evenmono {

/// f = x^6 + (n^2/c - 2m) x^4 + (m^2 - 2n) x^2 + c, which is exactly the
/// shape of an even sextic whose Galois group lies in D6.
struct D6Params {
  Int m, n, c;

  Int a() const;  // n^2/c - 2m
  Int b() const;  // m^2 - 2n

  friend bool operator==(const D6Params&, const D6Params&) = default;
};

/// The eight transitive groups realized by irreducible even sextics.
enum class GaloisGroup { C6, S3, D6, A4, A4xC2, S4_6T7, S4_6T8, S4xC2 };
enum class Certainty { proved, sampled };

struct GaloisLabel {
  GaloisGroup group = GaloisGroup::S4xC2;
  Certainty certainty = Certainty::proved;

  friend bool operator==(const GaloisLabel&, const GaloisLabel&) = default;
};

/// Canonical names: C6 S3 D6 A4 A4xC2 6T7 6T8 S4xC2.
const char* to_string(GaloisGroup g);
const char* to_string(Certainty c);
std::optional<GaloisGroup> parse_group(std::string_view name);
inline constexpr GaloisGroup kAllGroups[] = {GaloisGroup::C6,    GaloisGroup::S3,     GaloisGroup::D6,
                                             GaloisGroup::A4,    GaloisGroup::A4xC2,  GaloisGroup::S4_6T7,
                                             GaloisGroup::S4_6T8, GaloisGroup::S4xC2};

IntPoly even_sextic(const Int& a, const Int& b, const Int& c);
/// x^3 + a x^2 + b x + c.
IntPoly cubic_core(const Int& a, const Int& b, const Int& c);

/// Every (m, n) realizing (a, b, c) in D6 shape, ascending in m.  Found as
/// the integer roots m of m^4 - 2b m^2 - 8c m + (b^2 - 4ac) with
/// m = b mod 2, n = (m^2 - b)/2 and n^2 = c(a + 2m) checked exactly.
/// Requires c != 0.
std::vector<D6Params> d6_shape(const Int& a, const Int& b, const Int& c);

/// -(4 m^3 c - m^2 n^2 - 18 m n c + 4 n^3 + 27 c^2).
Int d_value(const D6Params& p);

/// C6 iff -c is not a square, the cubic core has no integer root and
/// d_value is a square.
bool is_c6(const D6Params& p);

/// Cycle type of a permutation as ascending cycle lengths.
using CycleType = std::vector<unsigned>;

/// Cycle types realized by each group in its degree-6 action.
const std::set<CycleType>& cycle_types(GaloisGroup g);

/// Factor degree patterns of f mod p for the first `count` primes with
/// p not dividing lc(f) * Delta(f), in prime order.  Throws
/// ZeroDiscriminant.
std::vector<CycleType> frobenius_samples(const IntPoly& f, unsigned count);

struct ClassifyOptions {
  /// Primes sampled to confirm every Frobenius cycle type lies in the
  /// returned group; 0 disables the cross-check.
  unsigned cross_check_primes = 200;
  /// Skip the irreducibility check when the caller already did it.
  bool assume_irreducible = false;
};

/// Decides the group from square tests alone:
///  - D6 shape present: C6 if is_c6, S3 if -c*Delta(g) is a square, else D6;
///  - Delta(g) square: A4 if Delta(f) is a square, else A4xC2;
///  - otherwise 6T8 if -c*Delta(g) is a square, 6T7 if -c is a square
///    (then Delta(f) is a square), else S4xC2.
/// Throws ReducibleInput, InconsistencyError.
GaloisLabel classify(const Int& a, const Int& b, const Int& c, const ClassifyOptions& options = {});

}  // namespace evenmono
