#pragma once

// Parametrized families of even sextics, bounded searches over coefficient
// boxes or D6-shape parameters, and the verification suite built on them.

#include <evenmono/galois6.hpp>
#include <evenmono/mono.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace evenmono {

/// x^6 + (n^2/c - 2m) x^4 + (m^2 - 2n) x^2 + c.  Throws DivisibilityViolation.
IntPoly family_c6(const Int& m, const Int& n, const Int& c);

/// m = 0: x^6 + k^2 c x^4 - 2kc x^2 + c.
IntPoly family_m0(const Int& k, const Int& c);
/// -64 c^5 (4 k^3 c + 27)^2.
Int family_m0_disc(const Int& k, const Int& c);

/// n = 0: x^6 - 2jc x^4 + j^2 c^2 x^2 + c.
IntPoly family_n0(const Int& j, const Int& c);
/// -64 c^5 (4 j^3 c^2 + 27)^2.
Int family_n0_disc(const Int& j, const Int& c);

/// 4 j^3 c^2 - j^2 k^2 c^2 - 18 jkc + 4 k^3 c + 27.
Int d_tilde(const Int& j, const Int& k, const Int& c);
/// Delta(family_c6(jc, kc, c)) = -64 c^5 (jkc - 1)^4 d_tilde^2.
Int multiple_shape_disc(const Int& j, const Int& k, const Int& c);

/// x^6 + 9x^4 + bx^2 + b.
IntPoly family_6t8(const Int& b);
/// b = 2 mod 4 and b(b - 27) squarefree.
bool family_6t8_qualifies(const Int& b);

enum class SearchMode { coeff_box, shape_params };

struct IntRange {
  long lo = 0;
  long hi = 0;
};

struct SearchSpec {
  SearchMode mode = SearchMode::coeff_box;
  /// coeff_box: ranges of a, b, c.  shape_params: ranges of m, n, c, with
  /// only c dividing n^2 visited.
  std::array<IntRange, 3> bounds{};
  /// Conjunctive predicates from registered_filters().
  std::vector<std::string> filters;
  /// Worker threads; the outermost variable is dealt out one value at a time.
  unsigned parallel_chunks = 1;
  /// Forwarded to classify.
  unsigned cross_check_primes = 0;
};

/// c6_only s3_only d6_only a4_only a4xc2_only 6t7_only 6t8_only s4xc2_only
/// monogenic_only eisenstein_filter irreducible.
const std::vector<std::string>& registered_filters();

/// Symmetric box [-bound, bound]^3.
SearchSpec box_spec(long bound, std::vector<std::string> filters, unsigned jobs = 1);
/// |m|, |n| <= bound and 0 < |c| <= c_bound.
SearchSpec shape_spec(long bound, long c_bound, std::vector<std::string> filters, unsigned jobs = 1);

/// Throws Error on empty ranges, unknown filters or zero workers.
void validate(const SearchSpec& spec);

struct SearchHit {
  Int a, b, c;
  std::vector<D6Params> shapes;
  GaloisLabel label;
  MonogenicityReport report;
};

/// Irreducible even sextics passing every filter, sorted by (a, b, c) and
/// free of duplicates.  Output does not depend on parallel_chunks.
std::vector<SearchHit> run_search(const SearchSpec& spec);

struct VerificationReport {
  std::string name;
  bool passed = false;
  std::string summary;
  /// Offending or supporting instances, one per line.
  std::vector<std::string> witnesses;
  std::map<std::string, long> counts;
};

/// The six triples of the classification, ascending.
const std::vector<std::array<long, 3>>& c6_monogenic_triples();
/// The degree-10 and degree-22 cyclic lists.
const std::vector<IntPoly>& cyclic_even_list();

/// Frobenius patterns of the quintic g (12 primes) and of g(x^2) (30
/// primes) all fit the dihedral group of order 10, the latter in its
/// regular action.  Necessary for Gal(g(x^2)) = D5 regular.  Throws
/// DegreeMismatch.
bool dihedral_decic_screen(const IntPoly& g);

VerificationReport verify_thm_1_1(long bound = 60, unsigned jobs = 1);
VerificationReport verify_lem_1_2(unsigned frobenius_primes = 500);
VerificationReport verify_thm_4_1(long max_b = 500);
VerificationReport verify_lem_4_2(long bound = 40, long quintic_bound = 6, unsigned jobs = 1);

}  // namespace evenmono
