#pragma once

// Independent reference computations used only by the tests.  None of
// them call into the library's algorithms beyond IntPoly storage.

#include <evenmono/galois6.hpp>
#include <evenmono/poly.hpp>

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using evenmono::Int;
using evenmono::IntPoly;

/// Determinant by fraction-free Gaussian elimination (Bareiss).
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Resultant as the determinant of the Sylvester matrix.
inline Int sylvester_resultant(const IntPoly& a, const IntPoly& b) {
  const int da = a.degree(), db = b.degree();
  const auto n = static_cast<std::size_t>(da + db);
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + da - i)] = a.coeff(static_cast<std::size_t>(i));
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i)
      m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + db - i)] = b.coeff(static_cast<std::size_t>(i));
  return bareiss_det(std::move(m));
}

inline Int discriminant(const IntPoly& f) {
  const int n = f.degree();
  Int r = sylvester_resultant(f, f.derivative()) / f.leading();
  return (n * (n - 1) / 2) % 2 ? Int(-r) : r;
}

/// Primality by GMP's independent probabilistic test (30 rounds).
inline bool gmp_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

/// Prime exponents of |n| by repeated division; only for small n.
inline std::map<long, unsigned> naive_factor(long n) {
  std::map<long, unsigned> out;
  if (n < 0) n = -n;
  for (long d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  if (n > 1) ++out[n];
  return out;
}

inline bool naive_squarefree(long n) {
  for (const auto& [p, e] : naive_factor(n))
    if (e > 1) return false;
  return true;
}

/// Integer roots by scanning |x| <= 1 + max|c_i| / |lc| (Cauchy bound),
/// with multiplicity by repeated synthetic division.
inline std::vector<Int> scan_integer_roots(IntPoly p) {
  std::vector<Int> roots;
  Int bound = 0;
  for (const auto& c : p.coeffs()) bound = std::max(bound, Int(abs(c)));
  bound = bound / abs(p.leading()) + 1;
  for (Int x = -bound; x <= bound; ++x) {
    while (p.degree() >= 1 && p(x) == 0) {
      roots.push_back(x);
      // divide by (X - x)
      const auto& c = p.coeffs();
      std::vector<Int> q(c.size() - 1);
      Int carry = 0;
      for (std::size_t i = c.size(); i-- > 1;) {
        carry = c[i] + carry * x;
        q[i - 1] = carry;
      }
      p = IntPoly(std::move(q));
    }
  }
  return roots;
}

/// Hand-derived cycle types of the eight transitive groups of even sextics.
inline std::map<evenmono::GaloisGroup, std::set<evenmono::CycleType>> cycle_type_table() {
  using G = evenmono::GaloisGroup;
  using T = evenmono::CycleType;
  const T e{1, 1, 1, 1, 1, 1}, t1{1, 1, 1, 1, 2}, t2{1, 1, 2, 2}, t3{2, 2, 2}, c3{3, 3}, c6{6}, c4{1, 1, 4}, c24{2, 4};
  return {
      {G::C6, {e, t3, c3, c6}},
      {G::S3, {e, t3, c3}},
      {G::D6, {e, t2, t3, c3, c6}},
      {G::A4, {e, t2, c3}},
      {G::A4xC2, {e, t1, t2, t3, c3, c6}},
      {G::S4_6T7, {e, t2, c24, c3}},
      {G::S4_6T8, {e, t2, c4, t3, c3}},
      {G::S4xC2, {e, t1, t2, t3, c4, c24, c3, c6}},
  };
}

/// Ring of integers of Q(sqrt d), d squarefree: Z[sqrt d] iff d != 1 mod 4.
inline bool quadratic_monogenic_law(long d) { return ((d % 4) + 4) % 4 != 1; }

/// Number of distinct real roots by a Sturm sequence over Z.
inline int sturm_real_roots(const IntPoly& f) {
  auto content_abs = [](IntPoly p) {
    Int g = 0;
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1) {
      std::vector<Int> c = p.coeffs();
      for (auto& v : c) v /= g;
      p = IntPoly(std::move(c));
    }
    return p;
  };
  std::vector<IntPoly> seq{content_abs(f), content_abs(f.derivative())};
  while (seq.back().degree() > 0) {
    const IntPoly& a = seq[seq.size() - 2];
    const IntPoly& b = seq.back();
    // Long division with rational steps avoided: scale a by lc(b)^k with
    // k even so the remainder keeps its sign.
    IntPoly r = a;
    const int delta = a.degree() - b.degree() + 1;
    const Int lc = b.leading();
    Int scale = 1;
    for (int i = 0; i < delta + (delta % 2); ++i) scale *= lc;
    r = r * scale;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const Int q = r.leading() / lc;
      r = r - b * q * IntPoly::monomial(Int(1), static_cast<unsigned>(r.degree() - b.degree()));
    }
    if (r.is_zero()) break;
    seq.push_back(content_abs(-r));
  }
  auto variations = [&](bool at_plus) {
    int v = 0, last = 0;
    for (const auto& p : seq) {
      int s = sgn(p.leading());
      if (!at_plus && p.degree() % 2) s = -s;
      if (s != 0 && last != 0 && s != last) ++v;
      if (s != 0) last = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

inline IntPoly random_poly(std::mt19937_64& rng, int degree, long bound, bool monic) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Int> c(static_cast<std::size_t>(degree + 1));
  for (auto& v : c) v = coeff(rng);
  if (monic) c.back() = 1;
  while (c.back() == 0) c.back() = coeff(rng);
  return IntPoly(std::move(c));
}

}  // namespace oracle
