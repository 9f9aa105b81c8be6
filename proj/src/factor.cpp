#include <evenmono/factor.hpp>

#include <evenmono/errors.hpp>
#include <evenmono/modpoly.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>

namespace evenmono {

namespace {

// Arithmetic in (Z/M)[x] on dense Int vectors kept in [0, M).
struct ModRing {
  Int m;

  IntPoly reduce(const IntPoly& a) const {
    std::vector<Int> c = a.coeffs();
    for (Int& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return IntPoly(std::move(c));
  }
  IntPoly mul(const IntPoly& a, const IntPoly& b) const { return reduce(a * b); }
  IntPoly add(const IntPoly& a, const IntPoly& b) const { return reduce(a + b); }
  IntPoly sub(const IntPoly& a, const IntPoly& b) const { return reduce(a - b); }

  // Division by a monic divisor.
  std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b) const {
    if (a.degree() < b.degree()) return {IntPoly{}, reduce(a)};
    std::vector<Int> r = reduce(a).coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    std::vector<Int> q(r.size() - db, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      Int t = r[k + db];
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
      q[k] = t;
      if (t == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) {
        mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), d[j].get_mpz_t());
        mpz_fdiv_r(r[k + j].get_mpz_t(), r[k + j].get_mpz_t(), m.get_mpz_t());
      }
    }
    r.resize(db);
    return {IntPoly(std::move(q)), reduce(IntPoly(std::move(r)))};
  }
};

Int symmetric(const Int& v, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

IntPoly symmetric(const IntPoly& a, const Int& m) {
  std::vector<Int> c = a.coeffs();
  for (Int& v : c) v = symmetric(v, m);
  return IntPoly(std::move(c));
}

struct LiftState {
  IntPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m^2 for monic f = g*h.
LiftState hensel_step(const IntPoly& f, const LiftState& in, const Int& m) {
  const ModRing R{m * m};
  const IntPoly e = R.sub(f, R.mul(in.g, in.h));
  auto [q, r] = R.divmod(R.mul(in.s, e), in.h);
  LiftState out;
  out.g = R.add(R.add(in.g, R.mul(in.t, e)), R.mul(q, in.g));
  out.h = R.add(in.h, r);
  const IntPoly b = R.sub(R.add(R.mul(in.s, out.g), R.mul(in.t, out.h)), IntPoly{1});
  auto [c, d] = R.divmod(R.mul(in.s, b), out.h);
  out.s = R.sub(in.s, d);
  out.t = R.sub(R.sub(in.t, R.mul(in.t, b)), R.mul(c, out.g));
  return out;
}

// Lifts monic f = prod(factors) mod p to modulus p^(2^steps).
void lift_all(const IntPoly& f, std::span<const ModPoly> factors, std::uint64_t p, unsigned steps,
              std::vector<IntPoly>& out) {
  Int final_modulus(static_cast<unsigned long>(p));
  for (unsigned i = 0; i < steps; ++i) final_modulus *= final_modulus;
  if (factors.size() == 1) {
    out.push_back(ModRing{final_modulus}.reduce(f));
    return;
  }
  const std::size_t half = factors.size() / 2;
  ModPoly g0 = ModPoly::constant(p, 1), h0 = ModPoly::constant(p, 1);
  for (std::size_t i = 0; i < half; ++i) g0 = g0 * factors[i];
  for (std::size_t i = half; i < factors.size(); ++i) h0 = h0 * factors[i];
  ModXgcd bez = xgcd(g0, h0);
  if (bez.g.degree() != 0) throw InconsistencyError("Hensel lifting: modular factors not coprime");
  // Normalize so deg s < deg h and deg t < deg g.
  auto [qs, rs] = divmod(bez.s, h0);
  ModPoly s0 = rs;
  ModPoly t0 = bez.t + qs * g0;

  LiftState st{g0.lift(), h0.lift(), s0.lift(), t0.lift()};
  Int m(static_cast<unsigned long>(p));
  for (unsigned i = 0; i < steps; ++i) {
    st = hensel_step(ModRing{m * m}.reduce(f), st, m);
    m *= m;
  }
  lift_all(st.g, factors.subspan(0, half), p, steps, out);
  lift_all(st.h, factors.subspan(half), p, steps, out);
}

Int isqrt_ceil(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) ++r;
  return r;
}

struct PrimeChoice {
  std::uint64_t p = 0;
  std::vector<ModPoly> factors;
};

PrimeChoice modular_factors(const IntPoly& f, std::uint64_t p) {
  PrimeChoice c{p, {}};
  for (auto& mf : factor_mod_p(ModPoly(p, f))) c.factors.push_back(std::move(mf.factor));
  return c;
}

// Smallest p >= 3 with p not dividing lc(f) and f squarefree mod p.  When
// that prime yields many modular factors a few further good primes are
// tried and the one with the fewest factors wins; recombination cost is
// exponential in that count.
PrimeChoice choose_prime(const IntPoly& f) {
  constexpr std::size_t kManyFactors = 8;
  constexpr int kExtraPrimes = 6;
  PrimeChoice best;
  int extra = 0;
  for (std::uint64_t p = 3;; p = next_prime(p)) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    ModPoly fp(p, f);
    if (!is_squarefree(fp)) continue;
    PrimeChoice c = modular_factors(f, p);
    if (best.p == 0 || c.factors.size() < best.factors.size()) best = std::move(c);
    if (best.factors.size() <= kManyFactors || ++extra > kExtraPrimes) return best;
  }
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (visit(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Irreducible factors of a primitive squarefree f with positive leading
// coefficient.
std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
  if (f.degree() <= 1) return {f};
  PrimeChoice choice = choose_prime(f);
  if (choice.factors.size() == 1) return {f};
  const std::uint64_t p = choice.p;

  // Any factor g of f, scaled by lc(f)/lc(g), has coefficients bounded by
  // |lc(f)| * 2^deg(f) * ||f||_2.
  Int norm2 = 0;
  for (const Int& c : f.coeffs()) norm2 += c * c;
  Int bound = abs(f.leading()) * isqrt_ceil(norm2);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  unsigned steps = 0;
  Int modulus(static_cast<unsigned long>(p));
  while (modulus <= 2 * bound) {
    modulus *= modulus;
    ++steps;
  }

  Int lc_inv;
  if (mpz_invert(lc_inv.get_mpz_t(), f.leading().get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw InconsistencyError("leading coefficient not invertible modulo p^k");
  const IntPoly monic_f = ModRing{modulus}.reduce(f * lc_inv);

  std::vector<IntPoly> lifted;
  lift_all(monic_f, choice.factors, p, steps, lifted);

  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::vector<IntPoly> pool = std::move(lifted);
  const ModRing R{modulus};
  for (std::size_t k = 1; 2 * k <= pool.size();) {
    bool split = false;
    std::vector<std::size_t> hit;
    IntPoly quotient, factor;
    for_each_subset(pool.size(), k, [&](const std::vector<std::size_t>& subset) {
      const Int& lc = rest.leading();
      // Constant-term screen before the full product.
      Int c0 = lc;
      for (std::size_t i : subset) {
        c0 = c0 * pool[i].constant();
        mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), modulus.get_mpz_t());
      }
      c0 = symmetric(c0, modulus);
      const Int rc = rest.constant() * lc;
      if (c0 == 0 ? rc != 0 : !mpz_divisible_p(rc.get_mpz_t(), c0.get_mpz_t())) return false;
      IntPoly cand = IntPoly::monomial(lc, 0);
      for (std::size_t i : subset) cand = R.mul(cand, pool[i]);
      cand = symmetric(cand, modulus).primitive_part();
      if (auto q = divide_exact(rest, cand)) {
        quotient = std::move(*q);
        factor = std::move(cand);
        hit = subset;
        split = true;
        return true;
      }
      return false;
    });
    if (!split) {
      ++k;
      continue;
    }
    found.push_back(factor);
    rest = quotient;
    std::vector<IntPoly> kept;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (std::find(hit.begin(), hit.end(), i) == hit.end()) kept.push_back(std::move(pool[i]));
    pool = std::move(kept);
  }
  found.push_back(rest.primitive_part());
  return found;
}

// Yun's algorithm over Q on a primitive polynomial with positive leading
// coefficient: (part, multiplicity) with f = prod(part^multiplicity).
std::vector<std::pair<IntPoly, unsigned>> squarefree_parts(const IntPoly& f) {
  std::vector<std::pair<IntPoly, unsigned>> out;
  const IntPoly df = f.derivative();
  const IntPoly a = gcd(f, df);
  IntPoly b = *divide_exact(f, a);
  IntPoly c = *divide_exact(df, a);
  IntPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    IntPoly ai = gcd(b, d);
    b = *divide_exact(b, ai);
    c = *divide_exact(d, ai);
    d = c - b.derivative();
    if (ai.degree() > 0) out.emplace_back(ai, i);
  }
  return out;
}

}  // namespace

IntPoly ZFactorization::expand() const {
  IntPoly r = IntPoly::monomial(unit * content, 0);
  for (const auto& pf : factors) r = r * pow(pf.factor, pf.exponent);
  return r;
}

unsigned ZFactorization::count() const {
  unsigned n = 0;
  for (const auto& pf : factors) n += pf.exponent;
  return n;
}

ZFactorization factor_over_Z(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  ZFactorization out;
  out.unit = sgn(f.leading()) < 0 ? -1 : 1;
  out.content = f.content();
  if (f.degree() == 0) return out;
  const IntPoly prim = f.primitive_part();
  for (const auto& [part, mult] : squarefree_parts(prim)) {
    for (IntPoly& irr : factor_squarefree(part)) out.factors.push_back({std::move(irr), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor == b.factor) return a.exponent < b.exponent;
    return a.factor < b.factor;
  });
  return out;
}

bool has_irreducible_reduction(const IntPoly& f, unsigned prime_bound) {
  if (f.degree() < 1) return false;
  for (std::uint32_t p : small_primes()) {
    if (p >= prime_bound) break;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    ModPoly fp(p, f);
    if (!is_squarefree(fp)) continue;
    const auto degrees = factor_degrees(fp);
    if (degrees.size() == 1) return true;
  }
  return false;
}

bool is_irreducible(const IntPoly& f) {
  if (f.degree() < 1) throw ConstantPolynomial();
  if (f.degree() == 1) return true;
  const IntPoly prim = f.primitive_part();

  Int tail = 0;
  for (int i = 0; i < prim.degree(); ++i) tail = gcd(tail, prim.coeffs()[static_cast<std::size_t>(i)]);
  if (tail > 1) {
    for (const auto& pp : factorize(tail).factors) {
      const Int p2 = pp.prime * pp.prime;
      if (!mpz_divisible_p(prim.leading().get_mpz_t(), pp.prime.get_mpz_t()) &&
          !mpz_divisible_p(prim.constant().get_mpz_t(), p2.get_mpz_t()))
        return true;
    }
  }
  if (prim.constant() == 0) return false;
  if (has_irreducible_reduction(prim)) return true;
  return factor_over_Z(prim).count() == 1;
}

}  // namespace evenmono
