#include <evenmono/integer.hpp>

#include <evenmono/errors.hpp>
#include <evenmono/poly.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace evenmono {

namespace {

// Miller-Rabin with the first 13 prime bases is exact below this value.
const Int kDeterministicLimit("3317044064679887385961981");

bool miller_rabin(const Int& n) {
  static constexpr unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  const Int n_minus_1 = n - 1;
  Int x;
  for (unsigned long a : kBases) {
    if (n == a) return true;
    Int base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Int step(const Int& y, unsigned long c, const Int& n) {
  Int t = y * y + c;
  return t % n;
}

// Brent's variant of Pollard rho with f(y) = y^2 + c, y0 = 2.  Returns a
// nontrivial factor or 0.
Int brent_rho(const Int& n, unsigned long c, std::uint64_t& budget) {
  constexpr std::uint64_t kBatch = 128;
  Int y = 2, x, ys, q = 1, g = 1;
  std::uint64_t r = 1;
  while (g == 1 && budget > 0) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = step(y, c, n);
    std::uint64_t k = 0;
    while (k < r && g == 1 && budget > 0) {
      ys = y;
      const std::uint64_t lim = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = step(y, c, n);
        Int diff = abs(x - y);
        q = q * diff % n;
      }
      budget = budget > lim ? budget - lim : 0;
      g = gcd(q, n);
      k += kBatch;
    }
    r *= 2;
  }
  if (g == n) {
    // Backtrack one step at a time from the last saved point.
    do {
      ys = step(ys, c, n);
      g = gcd(Int(abs(x - ys)), n);
    } while (g == 1);
  }
  if (g == 1 || g == n) return 0;
  return g;
}

// Returns (root, k) with n = root^k and k > 1 maximal-prime step, or k = 1.
std::pair<Int, unsigned> perfect_power(const Int& n) {
  if (n < 4 || !mpz_perfect_power_p(n.get_mpz_t())) return {n, 1};
  const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Int root;
  for (std::uint32_t k : small_primes()) {
    if (k > bits) break;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return {root, k};
  }
  return {n, 1};
}

}  // namespace

const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::no: return "no";
    case Tristate::yes: return "yes";
    case Tristate::unknown: return "unknown";
  }
  return "unknown";
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSmallPrimeLimit, false);
    std::vector<std::uint32_t> out;
    out.reserve(160'000);
    for (std::uint32_t i = 2; i < kSmallPrimeLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kSmallPrimeLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::uint64_t next_prime(std::uint64_t p) {
  const auto& primes = small_primes();
  if (p + 1 < primes.back()) {
    return *std::upper_bound(primes.begin(), primes.end(), static_cast<std::uint32_t>(p));
  }
  std::uint64_t q = p + 1;
  while (!is_prime(Int(static_cast<unsigned long>(q)))) ++q;
  return q;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 43 * 43) return true;
  if (n < kDeterministicLimit) return miller_rabin(n);
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Int Factorization::value() const {
  Int v = cofactor;
  Int pk;
  for (const auto& f : factors) {
    mpz_pow_ui(pk.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    v *= pk;
  }
  return sign * v;
}

unsigned Factorization::exponent_of(const Int& p) const {
  for (const auto& f : factors)
    if (f.prime == p) return f.exponent;
  return 0;
}

std::string Factorization::to_string() const {
  std::ostringstream out;
  out << (sign < 0 ? "-1" : "1");
  for (const auto& f : factors) {
    out << " * " << f.prime.get_str();
    if (f.exponent > 1) out << '^' << f.exponent;
  }
  if (cofactor != 1) out << " * [" << cofactor.get_str() << ']';
  return out.str();
}

Factorization factorize(const Int& n, const FactorBudget& budget) {
  Factorization out;
  if (n == 0) throw Error("factorize: zero has no factorization");
  out.sign = sgn(n) < 0 ? -1 : 1;
  Int m = abs(n);
  std::map<Int, unsigned> found;

  const std::uint64_t bound = std::min<std::uint64_t>(budget.trial_bound, kSmallPrimeLimit);
  bool remainder_is_prime = false;
  for (std::uint32_t p : small_primes()) {
    if (p > bound) break;
    if (Int(p) * p > m) {
      remainder_is_prime = m > 1;
      break;
    }
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
      found[Int(p)] += e;
    }
  }
  if (remainder_is_prime) {
    found[m] += 1;
    m = 1;
  }

  std::uint64_t rho_budget = budget.rho_iterations;
  std::vector<std::pair<Int, unsigned>> pending;
  if (m > 1) pending.emplace_back(m, 1);
  while (!pending.empty()) {
    auto [x, mult] = pending.back();
    pending.pop_back();
    if (x == 1) continue;
    if (is_prime(x)) {
      found[x] += mult;
      continue;
    }
    if (auto [root, k] = perfect_power(x); k > 1) {
      pending.emplace_back(root, mult * k);
      continue;
    }
    Int d = 0;
    for (unsigned long c = 1; rho_budget > 0 && d == 0; ++c) d = brent_rho(x, c, rho_budget);
    if (d == 0) {
      Int xk;
      mpz_pow_ui(xk.get_mpz_t(), x.get_mpz_t(), mult);
      out.cofactor *= xk;
      continue;
    }
    Int other = x / d;
    pending.emplace_back(d, mult);
    pending.emplace_back(other, mult);
  }

  out.factors.reserve(found.size());
  for (auto& [p, e] : found) out.factors.push_back({p, e});
  return out;
}

Factorization multiply(const Factorization& a, const Factorization& b) {
  Factorization out;
  out.sign = a.sign * b.sign;
  out.cofactor = a.cofactor * b.cofactor;
  std::map<Int, unsigned> merged;
  for (const auto& f : a.factors) merged[f.prime] += f.exponent;
  for (const auto& f : b.factors) merged[f.prime] += f.exponent;
  for (auto& [p, e] : merged) out.factors.push_back({p, e});
  return out;
}

std::optional<Int> is_perfect_square(const Int& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Tristate is_squarefree(const Int& n, const FactorBudget& budget) {
  const Factorization f = factorize(n, budget);
  for (const auto& pp : f.factors)
    if (pp.exponent > 1) return Tristate::no;
  if (f.complete()) return Tristate::yes;
  // factorize already peeled off perfect powers, so only a gcd with a known
  // prime could still expose a square.
  for (const auto& pp : f.factors)
    if (mpz_divisible_p(f.cofactor.get_mpz_t(), pp.prime.get_mpz_t())) return Tristate::no;
  return Tristate::unknown;
}

namespace {

// Divides q by (x - r) in place, returns true when the remainder is zero.
bool deflate(std::vector<Int>& q, const Int& r) {
  const std::size_t n = q.size() - 1;
  std::vector<Int> quot(n);
  Int carry = q[n];
  for (std::size_t i = n; i-- > 0;) {
    quot[i] = carry;
    carry = q[i] + carry * r;
  }
  if (carry != 0) return false;
  q = std::move(quot);
  return true;
}

Int horner(const std::vector<Int>& q, const Int& x) {
  Int acc = 0;
  for (std::size_t i = q.size(); i-- > 0;) acc = acc * x + q[i];
  return acc;
}

void collect_divisors(const std::vector<PrimePower>& primes, std::size_t i, const Int& current,
                      const Int& bound, std::vector<Int>& out) {
  if (i == primes.size()) {
    out.push_back(current);
    return;
  }
  Int d = current;
  for (unsigned e = 0; e <= primes[i].exponent && d <= bound; ++e) {
    collect_divisors(primes, i + 1, d, bound, out);
    d *= primes[i].prime;
  }
}

}  // namespace

std::vector<Int> integer_roots(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::vector<Int> roots;
  const auto& c = p.coeffs();
  std::size_t v = 0;
  while (c[v] == 0) ++v;
  roots.assign(v, Int(0));
  std::vector<Int> q(c.begin() + static_cast<std::ptrdiff_t>(v), c.end());
  if (q.size() == 1) return roots;

  // Cauchy bound on the absolute value of any root.
  Int top = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) top = std::max(top, Int(abs(q[i])));
  Int lead = abs(q.back());
  Int bound = 1 + (top + lead - 1) / lead;

  const Factorization f = factorize(q.front());
  if (!f.complete() && bound > FactorBudget{}.trial_bound)
    throw Error("integer_roots: constant term could not be fully factored");

  std::vector<Int> divisors;
  collect_divisors(f.factors, 0, Int(1), bound, divisors);
  std::sort(divisors.begin(), divisors.end());
  for (const Int& d : divisors) {
    if (d > bound) continue;
    for (const Int& r : {Int(-d), d}) {
      if (q.size() < 2 || horner(q, r) != 0) continue;
      while (q.size() >= 2 && deflate(q, r)) roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace evenmono
