#include <evenmono/modpoly.hpp>

#include <evenmono/errors.hpp>

#include <algorithm>
#include <random>
#include <sstream>

namespace evenmono {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

namespace {

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;  // p < 2^62, no overflow
  return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

void check_same_modulus(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw Error("ModPoly moduli differ");
}

}  // namespace

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 128-bit values.
  __int128 r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    std::swap(r0, r1);
    r1 -= q * r0;
    std::swap(s0, s1);
    s1 -= q * s0;
  }
  if (r0 != 1) throw Error("invmod: not invertible");
  __int128 v = s0 % static_cast<__int128>(p);
  if (v < 0) v += p;
  return static_cast<std::uint64_t>(v);
}

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (p_ < 2) throw Error("ModPoly: modulus must be >= 2");
  if (p_ >= kMaxModulus) throw ModulusTooLarge();
  for (auto& c : coeffs_) c %= p_;
  normalize();
}

ModPoly::ModPoly(std::uint64_t p, const IntPoly& f) : p_(p) {
  if (p_ < 2) throw Error("ModPoly: modulus must be >= 2");
  if (p_ >= kMaxModulus) throw ModulusTooLarge();
  coeffs_.reserve(f.coeffs().size());
  for (const Int& c : f.coeffs()) coeffs_.push_back(mpz_fdiv_ui(c.get_mpz_t(), p_));
  normalize();
}

void ModPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ModPoly ModPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return *this * invmod(leading(), p_);
}

ModPoly ModPoly::derivative() const {
  if (coeffs_.size() <= 1) return ModPoly(p_, std::vector<std::uint64_t>{});
  std::vector<std::uint64_t> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = mulmod(coeffs_[i], i % p_, p_);
  return ModPoly(p_, std::move(d));
}

IntPoly ModPoly::lift() const {
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (auto c : coeffs_) out.emplace_back(static_cast<unsigned long>(c));
  return IntPoly(std::move(out));
}

std::string ModPoly::to_string(char var) const { return lift().to_string(var); }

ModPoly& ModPoly::operator+=(const ModPoly& o) {
  check_same_modulus(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = addmod(coeffs_[i], o.coeffs_[i], p_);
  normalize();
  return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o) {
  check_same_modulus(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = submod(coeffs_[i], o.coeffs_[i], p_);
  normalize();
  return *this;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  check_same_modulus(a, b);
  const std::uint64_t p = a.p_;
  if (a.is_zero() || b.is_zero()) return ModPoly(p, std::vector<std::uint64_t>{});
  std::vector<unsigned __int128> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  // Below 2^31 a column sum of products cannot overflow 128 bits.
  const bool small = p < (std::uint64_t{1} << 31);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a.coeffs_[i]) * b.coeffs_[j];
      if (!small) acc[i + j] %= p;
    }
  }
  std::vector<std::uint64_t> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<std::uint64_t>(acc[k] % p);
  return ModPoly(p, std::move(out));
}

ModPoly operator*(const ModPoly& a, std::uint64_t k) {
  std::vector<std::uint64_t> out(a.coeffs_);
  k %= a.p_;
  for (auto& c : out) c = mulmod(c, k, a.p_);
  return ModPoly(a.p_, std::move(out));
}

bool operator<(const ModPoly& a, const ModPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;)
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  return false;
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  check_same_modulus(a, b);
  if (b.is_zero()) throw ZeroPolynomial();
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {ModPoly(p, std::vector<std::uint64_t>{}), a};
  std::vector<std::uint64_t> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const std::uint64_t inv = invmod(d.back(), p);
  std::vector<std::uint64_t> q(r.size() - db, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t t = mulmod(r[k + db], inv, p);
    q[k] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = submod(r[k + j], mulmod(t, d[j], p), p);
  }
  r.resize(db);
  return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ModXgcd xgcd(const ModPoly& a, const ModPoly& b) {
  const std::uint64_t p = a.modulus();
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::constant(p, 1), s1(p, std::vector<std::uint64_t>{});
  ModPoly t0(p, std::vector<std::uint64_t>{}), t1 = ModPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const std::uint64_t inv = invmod(r0.leading(), p);
  return {r0 * inv, s0 * inv, t0 * inv};
}

ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m) {
  const std::uint64_t p = m.modulus();
  ModPoly result = ModPoly::constant(p, 1) % m;
  if (e == 0) return result;
  ModPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

bool is_squarefree(const ModPoly& f) {
  if (f.degree() <= 0) return !f.is_zero();
  ModPoly d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

namespace {

// (squarefree factor, multiplicity) for monic f.
void squarefree_decompose(const ModPoly& f, unsigned scale, std::vector<std::pair<ModPoly, unsigned>>& out) {
  const std::uint64_t p = f.modulus();
  if (f.degree() <= 0) return;
  ModPoly c = gcd(f, f.derivative());
  ModPoly w = divmod(f, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    w = std::move(y);
    c = divmod(c, w).first;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a p-th power: take the p-th root coefficientwise.
    std::vector<std::uint64_t> root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
    squarefree_decompose(ModPoly(p, std::move(root)).monic(), scale * static_cast<unsigned>(p), out);
  }
}

// (product of all irreducible factors of degree d, d) for squarefree monic f.
std::vector<std::pair<ModPoly, unsigned>> distinct_degree(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::pair<ModPoly, unsigned>> out;
  ModPoly rest = f;
  const ModPoly x = ModPoly::x(p);
  ModPoly h = x % rest;
  const Int pz(static_cast<unsigned long>(p));
  for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
    h = powmod(h, pz, rest);
    ModPoly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = divmod(rest, g).first;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

ModPoly random_poly(std::uint64_t p, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(below_degree));
  for (auto& v : c) v = dist(rng);
  return ModPoly(p, std::move(c));
}

// Splits a squarefree monic product of irreducibles of degree d.
void equal_degree(const ModPoly& g, unsigned d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const std::uint64_t p = g.modulus();
  Int exponent;
  if (p != 2) {
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, d);
    exponent = (exponent - 1) / 2;
  }
  for (;;) {
    ModPoly a = random_poly(p, g.degree(), rng);
    if (a.degree() <= 0) continue;
    ModPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      ModPoly term = a % g;
      b = term;
      for (unsigned k = 1; k < d; ++k) {
        term = (term * term) % g;
        b += term;
      }
    } else {
      b = powmod(a, exponent, g) - ModPoly::constant(p, 1);
    }
    ModPoly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const ModPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  std::vector<ModFactor> result;
  if (f.degree() == 0) return result;
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<std::pair<ModPoly, unsigned>> sqf;
  squarefree_decompose(f.monic(), 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<ModPoly> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) result.push_back({std::move(piece), mult});
    }
  }
  std::sort(result.begin(), result.end(), [](const ModFactor& a, const ModFactor& b) {
    if (a.factor == b.factor) return a.exponent < b.exponent;
    return a.factor < b.factor;
  });
  return result;
}

std::vector<unsigned> factor_degrees(const ModPoly& f) {
  std::vector<unsigned> degrees;
  for (const auto& [block, d] : distinct_degree(f.monic()))
    for (int k = 0; k < block.degree() / static_cast<int>(d); ++k) degrees.push_back(d);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace evenmono
