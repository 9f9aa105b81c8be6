#include <evenmono/poly.hpp>

#include <evenmono/errors.hpp>

#include <algorithm>
#include <sstream>

namespace evenmono {

namespace {

const Int kZero = 0;

Int power(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(const Int& c, std::size_t e) {
  std::vector<Int> v(e + 1, Int(0));
  v[e] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

Int IntPoly::operator()(const Int& x) const {
  Int acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& c : coeffs_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<Int> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
  IntPoly acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * inner;
    acc += IntPoly::monomial(coeffs_[i], 0);
  }
  return acc;
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t e = coeffs_.size(); e-- > 0;) {
    const Int& c = coeffs_[e];
    if (c == 0) continue;
    if (sgn(c) < 0)
      out << '-';
    else if (!first)
      out << '+';
    Int mag = abs(c);
    if (mag != 1 || e == 0) out << mag.get_str();
    if (e >= 1) out << var;
    if (e >= 2) out << '^' << e;
    first = false;
  }
  return out.str();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (Int& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Int& k) {
  if (k == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Int& c : coeffs_) c *= k;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(out));
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

IntPoly pow(const IntPoly& base, unsigned e) {
  IntPoly result{1};
  IntPoly b = base;
  while (e > 0) {
    if (e & 1u) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Int> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<Int> q(r.size() - db, Int(0));
  Int t;
  for (std::size_t k = q.size(); k-- > 0;) {
    const Int& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
    q[k] = t;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), d[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  const Int& lb = b.leading();
  const int db = b.degree();
  int e = a.degree() - db + 1;
  std::vector<Int> r = a.coeffs();
  std::vector<Int> q(static_cast<std::size_t>(a.degree() - db + 1), Int(0));
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    const Int top = r[static_cast<std::size_t>(k)];
    // q = lb*q + top*x^(k-db); r = lb*r - top*x^(k-db)*b
    for (Int& c : q) c *= lb;
    q[static_cast<std::size_t>(k - db)] += top;
    for (Int& c : r) c *= lb;
    if (top != 0) {
      for (int j = 0; j <= db; ++j)
        mpz_submul(r[static_cast<std::size_t>(k - db + j)].get_mpz_t(), top.get_mpz_t(), bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    r[static_cast<std::size_t>(k)] = 0;
    --e;
  }
  IntPoly qp(std::move(q)), rp(std::move(r));
  if (e > 0) {
    const Int scale = power(lb, static_cast<unsigned long>(e));
    qp *= scale;
    rp *= scale;
  }
  return {std::move(qp), std::move(rp)};
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_divmod(x, y).second;
    x = std::move(y);
    y = r.primitive_part();
  }
  if (x.degree() == 0) return IntPoly{1};
  return x.primitive_part();
}

IntPoly compose_power(const IntPoly& g, unsigned l) {
  if (l == 0) throw Error("compose_power: exponent must be >= 1");
  if (g.is_zero()) return {};
  std::vector<Int> out(static_cast<std::size_t>(g.degree()) * l + 1, Int(0));
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) out[i * l] = g.coeffs()[i];
  return IntPoly(std::move(out));
}

std::optional<IntPoly> sqrt_decompose(const IntPoly& f) {
  const auto& c = f.coeffs();
  std::vector<Int> out;
  out.reserve(c.size() / 2 + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 1) {
      if (c[i] != 0) return std::nullopt;
    } else {
      out.push_back(c[i]);
    }
  }
  return IntPoly(std::move(out));
}

Int resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  if (a_in.degree() == 0) return power(a_in.leading(), static_cast<unsigned long>(b_in.degree()));
  if (b_in.degree() == 0) return power(b_in.leading(), static_cast<unsigned long>(a_in.degree()));

  const Int ca = a_in.content(), cb = b_in.content();
  IntPoly a = a_in, b = b_in;
  {
    std::vector<Int> va = a.coeffs(), vb = b.coeffs();
    for (Int& c : va) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    for (Int& c : vb) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
    a = IntPoly(std::move(va));
    b = IntPoly(std::move(vb));
  }
  Int g = 1, h = 1;
  int s = 1;
  const Int t = power(ca, static_cast<unsigned long>(b.degree())) * power(cb, static_cast<unsigned long>(a.degree()));
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  for (;;) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudo_divmod(a, b).second;
    if (r.is_zero()) return 0;
    a = std::move(b);
    const Int divisor = g * power(h, static_cast<unsigned long>(delta));
    std::vector<Int> rv = r.coeffs();
    for (Int& c : rv) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = IntPoly(std::move(rv));
    g = a.leading();
    if (delta > 0) {
      Int num = power(g, static_cast<unsigned long>(delta));
      Int den = power(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) {
      const auto da = static_cast<unsigned long>(a.degree());
      Int num = power(b.leading(), da);
      Int den = power(h, da - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * h;
    }
  }
}

Int discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw ConstantPolynomial();
  const long n = f.degree();
  Int r = resultant(f, f.derivative());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

}  // namespace evenmono
