#include <evenmono/cyclo.hpp>

#include <evenmono/errors.hpp>

#include <algorithm>

namespace evenmono {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic_poly(unsigned d) {
  if (d == 0) throw Error("cyclotomic_poly: d must be >= 1");
  IntPoly acc = IntPoly::monomial(Int(1), d) - IntPoly{1};
  for (unsigned e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto q = divide_exact(acc, cyclotomic_poly(e));
    if (!q) throw InconsistencyError("cyclotomic_poly: inexact division");
    acc = std::move(*q);
  }
  return acc;
}

IntPoly real_cyclotomic_minpoly(unsigned d) {
  if (d < 3) throw DegenerateConductor();
  const IntPoly phi = cyclotomic_poly(d);
  const auto half = static_cast<std::size_t>(phi.degree() / 2);
  // x^-k Phi_d(x) = c_k + sum_j c_{k+j} (x^j + x^-j) and
  // x^j + x^-j = y T_{j-1} - T_{j-2} with T_0 = 2, T_1 = y.
  const IntPoly y{0, 1};
  IntPoly prev{2}, cur = y;
  IntPoly out = IntPoly::monomial(phi.coeff(half), 0);
  for (std::size_t j = 1; j <= half; ++j) {
    out += cur * phi.coeff(half + j);
    IntPoly next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

IntPoly shifted_variant(const IntPoly& h, const Int& t, bool negate) {
  if (!h.is_monic()) throw NonMonic();
  if (!negate) return h.compose(IntPoly(std::vector<Int>{-t, 1}));
  IntPoly r = h.compose(IntPoly(std::vector<Int>{t, -1}));
  if (sgn(r.leading()) < 0) r = -r;
  return r;
}

std::vector<unsigned> remark_conductors(unsigned q) {
  std::vector<unsigned> out;
  const unsigned target = 2 * q;
  // phi(d) >= sqrt(d/2), so d <= 2 target^2.
  for (unsigned d = 3; d <= 2 * target * target + 2; ++d) {
    if (euler_phi(d) != target) continue;
    const unsigned folded = d % 4 == 2 ? d / 2 : d;
    if (folded >= 3 && std::find(out.begin(), out.end(), folded) == out.end()) out.push_back(folded);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ShiftMatch> match_remark(const IntPoly& g) {
  if (g.degree() < 1) return std::nullopt;
  std::vector<std::pair<IntPoly, bool>> targets{{g, false}};
  const Int g0 = g.constant();
  if (g0 == 1 || g0 == -1) {
    IntPoly r = g.reversed();
    if (sgn(r.leading()) < 0) r = -r;
    targets.emplace_back(std::move(r), true);
  }
  const auto conductors = remark_conductors(static_cast<unsigned>(g.degree()));
  for (const auto& [target, mirror] : targets) {
    for (unsigned d : conductors) {
      const IntPoly h = real_cyclotomic_minpoly(d);
      for (int sign : {1, -1}) {
        if (shifted_variant(h, Int(2 * sign), true) == target) return ShiftMatch{d, sign, mirror};
      }
    }
  }
  return std::nullopt;
}

}  // namespace evenmono
