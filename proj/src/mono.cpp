#include <evenmono/mono.hpp>

#include <evenmono/errors.hpp>
#include <evenmono/factor.hpp>
#include <evenmono/modpoly.hpp>

namespace evenmono {

const char* to_string(MonoStatus s) {
  switch (s) {
    case MonoStatus::monogenic: return "Monogenic";
    case MonoStatus::not_monogenic: return "NotMonogenic";
    case MonoStatus::unknown: return "Unknown";
    case MonoStatus::reducible: return "Reducible";
  }
  return "Unknown";
}

bool is_p_eisenstein(const IntPoly& f, const Int& p) {
  if (!f.is_monic()) throw NonMonic();
  if (f.degree() < 1) return false;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!mpz_divisible_p(c[i].get_mpz_t(), p.get_mpz_t())) return false;
  const Int p2 = p * p;
  return !mpz_divisible_p(c[0].get_mpz_t(), p2.get_mpz_t());
}

DedekindOutcome dedekind_test(const IntPoly& f, const Int& p) {
  if (!f.is_monic()) throw NonMonic();
  if (p >= Int(static_cast<unsigned long>(kMaxModulus))) throw ModulusTooLarge();
  const std::uint64_t q = p.get_ui();

  IntPoly radical{1}, cofactor{1};
  for (const auto& [fac, e] : factor_mod_p(ModPoly(q, f))) {
    const IntPoly lifted = fac.lift();
    radical = radical * lifted;
    if (e > 1) cofactor = cofactor * pow(lifted, e - 1);
  }
  IntPoly diff = radical * cofactor - f;
  std::vector<Int> c = diff.coeffs();
  for (Int& v : c) {
    if (!mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) throw InconsistencyError("Dedekind: g*h != f mod p");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  }
  const ModPoly big_f(q, IntPoly(std::move(c)));
  const ModPoly common = gcd(gcd(ModPoly(q, radical), ModPoly(q, cofactor)), big_f);

  DedekindOutcome out;
  out.prime = p;
  out.divides_index = common.degree() > 0;
  out.common_factor = common.lift();
  return out;
}

Factorization discriminant_factorization(const IntPoly& f, const Int& disc, const FactorBudget& budget) {
  if (auto g = sqrt_decompose(f); g && f.degree() >= 2 && g->degree() % 2 == 1 && g->constant() != 0) {
    const unsigned q = static_cast<unsigned>(g->degree());
    const Int dg = discriminant(*g);
    if (dg == 0) return factorize(disc, budget);
    Factorization core = factorize(dg, budget);
    for (auto& pp : core.factors) pp.exponent *= 2;
    core.cofactor *= core.cofactor;
    core.sign = -1;  // (-1)^q for odd q
    Factorization two;
    two.factors.push_back({Int(2), 2 * q});
    Factorization out = multiply(multiply(core, two), factorize(g->constant(), budget));
    if (out.value() == disc) return out;
  }
  return factorize(disc, budget);
}

MonogenicityReport is_monogenic(const IntPoly& f, const FactorBudget& budget) {
  if (!f.is_monic()) throw NonMonic();
  if (f.degree() < 1) throw ConstantPolynomial();
  MonogenicityReport report;
  report.disc = discriminant(f);
  if (report.disc == 0) throw ZeroDiscriminant();
  report.disc_factorization = discriminant_factorization(f, report.disc, budget);
  if (!is_irreducible(f)) {
    report.status = MonoStatus::reducible;
    return report;
  }

  bool undecided = false;
  for (const auto& pp : report.disc_factorization.factors) {
    if (pp.exponent < 2) continue;
    if (is_p_eisenstein(f, pp.prime)) {
      DedekindOutcome o;
      o.prime = pp.prime;
      o.by_eisenstein = true;
      report.per_prime.push_back(std::move(o));
      continue;
    }
    if (pp.prime >= Int(static_cast<unsigned long>(kMaxModulus))) {
      undecided = true;
      continue;
    }
    DedekindOutcome o = dedekind_test(f, pp.prime);
    const bool fails = o.divides_index;
    report.per_prime.push_back(std::move(o));
    if (fails) {
      report.status = MonoStatus::not_monogenic;
      report.failing_prime = pp.prime;
      return report;
    }
  }
  report.status = (undecided || !report.disc_factorization.complete()) ? MonoStatus::unknown : MonoStatus::monogenic;
  return report;
}

bool eisenstein_filter(const IntPoly& g, unsigned q) {
  if (!g.is_monic()) throw NonMonic();
  if (g.degree() != static_cast<int>(q)) throw DegreeMismatch("eisenstein_filter: degree of g must equal q");
  const Int a0 = g.constant();
  if (a0 == 0) return false;
  for (int i = 1; i < g.degree(); ++i)
    if (!mpz_divisible_p(g.coeffs()[static_cast<std::size_t>(i)].get_mpz_t(), a0.get_mpz_t())) return false;
  const Factorization fa = factorize(a0);
  for (const auto& pp : fa.factors) {
    if (pp.exponent > 1) return false;
    if (pp.prime != q && pp.prime % q != 1) return false;
  }
  // An unsplit cofactor is not ruled out.
  return true;
}

}  // namespace evenmono
