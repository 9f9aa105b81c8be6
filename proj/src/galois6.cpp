#include <evenmono/galois6.hpp>

#include <evenmono/errors.hpp>
#include <evenmono/factor.hpp>
#include <evenmono/modpoly.hpp>

#include <algorithm>
#include <array>
#include <map>

namespace evenmono {

Int D6Params::a() const {
  if (c == 0 || !mpz_divisible_p(Int(n * n).get_mpz_t(), c.get_mpz_t())) throw DivisibilityViolation();
  return n * n / c - 2 * m;
}

Int D6Params::b() const { return m * m - 2 * n; }

const char* to_string(GaloisGroup g) {
  switch (g) {
    case GaloisGroup::C6: return "C6";
    case GaloisGroup::S3: return "S3";
    case GaloisGroup::D6: return "D6";
    case GaloisGroup::A4: return "A4";
    case GaloisGroup::A4xC2: return "A4xC2";
    case GaloisGroup::S4_6T7: return "6T7";
    case GaloisGroup::S4_6T8: return "6T8";
    case GaloisGroup::S4xC2: return "S4xC2";
  }
  return "?";
}

const char* to_string(Certainty c) { return c == Certainty::proved ? "proved" : "sampled"; }

std::optional<GaloisGroup> parse_group(std::string_view name) {
  for (GaloisGroup g : kAllGroups)
    if (name == to_string(g)) return g;
  if (name == "S4_6T7") return GaloisGroup::S4_6T7;
  if (name == "S4_6T8") return GaloisGroup::S4_6T8;
  if (name == "6T11") return GaloisGroup::S4xC2;
  return std::nullopt;
}

IntPoly even_sextic(const Int& a, const Int& b, const Int& c) {
  return IntPoly(std::vector<Int>{c, 0, b, 0, a, 0, 1});
}

IntPoly cubic_core(const Int& a, const Int& b, const Int& c) { return IntPoly(std::vector<Int>{c, b, a, 1}); }

std::vector<D6Params> d6_shape(const Int& a, const Int& b, const Int& c) {
  if (c == 0) throw Error("d6_shape: c must be nonzero");
  const IntPoly quartic(std::vector<Int>{b * b - 4 * a * c, -8 * c, -2 * b, 0, 1});
  std::vector<Int> roots = integer_roots(quartic);
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::vector<D6Params> out;
  for (const Int& m : roots) {
    const Int diff = m * m - b;
    if (!mpz_even_p(diff.get_mpz_t())) continue;
    Int n = diff / 2;
    if (n * n != c * (a + 2 * m)) continue;
    out.push_back({m, std::move(n), c});
  }
  return out;
}

Int d_value(const D6Params& p) {
  const Int& m = p.m;
  const Int& n = p.n;
  const Int& c = p.c;
  return -(4 * m * m * m * c - m * m * n * n - 18 * m * n * c + 4 * n * n * n + 27 * c * c);
}

bool is_c6(const D6Params& p) {
  if (is_perfect_square(Int(-p.c))) return false;
  if (!integer_roots(cubic_core(p.a(), p.b(), p.c)).empty()) return false;
  return is_perfect_square(d_value(p)).has_value();
}

namespace {

CycleType cycle_type(const std::array<int, 6>& perm) {
  std::array<bool, 6> seen{};
  CycleType t;
  for (int i = 0; i < 6; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    unsigned len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

bool member(GaloisGroup g, unsigned v, bool odd_sigma) {
  const bool odd_weight = __builtin_popcount(v) % 2 == 1;
  const bool diagonal = v == 0 || v == 7;
  switch (g) {
    case GaloisGroup::S4xC2: return true;
    case GaloisGroup::S4_6T7: return !odd_weight;
    case GaloisGroup::S4_6T8: return odd_weight == odd_sigma;
    case GaloisGroup::A4xC2: return !odd_sigma;
    case GaloisGroup::A4: return !odd_sigma && !odd_weight;
    case GaloisGroup::D6: return diagonal;
    case GaloisGroup::C6: return diagonal && !odd_sigma;
    case GaloisGroup::S3: return diagonal && odd_weight == odd_sigma;
  }
  return false;
}

// Subgroups of C2 wr S3 acting on the six roots +-sqrt(r_i), point 2i+s.
// An element (v, sigma) sends (i, s) to (sigma(i), s xor v[sigma(i)]);
// membership is read off the sign of sigma and the parity of v.
std::map<GaloisGroup, std::set<CycleType>> build_cycle_tables() {
  std::array<std::array<int, 3>, 6> perms{};
  std::array<int, 3> base{0, 1, 2};
  for (auto& p : perms) {
    p = base;
    std::next_permutation(base.begin(), base.end());
  }
  std::map<GaloisGroup, std::set<CycleType>> tables;
  for (const auto& sigma : perms) {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)]) ++inversions;
    const bool odd_sigma = inversions % 2 == 1;
    for (unsigned v = 0; v < 8; ++v) {
      std::array<int, 6> perm{};
      for (int i = 0; i < 3; ++i) {
        const int target = sigma[static_cast<std::size_t>(i)];
        const int flip = static_cast<int>((v >> target) & 1u);
        for (int s = 0; s < 2; ++s) perm[static_cast<std::size_t>(2 * i + s)] = 2 * target + (s ^ flip);
      }
      const CycleType t = cycle_type(perm);
      for (GaloisGroup g : kAllGroups)
        if (member(g, v, odd_sigma)) tables[g].insert(t);
    }
  }
  return tables;
}

bool nonzero_square(const Int& v) { return v != 0 && is_perfect_square(v).has_value(); }

}  // namespace

const std::set<CycleType>& cycle_types(GaloisGroup g) {
  static const auto tables = build_cycle_tables();
  return tables.at(g);
}

std::vector<CycleType> frobenius_samples(const IntPoly& f, unsigned count) {
  if (discriminant(f) == 0) throw ZeroDiscriminant();
  std::vector<CycleType> out;
  out.reserve(count);
  for (std::uint64_t p = 2; out.size() < count; p = next_prime(p)) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    const ModPoly fp(p, f);
    if (!is_squarefree(fp)) continue;
    out.push_back(factor_degrees(fp));
  }
  return out;
}

GaloisLabel classify(const Int& a, const Int& b, const Int& c, const ClassifyOptions& options) {
  if (c == 0) throw ReducibleInput();
  const IntPoly f = even_sextic(a, b, c);
  if (!options.assume_irreducible && !is_irreducible(f)) throw ReducibleInput();

  const Int dg = discriminant(cubic_core(a, b, c));
  const Int minus_c = -c;
  GaloisLabel label;
  const auto shapes = d6_shape(a, b, c);
  if (!shapes.empty()) {
    const bool c6 = is_c6(shapes.front());
    for (const auto& s : shapes)
      if (is_c6(s) != c6) throw InconsistencyError("D6 shape representations disagree on C6");
    if (c6)
      label.group = GaloisGroup::C6;
    else if (nonzero_square(minus_c * dg))
      label.group = GaloisGroup::S3;
    else
      label.group = GaloisGroup::D6;
  } else if (is_perfect_square(dg)) {
    // Delta(f) = -64 c Delta(g)^2.
    label.group = is_perfect_square(minus_c) ? GaloisGroup::A4 : GaloisGroup::A4xC2;
  } else if (nonzero_square(minus_c * dg)) {
    label.group = GaloisGroup::S4_6T8;
  } else if (is_perfect_square(minus_c)) {
    label.group = GaloisGroup::S4_6T7;
  } else {
    label.group = GaloisGroup::S4xC2;
  }

  if (options.cross_check_primes > 0) {
    const auto& allowed = cycle_types(label.group);
    for (const auto& t : frobenius_samples(f, options.cross_check_primes)) {
      if (!allowed.count(t))
        throw InconsistencyError(std::string("Frobenius cycle type not realizable in ") + to_string(label.group));
    }
  }
  return label;
}

}  // namespace evenmono
