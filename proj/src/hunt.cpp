#include <evenmono/hunt.hpp>

#include <evenmono/cyclo.hpp>
#include <evenmono/errors.hpp>
#include <evenmono/factor.hpp>
#include <evenmono/modpoly.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace evenmono {

IntPoly family_c6(const Int& m, const Int& n, const Int& c) {
  const D6Params p{m, n, c};
  return even_sextic(p.a(), p.b(), c);
}

IntPoly family_m0(const Int& k, const Int& c) { return even_sextic(k * k * c, -2 * k * c, c); }

Int family_m0_disc(const Int& k, const Int& c) {
  const Int t = 4 * k * k * k * c + 27;
  Int c5;
  mpz_pow_ui(c5.get_mpz_t(), c.get_mpz_t(), 5);
  return -64 * c5 * t * t;
}

IntPoly family_n0(const Int& j, const Int& c) { return even_sextic(-2 * j * c, j * j * c * c, c); }

Int family_n0_disc(const Int& j, const Int& c) {
  const Int t = 4 * j * j * j * c * c + 27;
  Int c5;
  mpz_pow_ui(c5.get_mpz_t(), c.get_mpz_t(), 5);
  return -64 * c5 * t * t;
}

Int d_tilde(const Int& j, const Int& k, const Int& c) {
  return 4 * j * j * j * c * c - j * j * k * k * c * c - 18 * j * k * c + 4 * k * k * k * c + 27;
}

Int multiple_shape_disc(const Int& j, const Int& k, const Int& c) {
  const Int u = j * k * c - 1;
  const Int d = d_tilde(j, k, c);
  Int c5;
  mpz_pow_ui(c5.get_mpz_t(), c.get_mpz_t(), 5);
  return -64 * c5 * u * u * u * u * d * d;
}

IntPoly family_6t8(const Int& b) { return even_sextic(9, b, b); }

bool family_6t8_qualifies(const Int& b) {
  if (b == 0 || mpz_fdiv_ui(b.get_mpz_t(), 4) != 2) return false;
  return is_squarefree(Int(b * (b - 27))) == Tristate::yes;
}

const std::vector<std::string>& registered_filters() {
  static const std::vector<std::string> names{"c6_only",    "s3_only",    "d6_only",        "a4_only",
                                              "a4xc2_only", "6t7_only",   "6t8_only",       "s4xc2_only",
                                              "monogenic_only", "eisenstein_filter", "irreducible"};
  return names;
}

SearchSpec box_spec(long bound, std::vector<std::string> filters, unsigned jobs) {
  SearchSpec s;
  s.mode = SearchMode::coeff_box;
  s.bounds = {IntRange{-bound, bound}, IntRange{-bound, bound}, IntRange{-bound, bound}};
  s.filters = std::move(filters);
  s.parallel_chunks = jobs;
  return s;
}

SearchSpec shape_spec(long bound, long c_bound, std::vector<std::string> filters, unsigned jobs) {
  SearchSpec s;
  s.mode = SearchMode::shape_params;
  s.bounds = {IntRange{-bound, bound}, IntRange{-bound, bound}, IntRange{-c_bound, c_bound}};
  s.filters = std::move(filters);
  s.parallel_chunks = jobs;
  return s;
}

void validate(const SearchSpec& spec) {
  for (const auto& r : spec.bounds)
    if (r.lo > r.hi) throw Error("search: empty range");
  if (spec.parallel_chunks == 0) throw Error("search: parallel_chunks must be positive");
  const auto& known = registered_filters();
  for (const auto& f : spec.filters)
    if (std::find(known.begin(), known.end(), f) == known.end()) throw Error("search: unknown filter '" + f + "'");
}

namespace {

struct Squares {
  bool dg, minus_c, minus_c_dg;
  friend bool operator==(const Squares&, const Squares&) = default;
};

// Which of Delta(g), -c, -c Delta(g) are squares for each group.
Squares signature(GaloisGroup g) {
  switch (g) {
    case GaloisGroup::C6: return {true, false, false};
    case GaloisGroup::S3: return {false, false, true};
    case GaloisGroup::D6: return {false, false, false};
    case GaloisGroup::A4: return {true, true, true};
    case GaloisGroup::A4xC2: return {true, false, false};
    case GaloisGroup::S4_6T7: return {false, true, false};
    case GaloisGroup::S4_6T8: return {false, false, true};
    case GaloisGroup::S4xC2: return {false, false, false};
  }
  return {false, false, false};
}

bool has_shape(GaloisGroup g) { return g == GaloisGroup::C6 || g == GaloisGroup::S3 || g == GaloisGroup::D6; }

bool square(const Int& v) { return is_perfect_square(v).has_value(); }

struct Pipeline {
  std::optional<GaloisGroup> group;
  bool group_conflict = false;
  bool monogenic_only = false;
  bool eisenstein = false;
  ClassifyOptions classify_options;

  explicit Pipeline(const SearchSpec& spec) {
    for (const auto& name : spec.filters) {
      if (name == "monogenic_only") {
        monogenic_only = true;
      } else if (name == "eisenstein_filter") {
        eisenstein = true;
      } else if (name.size() > 5 && name.ends_with("_only")) {
        std::string label = name.substr(0, name.size() - 5);
        for (GaloisGroup g : kAllGroups) {
          std::string canon = to_string(g);
          std::transform(canon.begin(), canon.end(), canon.begin(), [](unsigned char ch) { return std::tolower(ch); });
          if (canon != label) continue;
          if (group && *group != g) group_conflict = true;
          group = g;
        }
      }
    }
    classify_options.cross_check_primes = spec.cross_check_primes;
    classify_options.assume_irreducible = true;
  }

  std::optional<SearchHit> run(const Int& a, const Int& b, const Int& c) const {
    if (group_conflict || c == 0) return std::nullopt;
    const Int dg = a * a * b * b - 4 * b * b * b - 4 * a * a * a * c + 18 * a * b * c - 27 * c * c;
    if (dg == 0) return std::nullopt;
    if (group) {
      const Squares s{square(dg), square(Int(-c)), square(Int(-c * dg))};
      if (!(s == signature(*group))) return std::nullopt;
    }
    if (eisenstein && !eisenstein_filter(cubic_core(a, b, c), 3)) return std::nullopt;
    std::vector<D6Params> shapes = d6_shape(a, b, c);
    if (group && has_shape(*group) == shapes.empty()) return std::nullopt;
    const IntPoly f = even_sextic(a, b, c);
    if (!is_irreducible(f)) return std::nullopt;
    GaloisLabel label = classify(a, b, c, classify_options);
    if (group && label.group != *group) return std::nullopt;
    MonogenicityReport report = is_monogenic(f);
    if (monogenic_only && report.status != MonoStatus::monogenic) return std::nullopt;
    return SearchHit{a, b, c, std::move(shapes), label, std::move(report)};
  }
};

// Runs work(i) for i in [0, count) on `workers` threads, collecting hits.
std::vector<SearchHit> parallel_collect(std::size_t count, unsigned workers,
                                        const std::function<void(std::size_t, std::vector<SearchHit>&)>& work) {
  std::atomic<std::size_t> next{0};
  std::vector<std::vector<SearchHit>> partial(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&](unsigned w) {
    try {
      for (std::size_t i = next++; i < count; i = next++) work(i, partial[w]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(body, w);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<SearchHit> out;
  for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<SearchHit> run_search(const SearchSpec& spec) {
  validate(spec);
  const Pipeline pipeline(spec);
  const auto& [r0, r1, r2] = spec.bounds;
  std::vector<SearchHit> hits;
  if (spec.mode == SearchMode::coeff_box) {
    const auto count = static_cast<std::size_t>(r0.hi - r0.lo + 1);
    hits = parallel_collect(count, spec.parallel_chunks, [&](std::size_t i, std::vector<SearchHit>& out) {
      const Int a = r0.lo + static_cast<long>(i);
      for (long b = r1.lo; b <= r1.hi; ++b)
        for (long c = r2.lo; c <= r2.hi; ++c)
          if (auto hit = pipeline.run(a, Int(b), Int(c))) out.push_back(std::move(*hit));
    });
  } else {
    std::set<std::tuple<Int, Int, Int>> unique;
    for (long m = r0.lo; m <= r0.hi; ++m) {
      for (long n = r1.lo; n <= r1.hi; ++n) {
        const Int n2 = Int(n) * n;
        for (long c = r2.lo; c <= r2.hi; ++c) {
          if (c == 0 || !mpz_divisible_p(n2.get_mpz_t(), Int(c).get_mpz_t())) continue;
          const D6Params p{m, n, c};
          unique.emplace(p.a(), p.b(), Int(c));
        }
      }
    }
    const std::vector<std::tuple<Int, Int, Int>> triples(unique.begin(), unique.end());
    constexpr std::size_t block = 256;
    const std::size_t blocks = (triples.size() + block - 1) / block;
    hits = parallel_collect(blocks, spec.parallel_chunks, [&](std::size_t i, std::vector<SearchHit>& out) {
      const std::size_t end = std::min(triples.size(), (i + 1) * block);
      for (std::size_t t = i * block; t < end; ++t) {
        const auto& [a, b, c] = triples[t];
        if (auto hit = pipeline.run(a, b, c)) out.push_back(std::move(*hit));
      }
    });
  }
  std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  });
  hits.erase(std::unique(hits.begin(), hits.end(),
                         [](const SearchHit& x, const SearchHit& y) {
                           return x.a == y.a && x.b == y.b && x.c == y.c;
                         }),
             hits.end());
  return hits;
}

const std::vector<std::array<long, 3>>& c6_monogenic_triples() {
  static const std::vector<std::array<long, 3>> triples{{-7, 14, -7}, {-6, 9, -3}, {5, 6, 1},
                                                        {6, 5, 1},    {6, 9, 1},   {9, 6, 1}};
  return triples;
}

const std::vector<IntPoly>& cyclic_even_list() {
  static const std::vector<IntPoly> list = [] {
    const std::vector<IntPoly> cores{
        IntPoly{1, 15, 35, 28, 9, 1},
        IntPoly{-11, 55, -77, 44, -11, 1},
        IntPoly{1, 9, 28, 35, 15, 1},
        IntPoly{1, 66, 715, 3003, 6435, 8008, 6188, 3060, 969, 190, 21, 1},
        IntPoly{-23, 506, -3289, 9867, -16445, 16744, -10948, 4692, -1311, 230, -23, 1},
        IntPoly{1, 21, 190, 969, 3060, 6188, 8008, 6435, 3003, 715, 66, 1},
    };
    std::vector<IntPoly> out;
    for (const auto& g : cores) out.push_back(compose_power(g, 2));
    return out;
  }();
  return list;
}

namespace {

std::string triple_text(const Int& a, const Int& b, const Int& c) {
  return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

std::string hits_text(const std::vector<SearchHit>& hits) {
  std::string s;
  for (const auto& h : hits) s += (s.empty() ? "" : " ") + triple_text(h.a, h.b, h.c);
  return s.empty() ? "none" : s;
}

bool matches_expected(const std::vector<SearchHit>& hits) {
  const auto& expected = c6_monogenic_triples();
  if (hits.size() != expected.size()) return false;
  for (std::size_t i = 0; i < hits.size(); ++i)
    if (hits[i].a != expected[i][0] || hits[i].b != expected[i][1] || hits[i].c != expected[i][2]) return false;
  return true;
}

bool in_dichotomy(const D6Params& s) {
  if (s.m * s.n == 0) return mpz_fdiv_ui(s.c.get_mpz_t(), 4) == 1;
  return s.c == 1 && ((s.m == -1 && s.n == -2) || (s.m == -2 && s.n == -1));
}

}  // namespace

VerificationReport verify_thm_1_1(long bound, unsigned jobs) {
  if (bound <= 0) throw Error("verify_thm_1_1: bound must be positive");
  VerificationReport r;
  r.name = "thm1.1";
  const std::vector<std::string> filters{"c6_only", "monogenic_only"};
  const auto box = run_search(box_spec(bound, filters, jobs));
  const auto shape = run_search(shape_spec(bound, bound, filters, jobs));
  r.counts["box_hits"] = static_cast<long>(box.size());
  r.counts["shape_hits"] = static_cast<long>(shape.size());
  bool ok = matches_expected(box) && matches_expected(shape);
  r.witnesses.push_back("box: " + hits_text(box));
  r.witnesses.push_back("shape: " + hits_text(shape));

  long closed_form_checked = 0;
  for (const auto& h : box) {
    bool dichotomy = false;
    for (const auto& s : h.shapes) {
      dichotomy = dichotomy || in_dichotomy(s);
      if (!mpz_divisible_p(s.m.get_mpz_t(), s.c.get_mpz_t()) || !mpz_divisible_p(s.n.get_mpz_t(), s.c.get_mpz_t()))
        continue;
      ++closed_form_checked;
      if (multiple_shape_disc(Int(s.m / s.c), Int(s.n / s.c), s.c) != h.report.disc) {
        ok = false;
        r.witnesses.push_back("discriminant identity fails at " + triple_text(h.a, h.b, h.c));
      }
    }
    if (!dichotomy) {
      ok = false;
      r.witnesses.push_back("no shape in the dichotomy at " + triple_text(h.a, h.b, h.c));
    }
  }
  r.counts["closed_form_checked"] = closed_form_checked;
  r.passed = ok;
  r.summary = "box and shape searches at bound " + std::to_string(bound) + ": " + std::to_string(box.size()) +
              " and " + std::to_string(shape.size()) + " monogenic C6 triples";
  return r;
}

VerificationReport verify_lem_1_2(unsigned frobenius_primes) {
  VerificationReport r;
  r.name = "lem1.2";
  bool ok = true;
  long monogenic = 0, matched = 0, cycles = 0;
  for (const IntPoly& f : cyclic_even_list()) {
    const IntPoly g = *sqrt_decompose(f);
    const auto q = static_cast<unsigned>(g.degree());
    const bool irreducible = is_irreducible(f);
    const MonogenicityReport rep = is_monogenic(f);
    const auto match = match_remark(g);
    bool cycle = false;
    for (const auto& t : frobenius_samples(f, frobenius_primes)) {
      if (t == CycleType{2 * q}) {
        cycle = true;
        break;
      }
    }
    monogenic += rep.status == MonoStatus::monogenic;
    matched += match.has_value();
    cycles += cycle;
    std::ostringstream line;
    line << f.to_string() << ": irreducible=" << irreducible << " monogenic=" << to_string(rep.status);
    if (match) line << " match=(d=" << match->d << ",sign=" << match->sign << ",mirror=" << match->mirror << ")";
    else line << " match=none";
    line << " full_cycle=" << cycle;
    r.witnesses.push_back(line.str());
    ok = ok && irreducible && rep.status == MonoStatus::monogenic && match && cycle;
  }
  r.counts["polynomials"] = static_cast<long>(cyclic_even_list().size());
  r.counts["monogenic"] = monogenic;
  r.counts["remark_matches"] = matched;
  r.counts["full_cycles"] = cycles;
  r.passed = ok;
  r.summary = std::to_string(monogenic) + " of " + std::to_string(cyclic_even_list().size()) +
              " listed polynomials monogenic; cyclicity sampled";
  return r;
}

VerificationReport verify_thm_4_1(long max_b) {
  if (max_b <= 0) throw Error("verify_thm_4_1: max_b must be positive");
  VerificationReport r;
  r.name = "thm4.1";
  bool ok = true;
  long qualifying = 0;
  for (long b = 2; b <= max_b; b += 4) {
    if (!family_6t8_qualifies(b)) continue;
    ++qualifying;
    const MonogenicityReport rep = is_monogenic(family_6t8(b));
    const GaloisLabel label = classify(9, b, b, {.cross_check_primes = 0});
    if (rep.status != MonoStatus::monogenic || label.group != GaloisGroup::S4_6T8) {
      ok = false;
      r.witnesses.push_back("b=" + std::to_string(b) + ": " + to_string(rep.status) + " " + to_string(label.group));
    }
  }
  r.counts["qualifying_b"] = qualifying;
  r.passed = ok && qualifying > 0;
  r.summary = std::to_string(qualifying) + " qualifying b <= " + std::to_string(max_b) +
              (ok ? ", all monogenic with group 6T8" : ", failures listed");
  return r;
}

namespace {

const std::set<CycleType> kDihedralOnFive{{1, 1, 1, 1, 1}, {1, 2, 2}, {5}};
const std::set<CycleType> kDihedralRegular{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 2}, {5, 5}};

// Frobenius patterns over the first `count` odd primes with a squarefree
// reduction all lie in `allowed`.  False when f has a repeated root.
bool patterns_within(const IntPoly& f, const std::set<CycleType>& allowed, unsigned count) {
  if (discriminant(f) == 0) return false;
  unsigned seen = 0;
  for (std::uint64_t p = 3; seen < count; p = next_prime(p)) {
    const ModPoly fp(p, f);
    if (!is_squarefree(fp)) continue;
    ++seen;
    if (!allowed.count(factor_degrees(fp))) return false;
  }
  return true;
}

}  // namespace

bool dihedral_decic_screen(const IntPoly& g) {
  if (g.degree() != 5 || !g.is_monic()) throw DegreeMismatch("dihedral_decic_screen: g must be a monic quintic");
  return patterns_within(g, kDihedralOnFive, 12) && patterns_within(compose_power(g, 2), kDihedralRegular, 30);
}

VerificationReport verify_lem_4_2(long bound, long quintic_bound, unsigned jobs) {
  if (bound <= 0 || quintic_bound <= 0) throw Error("verify_lem_4_2: bounds must be positive");
  VerificationReport r;
  r.name = "lem4.2";
  bool ok = true;

  const auto s3 = run_search(box_spec(bound, {"s3_only"}, jobs));
  long s3_monogenic = 0;
  for (const auto& h : s3) {
    if (h.report.status == MonoStatus::not_monogenic) continue;
    ok = false;
    if (h.report.status == MonoStatus::monogenic) ++s3_monogenic;
    r.witnesses.push_back("S3 " + triple_text(h.a, h.b, h.c) + ": " + to_string(h.report.status));
  }
  r.counts["s3_sextics"] = static_cast<long>(s3.size());
  r.counts["s3_monogenic"] = s3_monogenic;

  // Quintic cores g with |coefficients| <= quintic_bound and g(0) != 0.
  const long qb = quintic_bound;
  struct Survivor {
    IntPoly f;
    MonoStatus status;
  };
  std::vector<std::vector<Survivor>> partial(jobs);
  std::atomic<long> next{-qb};
  std::atomic<long> dihedral_cores{0};
  auto body = [&](unsigned w) {
    for (long a4 = next++; a4 <= qb; a4 = next++) {
      for (long a3 = -qb; a3 <= qb; ++a3)
        for (long a2 = -qb; a2 <= qb; ++a2)
          for (long a1 = -qb; a1 <= qb; ++a1)
            for (long a0 = -qb; a0 <= qb; ++a0) {
              if (a0 == 0) continue;
              const IntPoly g{a0, a1, a2, a3, a4, 1};
              if (!patterns_within(g, kDihedralOnFive, 12) || !is_irreducible(g)) continue;
              ++dihedral_cores;
              const IntPoly f = compose_power(g, 2);
              if (!patterns_within(f, kDihedralRegular, 30) || !is_irreducible(f)) continue;
              partial[w].push_back({f, is_monogenic(f).status});
            }
    }
  };
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(body, w);
  }
  std::vector<Survivor> survivors;
  for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(survivors));
  std::sort(survivors.begin(), survivors.end(), [](const Survivor& x, const Survivor& y) { return x.f < y.f; });
  long quintic_monogenic = 0, quintic_unknown = 0;
  for (const auto& s : survivors) {
    if (s.status == MonoStatus::not_monogenic) continue;
    ok = false;
    (s.status == MonoStatus::monogenic ? quintic_monogenic : quintic_unknown) += 1;
    r.witnesses.push_back("degree 10 " + s.f.to_string() + ": " + to_string(s.status));
  }
  r.counts["dihedral_quintic_cores"] = dihedral_cores;
  r.counts["dihedral_decics"] = static_cast<long>(survivors.size());
  r.counts["dihedral_monogenic"] = quintic_monogenic;
  r.counts["dihedral_unknown"] = quintic_unknown;
  r.passed = ok;
  r.summary = std::to_string(s3.size()) + " S3 sextics in box " + std::to_string(bound) + ", " +
              std::to_string(s3_monogenic) + " monogenic; " + std::to_string(survivors.size()) +
              " dihedral decics in quintic box " + std::to_string(quintic_bound) + ", " +
              std::to_string(quintic_monogenic) + " monogenic";
  return r;
}

}  // namespace evenmono
