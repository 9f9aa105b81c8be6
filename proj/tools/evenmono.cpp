// evenmono: analyze, search, verify and cyclo subcommands.
// Exit codes: 0 success or PASS, 1 verification FAIL, 2 parse or usage
// error, 3 internal inconsistency.

#include <evenmono/cyclo.hpp>
#include <evenmono/errors.hpp>
#include <evenmono/hunt.hpp>
#include <evenmono/parse.hpp>
#include <evenmono/report.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace {

using namespace evenmono;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

std::array<long, 3> parse_triple(const std::string& text, const char* flag) {
  std::array<long, 3> out{};
  std::istringstream in(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(in, item, ',')) {
    if (i == 3) break;
    std::size_t used = 0;
    try {
      out[i] = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || out[i] < 0)
      throw CLI::ValidationError(flag, "expected three non-negative integers A,B,C");
    ++i;
  }
  if (i != 3 || !in.eof()) throw CLI::ValidationError(flag, "expected three non-negative integers A,B,C");
  return out;
}

// Writes through a temporary file in the target directory, then renames.
void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.parent_path() / ("." + target.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

struct AnalyzeArgs {
  std::string poly;
  bool json = false;
  unsigned cross_check = 200;
};

int cmd_analyze(const AnalyzeArgs& args) {
  const PolyExpr input = parse_poly(args.poly);
  ClassifyOptions options;
  options.cross_check_primes = args.cross_check;
  const ReportRecord r = analyze(input, options);
  std::cout << (args.json ? to_jsonl(r) + '\n' : to_text(r));
  return kOk;
}

struct SearchArgs {
  std::string box, shape, group, out, format = "jsonl";
  bool monogenic = false, eisenstein = false;
  unsigned jobs = 1, cross_check = 0;
};

int cmd_search(const SearchArgs& args) {
  SearchSpec spec;
  if (!args.box.empty()) {
    const auto [a, b, c] = parse_triple(args.box, "--box");
    spec.mode = SearchMode::coeff_box;
    spec.bounds = {IntRange{-a, a}, IntRange{-b, b}, IntRange{-c, c}};
  } else {
    const auto [m, n, c] = parse_triple(args.shape, "--shape");
    spec.mode = SearchMode::shape_params;
    spec.bounds = {IntRange{-m, m}, IntRange{-n, n}, IntRange{-c, c}};
  }
  if (!args.group.empty()) {
    const auto g = parse_group(args.group);
    if (!g) throw CLI::ValidationError("--group", "unknown group " + args.group);
    std::string name = to_string(*g);
    for (auto& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    spec.filters.push_back(name + "_only");
  }
  if (args.eisenstein) spec.filters.push_back("eisenstein_filter");
  if (args.monogenic) spec.filters.push_back("monogenic_only");
  spec.parallel_chunks = args.jobs;
  spec.cross_check_primes = args.cross_check;

  const auto hits = run_search(spec);
  std::string body;
  if (args.format == "csv") body += csv_header() + '\n';
  for (const auto& h : hits) {
    const ReportRecord r = record_from_hit(h);
    body += (args.format == "csv" ? to_csv(r) : to_jsonl(r)) + '\n';
  }
  if (args.out.empty()) {
    std::cout << body;
  } else {
    write_atomically(args.out, body);
  }
  std::cerr << hits.size() << " record(s)\n";
  return kOk;
}

struct VerifyArgs {
  std::string name;
  long bound = 0, max_b = 500, quintic_bound = 6;
  unsigned jobs = 1, frobenius_primes = 500;
};

int cmd_verify(const VerifyArgs& args) {
  VerificationReport r;
  if (args.name == "thm1.1") r = verify_thm_1_1(args.bound > 0 ? args.bound : 60, args.jobs);
  else if (args.name == "lem1.2") r = verify_lem_1_2(args.frobenius_primes);
  else if (args.name == "thm4.1") r = verify_thm_4_1(args.max_b);
  else if (args.name == "lem4.2") r = verify_lem_4_2(args.bound > 0 ? args.bound : 40, args.quintic_bound, args.jobs);
  else throw CLI::ValidationError("name", "expected thm1.1, lem1.2, thm4.1 or lem4.2");
  std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.summary << '\n';
  for (const auto& [key, value] : r.counts) std::cout << "  " << key << " = " << value << '\n';
  for (const auto& w : r.witnesses) std::cout << "  " << w << '\n';
  return r.passed ? kOk : kFail;
}

struct CycloArgs {
  unsigned d = 0;
  long shift = 0;
  bool negate = false;
};

int cmd_cyclo(const CycloArgs& args) {
  const IntPoly h = real_cyclotomic_minpoly(args.d);
  std::cout << shifted_variant(h, Int(args.shift), args.negate).to_string() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monogenicity and Galois groups of even integer polynomials"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one polynomial");
  analyze_cmd->add_option("poly", analyze_args.poly, "Polynomial, e.g. \"x^6-7x^4+14x^2-7\" or \"[1,0,6,0,5,0,1]\"")
      ->required();
  analyze_cmd->add_flag("--json", analyze_args.json, "Single-line structured record");
  analyze_cmd->add_option("--cross-check", analyze_args.cross_check, "Frobenius primes checked against the group")
      ->capture_default_str();

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Search even sextics x^6+ax^4+bx^2+c");
  auto* region = search_cmd->add_option_group("region", "Exactly one of --box or --shape");
  region->add_option("--box", search_args.box, "Coefficient box A,B,C: |a|<=A, |b|<=B, |c|<=C");
  region->add_option("--shape", search_args.shape, "Shape box M,N,C: |m|<=M, |n|<=N, |c|<=C, c | n^2");
  region->require_option(1);
  search_cmd->add_option("--group", search_args.group, "C6, S3, D6, A4, A4xC2, 6T7, 6T8 or S4xC2");
  search_cmd->add_flag("--monogenic", search_args.monogenic, "Keep monogenic polynomials only");
  search_cmd->add_flag("--eisenstein", search_args.eisenstein, "Prune with the a0 divisibility filter on the cubic");
  search_cmd->add_option("--jobs", search_args.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  search_cmd->add_option("--cross-check", search_args.cross_check, "Frobenius primes checked per hit")
      ->capture_default_str();
  search_cmd->add_option("--out", search_args.out, "Output file (written atomically)");
  search_cmd->add_option("--format", search_args.format, "jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->capture_default_str();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification: thm1.1, lem1.2, thm4.1, lem4.2");
  verify_cmd->add_option("name", verify_args.name, "Verification name")
      ->required()
      ->check(CLI::IsMember({"thm1.1", "lem1.2", "thm4.1", "lem4.2"}));
  verify_cmd->add_option("--bound", verify_args.bound, "Search bound (thm1.1: 60, lem4.2: 40)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-b", verify_args.max_b, "Largest b for thm4.1")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--quintic-bound", verify_args.quintic_bound, "Quintic core box for lem4.2")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--frobenius-primes", verify_args.frobenius_primes, "Primes sampled for lem1.2")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  CycloArgs cyclo_args;
  auto* cyclo_cmd = app.add_subcommand("cyclo", "Minimal polynomial of +-(zeta_d + zeta_d^-1) + shift");
  cyclo_cmd->add_option("--d", cyclo_args.d, "Conductor")->required();
  cyclo_cmd->add_option("--shift", cyclo_args.shift, "Shift t: +2, -2 or 0")
      ->check(CLI::IsMember({-2L, 0L, 2L}))
      ->capture_default_str();
  cyclo_cmd->add_flag("--negate", cyclo_args.negate, "Use t - alpha instead of alpha + t");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_args);
    if (*search_cmd) return cmd_search(search_args);
    if (*verify_cmd) return cmd_verify(verify_args);
    if (*cyclo_cmd) return cmd_cyclo(cyclo_args);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInternal;
  } catch (const DegenerateConductor& e) {
    std::cerr << "error DegenerateConductor: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
