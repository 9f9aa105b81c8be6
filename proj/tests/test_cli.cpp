#include <doctest.h>

#include "oracles.hpp"

#include <evenmono/errors.hpp>
#include <evenmono/parse.hpp>
#include <evenmono/report.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace evenmono;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(EVENMONO_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("parse_poly examples") {
  CHECK(parse_poly("x^6+5x^4+6x^2+1").poly == IntPoly{1, 0, 6, 0, 5, 0, 1});
  CHECK(parse_poly("[1,0,6,0,5,0,1]").poly == IntPoly{1, 0, 6, 0, 5, 0, 1});
  CHECK(parse_poly("x^2+x^2").poly == IntPoly{0, 0, 2});
  CHECK(parse_poly(" - 3 * x ^ 2 + x - 7 ").poly == IntPoly{-7, 1, -3});
  CHECK(parse_poly("[ -1 , +2 ]").poly == IntPoly{-1, 2});
  CHECK(parse_poly("5").poly == IntPoly{5});
  CHECK(parse_poly("x-x").poly.is_zero());
  CHECK(parse_poly("2x^0+X").poly == IntPoly{2, 1});
  CHECK(parse_poly("123456789012345678901234567890x").poly.coeff(1) == Int("123456789012345678901234567890"));
}

TEST_CASE("parse errors carry byte offsets") {
  auto offset = [](const char* text) -> long {
    try {
      parse_poly(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(offset("") == 0);
  CHECK(offset("x^") == 2);
  CHECK(offset("x^6+") == 4);
  CHECK(offset("3*") == 2);
  CHECK(offset("x y") == 2);
  CHECK(offset("[1,2") == 4);
  CHECK(offset("[1,,2]") == 3);
  CHECK(offset("[1] x") == 4);
  CHECK(offset("x^6++1") == 4);
  CHECK(offset("y") == 0);
}

TEST_CASE("render and parse round-trip") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 10000; ++trial) {
    const int degree = static_cast<int>(rng() % 23);
    IntPoly p = oracle::random_poly(rng, degree, 1'000'000'000, false);
    if (trial % 4 == 0) {
      // sparse: zero out most coefficients
      std::vector<Int> c = p.coeffs();
      for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (rng() % 3) c[i] = 0;
      p = IntPoly(std::move(c));
    }
    CHECK(parse_poly(p.to_string()).poly == p);
  }
}

TEST_CASE("analyze examples") {
  const auto r = analyze(parse_poly("x^6-7x^4+14x^2-7"));
  CHECK(r.status == MonoStatus::monogenic);
  REQUIRE(r.galois);
  CHECK(r.galois->group == GaloisGroup::C6);
  CHECK(r.galois->certainty == Certainty::proved);

  const auto n = analyze(parse_poly("x^6+21x^4+35x^2+7"));
  CHECK(n.status == MonoStatus::not_monogenic);
  CHECK(n.failing_prime == Int(2));
  CHECK(n.galois->group == GaloisGroup::C6);

  const auto q = analyze(parse_poly("x^2+1"));
  CHECK_FALSE(q.galois);
  CHECK(q.status == MonoStatus::monogenic);

  CHECK(analyze(parse_poly("x^3-x")).status == MonoStatus::reducible);
  CHECK(analyze(parse_poly("x^2+2x+1")).status == MonoStatus::reducible);
  CHECK_THROWS_AS(analyze(parse_poly("2x^2+1")), NonMonic);
  CHECK_THROWS_AS(analyze(parse_poly("7")), ConstantPolynomial);
}

TEST_CASE("records keep the fixed schema") {
  using json = nlohmann::json;
  for (const char* text : {"x^6-7x^4+14x^2-7", "x^2+1", "x^3-x", "x^6+9x^4+10x^2+10", "x^5-x-1"}) {
    const ReportRecord r = analyze(parse_poly(text));
    const json j = json::parse(to_jsonl(r));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys.size() == record_fields().size());
    for (const auto& f : record_fields()) CHECK(j.contains(f));
    CHECK(j["disc"].is_string());
    CHECK(j["input"]["coeffs"].size() == r.poly.coeffs().size());
    for (std::size_t i = 0; i < r.poly.coeffs().size(); ++i)
      CHECK(j["input"]["coeffs"][i].get<std::string>() == r.poly.coeffs()[i].get_str());
    CHECK(j["monogenic"].contains("status"));
    CHECK(j["monogenic"].contains("failing_prime"));
    CHECK(to_jsonl(r).find('\n') == std::string::npos);
  }
  CHECK(csv_header().find("input_text,coeffs,degree,disc,") == 0);
}

TEST_CASE("cli analyze and cyclo") {
  auto r = run_cli("analyze \"x^6-7x^4+14x^2-7\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("monogenic: Monogenic") != std::string::npos);
  CHECK(r.out.find("galois: C6/proved") != std::string::npos);

  r = run_cli("analyze --json \"x^6+21x^4+35x^2+7\"");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["monogenic"]["status"] == "NotMonogenic");
  CHECK(j["monogenic"]["failing_prime"] == "2");

  CHECK(run_cli("analyze \"x^6+\"").code == 2);
  CHECK(run_cli("analyze \"2x+1\"").code == 2);
  CHECK(run_cli("bogus").code == 2);

  r = run_cli("cyclo --d 7 --shift +2 --negate");
  CHECK(r.code == 0);
  CHECK(r.out == "x^3-7x^2+14x-7\n");
  CHECK(run_cli("cyclo --d 5 --shift 0").out == "x^2+x-1\n");
  CHECK(run_cli("cyclo --d 2").code == 2);
}

TEST_CASE("cli search output") {
  auto r = run_cli("search --box 15,15,15 --group C6 --monogenic");
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 6);
  r = run_cli("search --shape 10,10,10 --group C6 --monogenic");
  CHECK(lines(r.out).size() == 6);
  r = run_cli("search --box 10,10,10 --group S3 --monogenic");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  r = run_cli("search --box 15,15,15 --group C6 --monogenic --format csv");
  CHECK(lines(r.out).size() == 7);
  CHECK(lines(r.out).front() == csv_header());
  CHECK(run_cli("search --box 1,2 --group C6").code == 2);
  CHECK(run_cli("search --group C6").code == 2);
  CHECK(run_cli("search --box 3,3,3 --shape 3,3,3").code == 2);
  CHECK(run_cli("search --box 3,3,3 --group C7").code == 2);
}

TEST_CASE("cli search is byte-identical across worker counts") {
  const auto one = run_cli("search --box 12,12,12 --group D6 --jobs 1");
  const auto eight = run_cli("search --box 12,12,12 --group D6 --jobs 8");
  CHECK(one.code == 0);
  CHECK_FALSE(one.out.empty());
  CHECK(one.out == eight.out);
}

TEST_CASE("cli --out writes atomically") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("evenmono_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path out = dir / "hits.jsonl";
  {
    std::ofstream(out) << "stale\n";
  }
  const auto r = run_cli("search --box 15,15,15 --group C6 --monogenic --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(lines(content.str()).size() == 6);
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  fs::remove_all(dir);
}

TEST_CASE("cli verify exit codes") {
  auto r = run_cli("verify thm4.1 --max-b 200");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS thm4.1", 0) == 0);
  r = run_cli("verify thm4.1 --max-b 1");
  CHECK(r.code == 1);
  CHECK(r.out.rfind("FAIL thm4.1", 0) == 0);
  CHECK(run_cli("verify lem1.2").code == 0);
  CHECK(run_cli("verify nothing").code == 2);
}
