#pragma once

// Analysis records and their line-delimited JSON, CSV and text encodings.
// Integers are written as decimal strings.

#include <evenmono/cyclo.hpp>
#include <evenmono/galois6.hpp>
#include <evenmono/hunt.hpp>
#include <evenmono/mono.hpp>
#include <evenmono/parse.hpp>

#include <optional>
#include <string>
#include <vector>

namespace evenmono {

struct ReportRecord {
  std::string text;
  IntPoly poly;
  Int disc;
  /// Absent when disc = 0.
  std::optional<Factorization> disc_factorization;
  bool irreducible = false;
  /// Present for irreducible x^6 + a x^4 + b x^2 + c.
  std::optional<GaloisLabel> galois;
  MonoStatus status = MonoStatus::unknown;
  std::optional<Int> failing_prime;
  /// Present for even sextics with c != 0 (possibly empty).
  std::optional<std::vector<D6Params>> shape_params;
  /// Matched core g with g(x^2) = f, for irreducible even f.
  std::optional<ShiftMatch> remark_match;
  std::optional<double> timing_ms;
};

/// Full analysis.  Throws NonMonic and ConstantPolynomial; timing_ms is
/// filled in.
ReportRecord analyze(const PolyExpr& input, const ClassifyOptions& options = {});

/// Record for a search hit; timing_ms stays empty.
ReportRecord record_from_hit(const SearchHit& hit);

/// One JSON object, no trailing newline.
std::string to_jsonl(const ReportRecord& r);
std::string csv_header();
std::string to_csv(const ReportRecord& r);
/// Multi-line human-readable form.
std::string to_text(const ReportRecord& r);

/// Field names of the structured encodings, in order.
const std::vector<std::string>& record_fields();

}  // namespace evenmono
