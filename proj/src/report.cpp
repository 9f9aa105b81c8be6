#include <evenmono/report.hpp>

#include <evenmono/errors.hpp>
#include <evenmono/factor.hpp>

#include <chrono>
#include <json.hpp>
#include <sstream>

namespace evenmono {

namespace {

using json = nlohmann::ordered_json;

bool is_even_sextic(const IntPoly& f) {
  if (f.degree() != 6 || !f.is_monic()) return false;
  for (int i = 1; i < 6; i += 2)
    if (f.coeff(static_cast<std::size_t>(i)) != 0) return false;
  return true;
}

void fill_remark(ReportRecord& r) {
  if (!r.irreducible) return;
  if (auto g = sqrt_decompose(r.poly); g && g->degree() >= 1) r.remark_match = match_remark(*g);
}

json factorization_json(const Factorization& f) {
  json factors = json::array();
  for (const auto& pp : f.factors) factors.push_back({{"p", pp.prime.get_str()}, {"e", pp.exponent}});
  return {{"sign", f.sign}, {"factors", factors}, {"cofactor", f.cofactor.get_str()}};
}

json shapes_json(const std::vector<D6Params>& shapes) {
  json out = json::array();
  for (const auto& s : shapes) out.push_back({{"m", s.m.get_str()}, {"n", s.n.get_str()}, {"c", s.c.get_str()}});
  return out;
}

std::string shapes_text(const std::vector<D6Params>& shapes) {
  std::string s;
  for (const auto& p : shapes) {
    if (!s.empty()) s += ';';
    s += p.m.get_str() + ':' + p.n.get_str() + ':' + p.c.get_str();
  }
  return s;
}

std::string coeffs_text(const IntPoly& f, char sep) {
  std::string s;
  for (const auto& c : f.coeffs()) {
    if (!s.empty()) s += sep;
    s += c.get_str();
  }
  return s;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

ReportRecord analyze(const PolyExpr& input, const ClassifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const IntPoly& f = input.poly;
  if (f.degree() < 1) throw ConstantPolynomial();
  if (!f.is_monic()) throw NonMonic();

  ReportRecord r;
  r.text = input.text;
  r.poly = f;
  r.disc = discriminant(f);
  r.irreducible = is_irreducible(f);
  if (r.disc == 0) {
    r.status = MonoStatus::reducible;
  } else {
    const MonogenicityReport mono = is_monogenic(f);
    r.disc_factorization = mono.disc_factorization;
    r.status = mono.status;
    r.failing_prime = mono.failing_prime;
  }
  if (is_even_sextic(f) && f.constant() != 0) {
    const Int &a = f.coeff(4), &b = f.coeff(2), &c = f.coeff(0);
    r.shape_params = d6_shape(a, b, c);
    if (r.irreducible) r.galois = classify(a, b, c, {options.cross_check_primes, true});
  }
  fill_remark(r);
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ReportRecord record_from_hit(const SearchHit& hit) {
  ReportRecord r;
  r.poly = even_sextic(hit.a, hit.b, hit.c);
  r.text = r.poly.to_string();
  r.disc = hit.report.disc;
  r.disc_factorization = hit.report.disc_factorization;
  r.irreducible = true;
  r.galois = hit.label;
  r.status = hit.report.status;
  r.failing_prime = hit.report.failing_prime;
  r.shape_params = hit.shapes;
  fill_remark(r);
  return r;
}

const std::vector<std::string>& record_fields() {
  static const std::vector<std::string> fields{"input",     "degree",    "disc",         "disc_factorization",
                                               "irreducible", "galois",  "monogenic",    "shape_params",
                                               "remark_match", "timing_ms"};
  return fields;
}

std::string to_jsonl(const ReportRecord& r) {
  json coeffs = json::array();
  for (const auto& c : r.poly.coeffs()) coeffs.push_back(c.get_str());
  json j = json::object();
  j["input"] = {{"text", r.text}, {"coeffs", coeffs}};
  j["degree"] = r.poly.degree();
  j["disc"] = r.disc.get_str();
  j["disc_factorization"] = r.disc_factorization ? factorization_json(*r.disc_factorization) : json(nullptr);
  j["irreducible"] = r.irreducible;
  j["galois"] = r.galois ? json{{"group", to_string(r.galois->group)}, {"certainty", to_string(r.galois->certainty)}}
                         : json(nullptr);
  j["monogenic"] = {{"status", to_string(r.status)},
                    {"failing_prime", r.failing_prime ? json(r.failing_prime->get_str()) : json(nullptr)}};
  j["shape_params"] = r.shape_params ? shapes_json(*r.shape_params) : json(nullptr);
  j["remark_match"] = r.remark_match ? json{{"d", r.remark_match->d},
                                            {"sign", r.remark_match->sign},
                                            {"mirror", r.remark_match->mirror}}
                                     : json(nullptr);
  j["timing_ms"] = r.timing_ms ? json(*r.timing_ms) : json(nullptr);
  return j.dump();
}

std::string csv_header() {
  return "input_text,coeffs,degree,disc,disc_factorization,irreducible,galois_group,galois_certainty,"
         "monogenic_status,failing_prime,shape_params,remark_match,timing_ms";
}

std::string to_csv(const ReportRecord& r) {
  std::vector<std::string> cols{
      r.text,
      coeffs_text(r.poly, ';'),
      std::to_string(r.poly.degree()),
      r.disc.get_str(),
      r.disc_factorization ? r.disc_factorization->to_string() : "",
      r.irreducible ? "true" : "false",
      r.galois ? to_string(r.galois->group) : "",
      r.galois ? to_string(r.galois->certainty) : "",
      to_string(r.status),
      r.failing_prime ? r.failing_prime->get_str() : "",
      r.shape_params ? shapes_text(*r.shape_params) : "",
      r.remark_match ? std::to_string(r.remark_match->d) + ':' + std::to_string(r.remark_match->sign) + ':' +
                           (r.remark_match->mirror ? "mirror" : "direct")
                     : "",
      r.timing_ms ? json(*r.timing_ms).dump() : "",
  };
  std::string line;
  for (std::size_t i = 0; i < cols.size(); ++i) line += (i ? "," : "") + csv_escape(cols[i]);
  return line;
}

std::string to_text(const ReportRecord& r) {
  std::ostringstream out;
  out << "polynomial: " << r.poly.to_string() << '\n';
  out << "coefficients: [" << coeffs_text(r.poly, ',') << "]\n";
  out << "degree: " << r.poly.degree() << '\n';
  out << "discriminant: " << r.disc.get_str() << '\n';
  if (r.disc_factorization) out << "discriminant factorization: " << r.disc_factorization->to_string() << '\n';
  out << "irreducible: " << (r.irreducible ? "yes" : "no") << '\n';
  if (r.galois) out << "galois: " << to_string(r.galois->group) << '/' << to_string(r.galois->certainty) << '\n';
  out << "monogenic: " << to_string(r.status);
  if (r.failing_prime) out << " (failing prime " << r.failing_prime->get_str() << ')';
  out << '\n';
  if (r.shape_params) out << "shape params (m:n:c): " << (r.shape_params->empty() ? "none" : shapes_text(*r.shape_params)) << '\n';
  if (r.remark_match)
    out << "core matches -zeta-zeta^-1" << (r.remark_match->sign > 0 ? "+2" : "-2") << ", d=" << r.remark_match->d
        << (r.remark_match->mirror ? " (reciprocal)" : "") << '\n';
  if (r.timing_ms) out << "time: " << json(*r.timing_ms).dump() << " ms\n";
  return out.str();
}

}  // namespace evenmono
