// Integers cross the boundary as decimal strings; the Python package turns
// them into int.  Records cross as JSON lines.

#include <evenmono/cyclo.hpp>
#include <evenmono/errors.hpp>
#include <evenmono/factor.hpp>
#include <evenmono/galois6.hpp>
#include <evenmono/hunt.hpp>
#include <evenmono/mono.hpp>
#include <evenmono/parse.hpp>
#include <evenmono/report.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace evenmono;

namespace {

IntPoly to_poly(const std::vector<std::string>& coeffs) {
  std::vector<Int> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.emplace_back(s);
  return IntPoly(std::move(c));
}

std::vector<std::string> from_poly(const IntPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

std::string search_jsonl(const std::string& mode, std::array<long, 3> bounds, std::vector<std::string> filters,
                         unsigned jobs) {
  SearchSpec spec;
  if (mode == "box") {
    spec = box_spec(0, std::move(filters), jobs);
    for (std::size_t i = 0; i < 3; ++i) spec.bounds[i] = {-bounds[i], bounds[i]};
  } else if (mode == "shape") {
    spec = shape_spec(bounds[0], bounds[2], std::move(filters), jobs);
    spec.bounds[1] = {-bounds[1], bounds[1]};
  } else {
    throw Error("mode must be 'box' or 'shape'");
  }
  std::string out;
  for (const auto& hit : run_search(spec)) out += to_jsonl(record_from_hit(hit)) + "\n";
  return out;
}

py::dict verification(const VerificationReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed;
  d["summary"] = r.summary;
  d["witnesses"] = r.witnesses;
  d["counts"] = r.counts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_evenmono, m) {
  py::register_exception<Error>(m, "EvenmonoError", PyExc_ValueError);

  m.def("analyze_jsonl", [](const std::string& text, unsigned cross_check) {
    ClassifyOptions opts;
    opts.cross_check_primes = cross_check;
    return to_jsonl(analyze(parse_poly(text), opts));
  });
  m.def("parse_poly", [](const std::string& text) { return from_poly(parse_poly(text).poly); });
  m.def("discriminant", [](const std::vector<std::string>& c) { return discriminant(to_poly(c)).get_str(); });
  m.def("is_irreducible", [](const std::vector<std::string>& c) { return is_irreducible(to_poly(c)); });
  m.def("is_monogenic", [](const std::vector<std::string>& c) {
    const auto r = is_monogenic(to_poly(c));
    return std::pair<std::string, std::optional<std::string>>(
        to_string(r.status), r.failing_prime ? std::optional<std::string>(r.failing_prime->get_str()) : std::nullopt);
  });
  m.def("factorize", [](const std::string& n) {
    const auto f = factorize(Int(n));
    std::vector<std::pair<std::string, unsigned>> factors;
    for (const auto& pp : f.factors) factors.emplace_back(pp.prime.get_str(), pp.exponent);
    return py::make_tuple(f.sign, factors, f.cofactor.get_str());
  });
  m.def("classify", [](const std::string& a, const std::string& b, const std::string& c, unsigned cross_check) {
    ClassifyOptions opts;
    opts.cross_check_primes = cross_check;
    const auto l = classify(Int(a), Int(b), Int(c), opts);
    return std::pair<std::string, std::string>(to_string(l.group), to_string(l.certainty));
  });
  m.def("d6_shape", [](const std::string& a, const std::string& b, const std::string& c) {
    std::vector<std::array<std::string, 3>> out;
    for (const auto& p : d6_shape(Int(a), Int(b), Int(c))) out.push_back({p.m.get_str(), p.n.get_str(), p.c.get_str()});
    return out;
  });
  m.def("real_cyclotomic_minpoly", [](unsigned d) { return from_poly(real_cyclotomic_minpoly(d)); });
  m.def("shifted_variant", [](const std::vector<std::string>& h, long t, bool negate) {
    return from_poly(shifted_variant(to_poly(h), Int(t), negate));
  });
  m.def("search_jsonl", &search_jsonl, py::call_guard<py::gil_scoped_release>());
  m.def("verify_thm_1_1", [](long bound, unsigned jobs) { return verification(verify_thm_1_1(bound, jobs)); });
  m.def("verify_lem_1_2", [](unsigned primes) { return verification(verify_lem_1_2(primes)); });
  m.def("verify_thm_4_1", [](long max_b) { return verification(verify_thm_4_1(max_b)); });
  m.def("verify_lem_4_2", [](long bound, long quintic_bound, unsigned jobs) {
    return verification(verify_lem_4_2(bound, quintic_bound, jobs));
  });
}
