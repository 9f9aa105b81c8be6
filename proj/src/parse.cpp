#include <evenmono/parse.hpp>

#include <evenmono/errors.hpp>

#include <cctype>
#include <map>

namespace evenmono {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  IntPoly parse() {
    skip();
    if (at_end()) fail("'[', sign, digit or 'x'");
    const bool bracketed = peek() == '[';
    IntPoly p = bracketed ? list() : sparse();
    skip();
    if (!at_end()) fail(bracketed ? "end of input" : "'+', '-' or end of input");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(char ch) {
    skip();
    if (at_end() || peek() != ch) return false;
    ++pos_;
    return true;
  }
  bool digit_next() {
    skip();
    return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
  }
  bool var_next() {
    skip();
    return !at_end() && (peek() == 'x' || peek() == 'X');
  }
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected); }

  Int digits() {
    if (!digit_next()) fail("digit");
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  unsigned long exponent() {
    const Int e = digits();
    if (!e.fits_ulong_p() || e > 100000) fail("exponent below 100001");
    return e.get_ui();
  }

  IntPoly list() {
    accept('[');
    std::vector<Int> coeffs;
    do {
      bool negative = false;
      if (accept('-')) negative = true;
      else accept('+');
      Int v = digits();
      coeffs.push_back(negative ? Int(-v) : v);
    } while (accept(','));
    if (!accept(']')) fail("',' or ']'");
    return IntPoly(std::move(coeffs));
  }

  IntPoly sparse() {
    std::map<unsigned long, Int> terms;
    bool first = true;
    for (;;) {
      bool negative = false;
      if (accept('-')) {
        negative = true;
      } else if (!accept('+') && !first) {
        break;
      }
      if (!digit_next() && !var_next()) fail("digit or 'x'");
      Int coeff = 1;
      unsigned long e = 0;
      bool need_var = false;
      if (digit_next()) {
        coeff = digits();
        need_var = accept('*');
      }
      if (var_next()) {
        ++pos_;
        e = accept('^') ? exponent() : 1;
      } else if (need_var) {
        fail("'x'");
      }
      terms[e] += negative ? Int(-coeff) : coeff;
      first = false;
      skip();
      if (at_end()) break;
    }
    std::vector<Int> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1);
    for (auto& [e, c] : terms) coeffs[e] = std::move(c);
    return IntPoly(std::move(coeffs));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse_poly(std::string_view text) {
  Parser parser(text);
  return PolyExpr{std::string(text), parser.parse()};
}

}  // namespace evenmono
