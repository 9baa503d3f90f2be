#include "tansec/io/format.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tansec::io {

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Latex: return "latex";
  }
  return "unknown";
}

OutputFormat parse_output_format(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "text") return OutputFormat::Text;
  if (lower == "json") return OutputFormat::Json;
  if (lower == "csv") return OutputFormat::Csv;
  if (lower == "latex") return OutputFormat::Latex;
  throw std::invalid_argument("unknown output format: " + std::string(text));
}

Json triangle_to_json(const NumberTriangle& triangle) {
  Json rows = Json::array();
  for (int n = 0; n <= triangle.max_n(); ++n) {
    Json row = Json::array();
    for (const ExactInt& v : triangle.row(n)) row.push_back(v.to_string());
    rows.push_back(std::move(row));
  }
  Json out;
  out["kind"] = std::string(to_string(triangle.kind()));
  out["max_n"] = triangle.max_n();
  out["rows"] = std::move(rows);
  return out;
}

std::string triangle_to_csv(const NumberTriangle& triangle) {
  std::ostringstream os;
  os << "n,k,value\n";
  for (int n = 0; n <= triangle.max_n(); ++n) {
    auto row = triangle.row(n);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_zero()) os << n << ',' << k << ',' << row[k] << '\n';
    }
  }
  return os.str();
}

std::string triangle_to_text(const NumberTriangle& triangle) {
  std::ostringstream os;
  os << to_string(triangle.kind()) << " (max_n = " << triangle.max_n() << ")\n";
  for (int n = 0; n <= triangle.max_n(); ++n) {
    os << "n=" << n << ':';
    for (const ExactInt& v : triangle.row(n)) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

Json polynomial_to_json(PolyFamily family, int n, const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const ExactInt& c : p.coefficients()) coeffs.push_back(c.to_string());
  Json out;
  out["family"] = std::string(to_string(family));
  out["n"] = n;
  out["coefficients"] = std::move(coeffs);
  return out;
}

std::string polynomial_to_csv(PolyFamily family, int n, const IntPolynomial& p, bool header) {
  std::ostringstream os;
  if (header) os << "family,n,k,coefficient\n";
  auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) os << to_string(family) << ',' << n << ',' << k << ',' << coeffs[k] << '\n';
  }
  return os.str();
}

std::string polynomial_to_latex(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto coeffs = p.coefficients();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const ExactInt& c = coeffs[k];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const ExactInt magnitude = c.abs();
    const bool unit = magnitude == ExactInt(1);
    if (k == 0) {
      os << magnitude;
      continue;
    }
    if (!unit) os << magnitude << ' ';
    os << 'x';
    if (k >= 2) os << '^' << (k >= 10 ? "{" + std::to_string(k) + "}" : std::to_string(k));
  }
  return os.str();
}

namespace {

class LatexParser {
 public:
  explicit LatexParser(std::string_view text) : text_(text) {}

  IntPolynomial parse() {
    std::vector<ExactInt> coeffs;
    skip_space();
    if (peek() == '0' && rest_is_blank(pos_ + 1)) return {};
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = text_[pos_++] == '-';
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      ExactInt magnitude(1);
      bool has_digits = std::isdigit(static_cast<unsigned char>(peek())) != 0;
      if (has_digits) magnitude = read_integer();
      skip_space();
      std::size_t exponent = 0;
      if (peek() == 'x') {
        ++pos_;
        exponent = 1;
        if (peek() == '^') {
          ++pos_;
          bool braced = peek() == '{';
          if (braced) ++pos_;
          exponent = static_cast<std::size_t>(read_integer().to_int64());
          if (braced) expect('}');
        }
      } else if (!has_digits) {
        fail("expected a coefficient or x");
      }
      if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
      coeffs[exponent] += negative ? -magnitude : magnitude;
    }
    if (first) fail("empty polynomial");
    return IntPolynomial(std::move(coeffs));
  }

 private:
  [[nodiscard]] char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool rest_is_blank(std::size_t from) const {
    return std::all_of(text_.begin() + static_cast<std::ptrdiff_t>(std::min(from, text_.size())), text_.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
  }
  ExactInt read_integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return ExactInt::from_string(text_.substr(start, pos_ - start));
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed polynomial at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_latex_polynomial(std::string_view text) { return LatexParser(text).parse(); }

int decimal_digits(Precision precision) {
  return static_cast<int>(std::ceil(static_cast<double>(precision.bits) * 0.30102999566398120)) + 1;
}

}  // namespace tansec::io
