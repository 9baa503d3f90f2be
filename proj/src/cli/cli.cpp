#include "tansec/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <sstream>
#include <vector>

#include "tansec/calculus/derivatives.hpp"
#include "tansec/errors.hpp"
#include "tansec/io/format.hpp"
#include "tansec/numbers/triangle.hpp"
#include "tansec/polys/derivative_polynomials.hpp"
#include "tansec/verify/suites.hpp"
#include "tansec/zeta/hurwitz.hpp"

namespace tansec::cli {

namespace {

using io::Json;
using io::OutputFormat;

/// Thrown for bad flag values that CLI11 cannot catch by itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

long default_precision_bits() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr || *env == '\0') return 256;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0') throw UsageError(std::string(kPrecisionEnv) + " is not an integer: " + env);
  return bits;
}

OutputFormat format_or_usage(const std::string& text, std::initializer_list<OutputFormat> allowed) {
  OutputFormat f{};
  try {
    f = io::parse_output_format(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (OutputFormat a : allowed) {
    if (a == f) return f;
  }
  throw UsageError("format '" + text + "' is not supported by this subcommand");
}

template <typename Fn>
auto usage_on_invalid(Fn fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct NumbersOptions {
  std::string kind;
  int max_n = 0;
  std::string format = "text";
};

void run_numbers(const NumbersOptions& o, std::ostream& out) {
  const OutputFormat format = format_or_usage(o.format, {OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv});
  NumberTriangle triangle = [&] {
    if (o.kind == "tangent") return build_tangent_triangle(o.max_n);
    if (o.kind == "secant") return build_secant_triangle(o.max_n);
    if (o.kind == "stirling") return build_stirling_subset_triangle(o.max_n);
    throw UsageError("unknown triangle kind: " + o.kind);
  }();
  switch (format) {
    case OutputFormat::Json: out << io::triangle_to_json(triangle).dump() << '\n'; break;
    case OutputFormat::Csv: out << io::triangle_to_csv(triangle); break;
    default: out << io::triangle_to_text(triangle); break;
  }
}

struct PolyOptions {
  std::string family;
  std::optional<int> n;
  std::optional<int> from;
  std::optional<int> to;
  std::string method = "closed";
  std::string format = "text";
};

void run_poly(const PolyOptions& o, std::ostream& out) {
  const OutputFormat format = format_or_usage(o.format, {OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv, OutputFormat::Latex});
  const PolyFamily family = usage_on_invalid([&] { return parse_poly_family(o.family); });
  if (o.method != "closed" && o.method != "recurrence") throw UsageError("unknown method: " + o.method);

  int first = 0;
  int last = 0;
  const bool range = !o.n.has_value();
  if (o.n) {
    first = last = *o.n;
  } else if (o.from && o.to) {
    first = *o.from;
    last = *o.to;
  } else {
    throw UsageError("poly needs --n or both --from and --to");
  }
  if (first < 0 || last < first) throw DomainError("polynomial index range must satisfy 0 <= from <= to");

  std::vector<IntPolynomial> polys;
  if (o.method == "recurrence") {
    auto seq = recurrence_sequence(family, last);
    polys.assign(seq.begin() + first, seq.end());
  } else {
    const NumberTriangle tangent = build_tangent_triangle(last + 1);
    const NumberTriangle secant = build_secant_triangle(last);
    for (int n = first; n <= last; ++n) polys.push_back(derivative_polynomial_closed(family, n, tangent, secant));
  }

  const std::string name(to_string(family));
  switch (format) {
    case OutputFormat::Json: {
      if (!range) {
        out << io::polynomial_to_json(family, first, polys.front()).dump() << '\n';
        break;
      }
      Json arr = Json::array();
      for (int n = first; n <= last; ++n) arr.push_back(io::polynomial_to_json(family, n, polys[static_cast<std::size_t>(n - first)]));
      out << arr.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "family,n,k,coefficient\n";
      for (int n = first; n <= last; ++n) out << io::polynomial_to_csv(family, n, polys[static_cast<std::size_t>(n - first)], false);
      break;
    case OutputFormat::Latex:
      for (int n = first; n <= last; ++n) {
        const std::string body = io::polynomial_to_latex(polys[static_cast<std::size_t>(n - first)]);
        if (range) out << name << "_{" << n << "}(x) = ";
        out << body << '\n';
      }
      break;
    default:
      for (int n = first; n <= last; ++n) out << name << '_' << n << "(x) = " << polys[static_cast<std::size_t>(n - first)] << '\n';
      break;
  }
}

struct DerivativeOptions {
  std::string kind;
  int n = 0;
  std::optional<std::string> exact_u;
  std::optional<std::string> point;
  std::optional<long> precision_bits;
  std::string format = "text";
};

void run_derivative(const DerivativeOptions& o, std::ostream& out) {
  const OutputFormat format = format_or_usage(o.format, {OutputFormat::Text, OutputFormat::Json});
  const DerivKind kind = usage_on_invalid([&] { return parse_deriv_kind(o.kind); });
  if (o.exact_u.has_value() == o.point.has_value()) throw UsageError("derivative needs exactly one of --exact-u or --point");

  Json j;
  j["kind"] = std::string(to_string(kind));
  j["n"] = o.n;
  if (o.exact_u) {
    const Rational u = usage_on_invalid([&] { return Rational::from_string(*o.exact_u); });
    const ExactDerivative d = nth_derivative_exact(kind, o.n, u);
    j["mode"] = "exact";
    j["u"] = u.to_string();
    j["coefficient"] = d.coefficient.to_string();
    j["prefactor"] = std::string(to_string(d.prefactor));
    j["precision"] = nullptr;
  } else {
    const Precision precision{o.precision_bits.value_or(default_precision_bits())};
    require_precision(precision);
    const BigFloat x = usage_on_invalid([&] { return parse_point(*o.point, precision.with_guard()); });
    const BigFloat value = nth_derivative_numeric(kind, o.n, x, precision);
    j["mode"] = "numeric";
    j["point"] = *o.point;
    j["coefficient"] = value.to_string(io::decimal_digits(precision));
    j["prefactor"] = "1";
    j["precision"] = precision.bits;
  }

  if (format == OutputFormat::Json) {
    out << j.dump() << '\n';
    return;
  }
  out << "kind=" << j["kind"].get<std::string>() << " n=" << o.n << " mode=" << j["mode"].get<std::string>();
  if (o.exact_u) {
    out << " u=" << j["u"].get<std::string>();
  } else {
    out << " point=" << *o.point << " precision=" << j["precision"].get<long>();
  }
  out << " coefficient=" << j["coefficient"].get<std::string>() << " prefactor=" << j["prefactor"].get<std::string>() << '\n';
}

struct ZetaOptions {
  int n = 2;
  std::string x;
  std::optional<long> precision_bits;
  std::string format = "text";
};

int run_zeta(const ZetaOptions& o, std::ostream& out) {
  const OutputFormat format = format_or_usage(o.format, {OutputFormat::Text, OutputFormat::Json});
  const Precision precision{o.precision_bits.value_or(default_precision_bits())};
  const Rational x = usage_on_invalid([&] { return Rational::from_string(o.x); });
  const ReflectionCheck check = reflection_identity(o.n, x, precision);
  const bool passed = check.residual < BigFloat::pow2(-(precision.bits - 16), precision);
  const int digits = io::decimal_digits(precision);

  Json j;
  j["n"] = o.n;
  j["x"] = x.to_string();
  j["lhs"] = check.lhs.to_string(digits);
  j["rhs"] = check.rhs.to_string(digits);
  j["residual"] = check.residual.to_string(6);
  j["precision"] = precision.bits;
  j["lhs_form"] = "corrected-lhs";
  j["passed"] = passed;
  if (format == OutputFormat::Json) {
    out << j.dump() << '\n';
  } else {
    out << "n=" << o.n << " x=" << x << " precision=" << precision.bits << " (corrected-lhs)\n"
        << "lhs      = " << j["lhs"].get<std::string>() << '\n'
        << "rhs      = " << j["rhs"].get<std::string>() << '\n'
        << "residual = " << j["residual"].get<std::string>() << (passed ? " ok" : " FAILED") << '\n';
  }
  return passed ? kOk : kInternalError;
}

struct VerifyOptions {
  std::string suite = "all";
  int max_n = 100;
  std::string format = "text";
};

int run_verify(const VerifyOptions& o, std::ostream& out) {
  const OutputFormat format = format_or_usage(o.format, {OutputFormat::Text, OutputFormat::Json});
  const verify::SuiteReport report = usage_on_invalid([&] { return verify::run_suite(o.suite, o.max_n); });
  if (format == OutputFormat::Json) {
    Json cases = Json::array();
    for (const auto& c : report.cases) {
      Json item;
      item["key"] = c.key;
      item["passed"] = c.passed;
      item["detail"] = c.detail;
      cases.push_back(std::move(item));
    }
    Json j;
    j["suite"] = o.suite;
    j["max_n"] = o.max_n;
    j["passed"] = report.passed();
    j["cases"] = std::move(cases);
    out << j.dump() << '\n';
  } else {
    for (const auto& c : report.cases) out << (c.passed ? "PASS " : "FAIL ") << c.key << " (" << c.detail << ")\n";
    out << (report.passed() ? "all passed" : "FAILURES") << '\n';
  }
  return report.passed() ? kOk : kInternalError;
}

}  // namespace

BigFloat parse_point(std::string_view text, Precision precision) {
  const auto pi_at = text.find("pi");
  if (pi_at == std::string_view::npos) {
    if (text.find_first_of("eE") != std::string_view::npos) return BigFloat::from_string(text, precision);
    return BigFloat(Rational::from_string(text), precision);
  }
  std::string_view head = text.substr(0, pi_at);
  std::string_view tail = text.substr(pi_at + 2);
  Rational scale(1);
  if (head == "-") {
    scale = Rational(-1);
  } else if (!head.empty() && head != "+") {
    if (head.back() == '*') head.remove_suffix(1);
    scale = Rational::from_string(head);
  }
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("invalid point: " + std::string(text));
    scale /= Rational(ExactInt::from_string(tail.substr(1)));
  }
  return BigFloat(scale, precision) * BigFloat::pi(precision);
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tangent/secant numbers, derivative polynomials and closed-form higher derivatives", "tansec"};
  app.require_subcommand(1);

  NumbersOptions numbers;
  auto* numbers_cmd = app.add_subcommand("numbers", "Tangent, secant or Stirling subset number triangle");
  numbers_cmd->add_option("--kind", numbers.kind, "tangent | secant | stirling")->required();
  numbers_cmd->add_option("--max-n", numbers.max_n, "Last row")->required();
  numbers_cmd->add_option("--format", numbers.format, "text | json | csv");

  PolyOptions poly;
  auto* poly_cmd = app.add_subcommand("poly", "Derivative polynomial(s) of one family");
  poly_cmd->add_option("--family", poly.family, "P | Q | HyperP | HyperQ")->required();
  poly_cmd->add_option("--n", poly.n, "Single index");
  poly_cmd->add_option("--from", poly.from, "First index of a range");
  poly_cmd->add_option("--to", poly.to, "Last index of a range");
  poly_cmd->add_option("--method", poly.method, "closed | recurrence");
  poly_cmd->add_option("--format", poly.format, "text | json | csv | latex");

  DerivativeOptions deriv;
  auto* deriv_cmd = app.add_subcommand("derivative", "n-th derivative of tan, sec, cot, csc, tanh, sech, coth or csch");
  deriv_cmd->add_option("--kind", deriv.kind, "Function name")->required();
  deriv_cmd->add_option("--n", deriv.n, "Derivative order")->required();
  deriv_cmd->add_option("--exact-u", deriv.exact_u, "Exact value of tan/cot/tanh/coth at the point");
  deriv_cmd->add_option("--point", deriv.point, "Numeric point, e.g. 0.5, 3/7, pi/4");
  deriv_cmd->add_option("--precision-bits", deriv.precision_bits, "Numeric precision (default 256 or $TANSEC_PRECISION_BITS)");
  deriv_cmd->add_option("--format", deriv.format, "text | json");

  ZetaOptions zeta;
  auto* zeta_cmd = app.add_subcommand("zeta", "Check the Hurwitz zeta / cot reflection identity");
  zeta_cmd->add_option("--n", zeta.n, "Order n >= 2")->required();
  zeta_cmd->add_option("--x", zeta.x, "Rational point in (0, 1)")->required();
  zeta_cmd->add_option("--precision-bits", zeta.precision_bits, "Precision (default 256 or $TANSEC_PRECISION_BITS)");
  zeta_cmd->add_option("--format", zeta.format, "text | json");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run cross-validation suites");
  verify_cmd->add_option("--suite", verify_opts.suite, "all | golden | dual | egf | classical | divisibility | symmetry | transport | adamchik | oracle | zeta");
  verify_cmd->add_option("--max-n", verify_opts.max_n, "Index budget (default 100)");
  verify_cmd->add_option("--format", verify_opts.format, "text | json");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  try {
    if (numbers_cmd->parsed()) run_numbers(numbers, out);
    if (poly_cmd->parsed()) run_poly(poly, out);
    if (deriv_cmd->parsed()) run_derivative(deriv, out);
    if (zeta_cmd->parsed()) return run_zeta(zeta, out);
    if (verify_cmd->parsed()) return run_verify(verify_opts, out);
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvariantError& e) {
    err << "internal invariant failure: " << e.what() << '\n';
    return kInternalError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::out_of_range& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace tansec::cli
