#include <doctest.h>

#include "tansec/io/format.hpp"
#include "test_support.hpp"

using namespace tansec;
using tansec::io::Json;

TEST_CASE("triangle JSON uses decimal strings") {
  const Json j = io::triangle_to_json(build_secant_triangle(30));
  CHECK(j.dump().rfind(R"({"kind":"SecantOrderK","max_n":30,"rows":[["1"],["0","1"])", 0) == 0);
  REQUIRE(j["rows"].size() == 31);
  CHECK(j["rows"][30][30].get<std::string>() == ExactInt::factorial(30).to_string());
  for (const auto& row : j["rows"]) {
    for (const auto& v : row) CHECK(v.is_string());
  }
}

TEST_CASE("triangle CSV suppresses zeros") {
  const std::string csv = io::triangle_to_csv(build_tangent_triangle(3));
  CHECK(csv == "n,k,value\n0,0,1\n1,1,1\n2,2,2\n3,1,2\n3,3,6\n");
}

TEST_CASE("polynomial JSON and CSV") {
  const IntPolynomial q2{ExactInt(1), ExactInt(0), ExactInt(2)};
  CHECK(io::polynomial_to_json(PolyFamily::Q, 2, q2).dump() == R"({"family":"Q","n":2,"coefficients":["1","0","2"]})");
  CHECK(io::polynomial_to_csv(PolyFamily::Q, 2, q2) == "family,n,k,coefficient\nQ,2,0,1\nQ,2,2,2\n");
  CHECK(io::polynomial_to_json(PolyFamily::P, 0, IntPolynomial{}).dump() == R"({"family":"P","n":0,"coefficients":[]})");
}

TEST_CASE("LaTeX rendering") {
  CHECK(io::polynomial_to_latex(derivative_polynomial_closed(PolyFamily::Q, 6)) == "720 x^6 + 1320 x^4 + 662 x^2 + 61");
  CHECK(io::polynomial_to_latex(derivative_polynomial_closed(PolyFamily::HyperP, 1)) == "-x^2 + 1");
  CHECK(io::polynomial_to_latex(derivative_polynomial_closed(PolyFamily::HyperQ, 1)) == "-x");
  CHECK(io::polynomial_to_latex(derivative_polynomial_closed(PolyFamily::P, 0)) == "x");
  CHECK(io::polynomial_to_latex(IntPolynomial{}) == "0");
  CHECK(io::polynomial_to_latex(derivative_polynomial_closed(PolyFamily::Q, 10)).rfind("3628800 x^{10} + ", 0) == 0);
}

TEST_CASE("LaTeX output parses back to the same polynomial") {
  for (PolyFamily f : {PolyFamily::P, PolyFamily::Q, PolyFamily::HyperP, PolyFamily::HyperQ}) {
    for (int n = 0; n <= 40; ++n) {
      const IntPolynomial p = derivative_polynomial_closed(f, n);
      CHECK(io::parse_latex_polynomial(io::polynomial_to_latex(p)) == p);
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial p = testing::random_polynomial(25, 30);
    CHECK(io::parse_latex_polynomial(io::polynomial_to_latex(p)) == p);
  }
}

TEST_CASE("LaTeX parser rejects malformed input") {
  CHECK_THROWS_AS(io::parse_latex_polynomial(""), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_latex_polynomial("2 x^"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_latex_polynomial("x x"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_latex_polynomial("x^{3"), std::invalid_argument);
  CHECK(io::parse_latex_polynomial("x^2 + x^2") == IntPolynomial{ExactInt(0), ExactInt(0), ExactInt(2)});
}

TEST_CASE("output format names") {
  CHECK(io::parse_output_format("JSON") == io::OutputFormat::Json);
  CHECK(io::to_string(io::OutputFormat::Latex) == "latex");
  CHECK_THROWS_AS(io::parse_output_format("xml"), std::invalid_argument);
}
