#include "doctest.h"
#include "starq/parse.hpp"
#include "starq/symbol.hpp"

using namespace starq;

namespace {
Symbol S(const std::string& s, int n) { return parse_symbol(s, n); }
}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-7).str() == "-7");
  CHECK(Rational::from_string("-5/10") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("pochhammer and binomial") {
  CHECK(pochhammer(Rational(3), 2) == Rational(12));
  CHECK(pochhammer(Rational(5), 0) == Rational(1));
  CHECK(pochhammer(Rational(-2), 3) == Rational(0));
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(binomial(Rational(7), 0) == Rational(1));
  CHECK(binomial(Rational(5), 2) == Rational(10));
  CHECK(trinomial(4, 2, 1, 1) == Rational(12));
}

TEST_CASE("symbol arithmetic on small examples") {
  int n = 2;
  CHECK(S("x1", n) * S("xi1", n) == S("x1*xi1", n));
  CHECK(S("x1+xi1", n) * S("x1-xi1", n) == S("x1^2-xi1^2", n));
  Symbol F = S("3*x1^2*xi2 + 1/2*h*xi1", n);
  CHECK(F + Rational(-1) * F == Symbol(n));
  CHECK_THROWS_AS(S("x1", 1) * S("x1", 2), std::invalid_argument);
}

TEST_CASE("poisson bracket conventions") {
  int n = 2;
  CHECK(poisson(S("xi1", n), S("x1", n)) == S("1", n));
  CHECK(poisson(S("x1", n), S("xi1", n)) == S("-1", n));
  // {x1 xi1, xi1} = d_xi(x1 xi1) d_x(xi1) - d_x(x1 xi1) d_xi(xi1) = -xi1
  // under the bracket orientation pinned by {xi1, x1} = +1.
  CHECK(poisson(S("xi1*x1", n), S("xi1", n)) == S("-xi1", n));
  Symbol F = S("x1*xi2^2 + x2", n);
  CHECK(poisson(F, F) == Symbol(n));
}

TEST_CASE("euler operators") {
  int n = 1;
  CHECK(S("x1^3", n).euler() == Symbol(n));
  CHECK(S("x1*xi1^2", n).euler() == S("2*x1*xi1^2", n));
  CHECK(S("h*xi1", n).euler_hat() == S("2*h*xi1", n));
}

TEST_CASE("grading") {
  int n = 2;
  Symbol F = S("x1 + xi1^2", n);
  auto parts = F.graded();
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 0);
  CHECK(parts[0].second == S("x1", n));
  CHECK(parts[1].first == 2);
  CHECK(parts[1].second == S("xi1^2", n));
  CHECK(Symbol(n).graded().empty());

  Symbol G = S("xi1*xi2 + xi1", n);
  auto gp = G.graded();
  REQUIRE(gp.size() == 2);
  CHECK(gp[0].first == 1);
  CHECK(gp[0].second == S("xi1", n));
  CHECK(gp[1].first == 2);
  CHECK(gp[1].second == S("xi1*xi2", n));
}

TEST_CASE("divergence operator") {
  int n = 1;
  CHECK(divergence(S("x1*xi1^2", n)) == S("2*xi1", n));
  CHECK(divergence(S("xi1", n)) == Symbol(n));
}

TEST_CASE("parser errors carry positions") {
  CHECK_THROWS_AS(parse_symbol("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_symbol("x1 +", 2), ParseError);
  CHECK_THROWS_AS(parse_symbol("(x1", 2), ParseError);
  CHECK_THROWS_AS(parse_symbol("x1^(2)", 2), ParseError);
  CHECK_THROWS_AS(parse_symbol("1/0", 2), ParseError);
  CHECK_THROWS_AS(parse_symbol("y1", 2), ParseError);
  try {
    parse_symbol("x1 + x9", 2);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("parser accepts the documented grammar") {
  int n = 2;
  CHECK(S("  3*x1^2 * xi2+1/2 * h*xi1 ", n) == S("3*x1^2*xi2 + 1/2*h*xi1", n));
  CHECK(S("-x1 - -1*x1", n) == Symbol(n));
  CHECK(S("(x1+x2)^2", n) == S("x1^2 + 2*x1*x2 + x2^2", n));
  CHECK(S("2^3", n) == S("8", n));
  CHECK(S("1/2^2", n) == S("1/4", n));
}

TEST_CASE("format produces the documented canonical order") {
  int n = 2;
  CHECK(format_symbol(S("1/2*h + x1*xi1", n)) == "x1*xi1 + 1/2*h");
  CHECK(format_symbol(S("h*xi1 + x1*xi1^2", n)) == "x1*xi1^2 + h*xi1");
  CHECK(format_symbol(Symbol(n)) == "0");
  CHECK(format_symbol(S("x2 - x1", n)) == "-x1 + x2");
  CHECK(format_symbol(S("xi2 + xi1^2 + xi1*xi2", n)) ==
        "xi1^2 + xi1*xi2 + xi2");
}
