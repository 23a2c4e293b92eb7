#include "doctest.h"
#include "starq/solver.hpp"

using namespace starq;

TEST_CASE("linear solve") {
  // x + y = 3, x - y = 1.
  std::vector<std::vector<Rational>> rows{
      {Rational(1), Rational(1), Rational(3)},
      {Rational(1), Rational(-1), Rational(1)}};
  auto sol = solve_linear(rows, 2);
  REQUIRE(sol.unique);
  CHECK(sol.x[0] == Rational(2));
  CHECK(sol.x[1] == Rational(1));

  // Underdetermined.
  std::vector<std::vector<Rational>> rows2{
      {Rational(1), Rational(1), Rational(3)}};
  CHECK(!solve_linear(rows2, 2).unique);

  // Inconsistent.
  std::vector<std::vector<Rational>> rows3{
      {Rational(1), Rational(0), Rational(1)},
      {Rational(2), Rational(0), Rational(3)}};
  CHECK(!solve_linear(rows3, 2).consistent);
}

TEST_CASE("solver reproduces the closed form in one dimension") {
  CoeffSolver solver(1);
  solver.solve(2, 2, 4);
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l)
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b)
          for (int g = 0; a + b + g <= 4; ++g)
            for (int d = 0; a + b + g + d <= 4; ++d) {
              if (a + g > k || b + d > l) continue;
              CAPTURE(k);
              CAPTURE(l);
              CAPTURE(a);
              CAPTURE(b);
              CAPTURE(g);
              CAPTURE(d);
              CHECK(solver.value(k, l, a, b, g, d) ==
                    star_coefficient(1, k, l, a, b, g, d));
            }
  CHECK(solver.value(1, 1, 2, 0, 0, 0) == Rational(1, 6));
}

TEST_CASE("solver reproduces the closed form in two dimensions") {
  CoeffSolver solver(2);
  solver.solve(1, 1, 2);
  for (int k = 0; k <= 1; ++k)
    for (int l = 0; l <= 1; ++l)
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b)
          for (int g = 0; a + b + g <= 2; ++g)
            for (int d = 0; a + b + g + d <= 2; ++d) {
              if (a + g > k || b + d > l) continue;
              CHECK(solver.value(k, l, a, b, g, d) ==
                    star_coefficient(2, k, l, a, b, g, d));
            }
}
