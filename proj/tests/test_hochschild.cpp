#include "doctest.h"
#include "starq/hochschild.hpp"
#include "starq/operators.hpp"
#include "starq/parse.hpp"

using namespace starq;

namespace {
Symbol S(const std::string& s, int n) { return parse_symbol(s, n); }
}  // namespace

TEST_CASE("coboundary of the Euler operator vanishes on a pair") {
  int n = 1;
  Cochain E(Cochain1([](const Symbol& F) { return F.euler(); }));
  Cochain dE = hochschild_delta(E);
  CHECK(dE.arity() == 2);
  // x1 E(xi1) - E(x1 xi1) + E(x1) xi1 = x1 xi1 - x1 xi1 + 0.
  CHECK(dE(S("x1", n), S("xi1", n)).is_zero());
}

TEST_CASE("delta squared is zero") {
  int n = 2;
  std::vector<int> met{1, 1};
  for (const LinOp& A :
       {op_euler(), op_divergence(), op_T(met),
        compose(op_R(met), op_dxi(1)), op_mult(S("x1*xi2", n))}) {
    Cochain one(Cochain1([A](const Symbol& F) { return A(F); }));
    Cochain dd = hochschild_delta(hochschild_delta(one));
    CHECK(dd.arity() == 3);
    CHECK(dd(S("x1*xi1", n), S("x2 + xi2", n), S("x1*x2*xi1", n)).is_zero());
    CHECK(dd(S("xi1^2", n), S("x1^2", n), S("x2*xi2", n)).is_zero());
  }
}

TEST_CASE("coboundary separates derivations from higher order operators") {
  int n = 1;
  Cochain D(Cochain1([](const Symbol& F) { return divergence(F); }));
  Cochain dD = hochschild_delta(D);
  CHECK(dD(S("x1", n), S("x1", n)).is_zero());  // -D(x1^2) = 0
  Symbol w = S("x1*xi1", n);
  CHECK(dD(w, w) == S("-2*x1*xi1", n));
  Cochain d1(Cochain1([](const Symbol& F) { return F.diff_x(1); }));
  Cochain dd1 = hochschild_delta(d1);
  CHECK(dd1(S("x1^2", n), S("x1*xi1", n)).is_zero());
}

TEST_CASE("arity guards") {
  Cochain E(Cochain1([](const Symbol& F) { return F.euler(); }));
  Cochain d3 = hochschild_delta(hochschild_delta(E));
  CHECK_THROWS_AS(hochschild_delta(d3), std::invalid_argument);
  CHECK_THROWS_AS(E(Symbol(1), Symbol(1)), std::logic_error);
}
