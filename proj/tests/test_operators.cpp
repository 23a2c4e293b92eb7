#include "doctest.h"
#include "starq/operators.hpp"
#include "starq/parse.hpp"

using namespace starq;

namespace {
Symbol S(const std::string& s, int n) { return parse_symbol(s, n); }

VectorField inversion(int n, int i) {
  VectorField X = VectorField::zero(n);
  for (int j = 0; j < n; ++j)
    X.comp[j] = Symbol::x(n, i) * Symbol::x(n, j + 1);
  return X;
}
}  // namespace

TEST_CASE("named operator images") {
  int n = 1;
  CHECK(op_divergence()(S("x1*xi1^2", n)) == S("2*xi1", n));
  CHECK(op_euler()(S("xi1^3", n)) == S("3*xi1^3", n));
  std::vector<int> met{1, 1};
  CHECK(op_R0(met)(S("xi1*xi2", 2)).is_zero());
  CHECK(op_T(met)(S("xi1^2 + xi2^2", 2)) == S("4", 2));
  std::vector<int> lor{1, -1};
  CHECK(op_T(lor)(S("xi1^2 + xi2^2", 2)).is_zero());
  CHECK(op_R(lor)(S("1", 2)) == S("xi1^2 - xi2^2", 2));
}

TEST_CASE("affine relation [E,D] = -D") {
  for (int n : {1, 2}) {
    Bounds b{2, 3, 0};
    OpTable lhs(commutator(op_euler(), op_divergence()), n, b);
    OpTable rhs(scale(Rational(-1), op_divergence()), n, b);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("sl2 relations with the frozen normalization") {
  for (int n : {1, 2}) {
    std::vector<int> met(n, 1);
    Bounds b{2, 4, 0};
    LinOp R = op_R(met), T = op_T(met), E = op_euler();
    CHECK(OpTable(commutator(E, R), n, b) ==
          OpTable(scale(Rational(2), R), n, b));
    CHECK(OpTable(commutator(E, T), n, b) ==
          OpTable(scale(Rational(-2), T), n, b));
    LinOp rhs = scale(Rational(-4), E) -
                scale(Rational(2 * n), op_identity());
    CHECK(OpTable(commutator(R, T), n, b) == OpTable(rhs, n, b));
  }
}

TEST_CASE("R0 equals E(E-1) in one dimension") {
  Bounds b{3, 5, 0};
  std::vector<int> met{1};
  OpTable lhs(op_R0(met), 1, b);
  OpTable rhs(compose(op_euler(), op_euler() - op_identity()), 1, b);
  CHECK(lhs == rhs);
}

TEST_CASE("inversion commutation relation") {
  for (int n : {1, 2, 3}) {
    Bounds b{2, 3, 0};
    for (int i = 1; i <= n; ++i) {
      LinOp lhs = commutator(op_lift(inversion(n, i)), op_divergence());
      LinOp rhs = compose(scale(Rational(2), op_euler()) +
                              scale(Rational(n + 1), op_identity()),
                          op_dxi(i));
      CHECK(OpTable(lhs, n, b) == OpTable(rhs, n, b));
    }
  }
}

TEST_CASE("commutant membership and witnesses") {
  Bounds b{3, 4, 0};
  CHECK(commutant_check(projective_generators(2), op_euler(), b).commutes);
  auto conf = conformal_generators(2, 0);
  CHECK(commutant_check(conf, op_R0(conf.metric), b).commutes);
  auto repD = commutant_check(conf, op_divergence(), b);
  CHECK(!repD.commutes);
  CHECK(repD.witness.has_value());
  // D is affine-invariant but fails under projective inversions too.
  auto repP = commutant_check(projective_generators(2), op_divergence(), b);
  CHECK(!repP.commutes);
}

TEST_CASE("conformal operators require a metric") {
  CHECK_THROWS_AS(op_R({}), std::invalid_argument);
  CHECK_THROWS_AS(op_T({1, 2}), std::invalid_argument);
}
