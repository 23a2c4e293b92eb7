#include "doctest.h"
#include "starq/operators.hpp"
#include "starq/parse.hpp"
#include "starq/quantize.hpp"
#include "starq/star.hpp"
#include "starq/verify.hpp"

using namespace starq;

namespace {
Symbol S(const std::string& s, int n) { return parse_symbol(s, n); }
StarFn canonical() {
  return [](const Symbol& F, const Symbol& G) { return star_explicit(F, G); };
}
}  // namespace

TEST_CASE("contraction operators on the doubled space") {
  int n = 1;
  PairSymbol P = tensor(S("xi1", n), S("x1", n));
  CHECK(restrict_diagonal(contract(Contraction::XiY, P)) == S("1", n));
  CHECK(contract(Contraction::EtaX, P).is_zero());
  CHECK(contract(Contraction::XiX, P).is_zero());
  PairSymbol Q = tensor(S("xi1", n), S("x1^2*xi1", n));
  CHECK(contract(Contraction::XiX, Q).is_zero());
  CHECK(restrict_diagonal(contract(Contraction::EtaY, Q)) ==
        S("2*x1*xi1", n));
}

TEST_CASE("closed-form coefficient values") {
  // Unit and bracket normalizations, including slots beyond the block where
  // the contraction acts (the continuation keeps the same values there).
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 5; ++k)
      for (int l = 0; l <= 5; ++l) {
        CHECK(star_coefficient(n, k, l, 0, 0, 0, 0) == Rational(1));
        if (n + 2 * k + 2 * l > 1) {
          CHECK(star_coefficient(n, k, l, 1, 0, 0, 0) == half());
          CHECK(star_coefficient(n, k, l, 0, 1, 0, 0) == -half());
        }
      }
  // The single degenerate corner has no closed-form value and reads 0.
  CHECK(star_coefficient(1, 0, 0, 1, 0, 0, 0) == Rational(0));
  // Reference values.
  CHECK(star_coefficient(1, 1, 1, 2, 0, 0, 0) == Rational(1, 6));
  CHECK(star_coefficient(1, 1, 1, 1, 1, 0, 0) == Rational(-1, 6));
  CHECK(star_coefficient(1, 1, 1, 0, 0, 1, 1) == Rational(1, 12));
  // Pure-divergence slots vanish (the second-stage sum telescopes).
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l) {
        CHECK(star_coefficient(n, k, l, 0, 0, 1, 0) == Rational(0));
        CHECK(star_coefficient(n, k, l, 0, 0, 0, 1) == Rational(0));
      }
  // Negative indices read as zero.
  CHECK(star_coefficient(2, 1, -1, 0, 0, 0, 0) == Rational(0));
}

TEST_CASE("explicit star-product examples") {
  int n = 1;
  CHECK(star_explicit(S("xi1", n), S("x1", n)) == S("x1*xi1 + 1/2*h", n));
  CHECK(star_explicit(S("x1", n), S("xi1", n)) == S("x1*xi1 - 1/2*h", n));
  CHECK(star_explicit(S("1", n), S("x1^3", n)) == S("x1^3", n));
  Symbol F = S("x1*xi1", n);
  CHECK(star_explicit(F, F) == S("x1^2*xi1^2 - 1/12*h^2", n));
  // Fiber-only symbols multiply pointwise.
  CHECK(star_explicit(S("xi1^2", n), S("xi1^3", n)) == S("xi1^5", n));
}

TEST_CASE("route equivalence on a graded sample") {
  for (int n : {1, 2}) {
    auto xs = multi_indices(n, 2);
    for (const auto& a : xs)
      for (const auto& b : xs)
        for (const auto& a2 : xs)
          for (const auto& b2 : xs) {
            Exponents e1{a, b, 0}, e2{a2, b2, 0};
            Symbol F(n), G(n);
            F.add_term(e1, Rational(1));
            G.add_term(e2, Rational(1));
            CHECK(star_explicit(F, G) == star_quant(F, G, half()));
          }
  }
}

TEST_CASE("star commutator") {
  int n = 1;
  StarFn st = canonical();
  CHECK(star_commutator(S("xi1", n), S("x1", n), st) == S("1", n));
  CHECK(star_commutator(S("x1*xi1", n), S("x1*xi1", n), st) == Symbol(n));
  auto fam = projective_generators(n);
  for (const auto& X : fam.members)
    for (const auto& Y : fam.members) {
      Symbol JX = moment(X), JY = moment(Y);
      CHECK(star_commutator(JX, JY, st) == poisson(JX, JY));
    }
}

TEST_CASE("inversion residuals vanish on the closed form") {
  CoeffFn fn = closed_form_coeffs();
  for (int n : {1, 2}) {
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l)
        for (const auto& sv : multi_indices(4, 3))
          for (int which : {1, 2}) {
            std::array<int, 4> seed{sv[0], sv[1], sv[2], sv[3]};
            if (!inversion_seed_admissible(which, k, l, seed)) continue;
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(l);
            CAPTURE(which);
            CHECK(inversion_residual(which, n, k, l, seed, fn).is_zero());
          }
  }
}

TEST_CASE("inversion residual detects a perturbed table") {
  CoeffFn bad = [](int n, int k, int l, int a, int b, int g, int d) {
    if (a == 1 && b == 0 && g == 0 && d == 0 && k >= 1) return Rational(1);
    return star_coefficient(n, k, l, a, b, g, d);
  };
  std::array<int, 4> seed{0, 0, 0, 0};
  CHECK(!inversion_residual(1, 1, 1, 1, seed, bad).is_zero());
}

TEST_CASE("associativity residual vanishes and reacts to perturbation") {
  CoeffFn fn = closed_form_coeffs();
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l)
      for (int m = 0; m <= 2; ++m)
        for (int r = 0; r <= 3; ++r) {
          CAPTURE(k);
          CAPTURE(l);
          CAPTURE(m);
          CAPTURE(r);
          CHECK(assoc_residual(1, k, l, m, r, fn).empty());
        }
  CoeffFn bad = [](int n, int k, int l, int a, int b, int g, int d) {
    Rational v = star_coefficient(n, k, l, a, b, g, d);
    if (a == 1 && b == 1 && g == 0 && d == 0 && k >= 1 && l >= 1)
      v += Rational(1);
    return v;
  };
  CHECK(!assoc_residual(1, 1, 1, 1, 2, bad).empty());
}

TEST_CASE("coefficient symmetry under argument swap") {
  for (int n : {1, 2, 3})
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l)
        for (const auto& sv : multi_indices(4, 3)) {
          Rational lhs = star_coefficient(n, k, l, sv[0], sv[1], sv[2], sv[3]);
          Rational rhs = star_coefficient(n, l, k, sv[1], sv[0], sv[3], sv[2]);
          int r = sv[0] + sv[1] + sv[2] + sv[3];
          if (r % 2 == 1) rhs = -rhs;
          CHECK(lhs == rhs);
        }
}

TEST_CASE("equivalence transform with the identity is the identity") {
  int n = 1, cap = 6;
  StarFn st = transform_star(canonical(), EquivalenceMap{}, {}, cap);
  Symbol F = S("x1*xi1^2", n), G = S("x1^2*xi1", n);
  CHECK(st(F, G) == truncate_nu(star_explicit(F, G), cap));
}

TEST_CASE("equivalence inverse really inverts") {
  int n = 1, cap = 5;
  EquivalenceMap phi;
  phi.layers.emplace_back(1, op_euler());
  Symbol F = S("x1^2*xi1^2 + x1*xi1 - 3", n);
  Symbol round =
      apply_equivalence_inverse(phi, apply_equivalence(phi, F, cap), cap);
  CHECK(round == F);
}

TEST_CASE("reparametrization shifts the cubic commutator term") {
  int n = 1, cap = 6;
  Rational c(1, 4);
  StarFn st = transform_star(canonical(), EquivalenceMap{}, {{3, c}}, cap);
  Symbol F = S("x1*xi1^2", n), G = S("x1^2*xi1", n);
  Symbol skew_new = st(F, G) - st(G, F);
  Symbol skew_old = truncate_nu(star_explicit(F, G) - star_explicit(G, F), cap);
  CHECK((skew_new - skew_old).nu_coefficient(3) == c * poisson(F, G));
}
