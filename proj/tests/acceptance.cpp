// Acceptance suite: runs every gate criterion at its stated bounds and
// prints one pass/fail line per criterion. Exit code is the number of
// failing criteria. All checks are exact rational identities.

#include <array>
#include <cstdio>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "starq/geometry.hpp"
#include "starq/hochschild.hpp"
#include "starq/operators.hpp"
#include "starq/parse.hpp"
#include "starq/quantize.hpp"
#include "starq/solver.hpp"
#include "starq/star.hpp"
#include "starq/verify.hpp"

using namespace starq;

namespace {

std::vector<VectorField> inversions(int n) {
  std::vector<VectorField> out;
  for (int i = 1; i <= n; ++i) {
    VectorField X = VectorField::zero(n);
    for (int j = 0; j < n; ++j)
      X.comp[j] = Symbol::x(n, i) * Symbol::x(n, j + 1);
    out.push_back(X);
  }
  return out;
}

Symbol monomial(int n, const std::vector<int>& a, const std::vector<int>& b) {
  Exponents e;
  e.x = a;
  e.xi = b;
  Symbol s(n);
  s.add_term(e, Rational(1));
  return s;
}

// ---------------------------------------------------------------------------
// 1. Route equivalence: the closed-form product equals the quantization
//    route at lambda = 1/2 on every monomial pair with fiber degrees <= 3
//    and base degrees <= 3, for n = 1, 2, 3.
bool criterion_route_equivalence(std::string& detail) {
  for (int n = 1; n <= 3; ++n) {
    auto idx = multi_indices(n, 3);
    std::vector<Symbol> monos;
    for (const auto& a : idx)
      for (const auto& b : idx) monos.push_back(monomial(n, a, b));

    std::size_t total = monos.size() * monos.size();
    unsigned workers = std::max(2u, std::thread::hardware_concurrency());
    std::vector<std::future<long>> futs;
    for (unsigned w = 0; w < workers; ++w) {
      futs.push_back(std::async(std::launch::async, [&, w]() -> long {
        for (std::size_t t = w; t < total; t += workers) {
          const Symbol& F = monos[t / monos.size()];
          const Symbol& G = monos[t % monos.size()];
          if (!(star_explicit(F, G) == star_quant(F, G, half())))
            return static_cast<long>(t);
        }
        return -1;
      }));
    }
    for (auto& f : futs) {
      long bad = f.get();
      if (bad >= 0) {
        detail = "mismatch at n=" + std::to_string(n) + ", pair #" +
                 std::to_string(bad);
        return false;
      }
    }
    detail += "n=" + std::to_string(n) + ": " + std::to_string(total) +
              " pairs; ";
  }
  return true;
}

// ---------------------------------------------------------------------------
// 2. Normalization of the coefficient tables from the closed form and from
//    the independent level solver, k, l <= 5, n <= 4.
bool criterion_normalization(std::string& detail) {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= 5; ++k)
      for (int l = 0; l <= 5; ++l) {
        if (!(star_coefficient(n, k, l, 0, 0, 0, 0) == Rational(1))) {
          detail = "closed-form unit slot fails";
          return false;
        }
        if (k >= 1 && !(star_coefficient(n, k, l, 1, 0, 0, 0) == half())) {
          detail = "closed-form slot (1,0,0,0) fails";
          return false;
        }
        if (l >= 1 && !(star_coefficient(n, k, l, 0, 1, 0, 0) == -half())) {
          detail = "closed-form slot (0,1,0,0) fails";
          return false;
        }
      }
    CoeffSolver solver(n);
    solver.solve(5, 5, 1);
    for (int k = 0; k <= 5; ++k)
      for (int l = 0; l <= 5; ++l) {
        if (!(solver.value(k, l, 0, 0, 0, 0) == Rational(1))) {
          detail = "solver unit slot fails";
          return false;
        }
        if (k >= 1 && !(solver.value(k, l, 1, 0, 0, 0) == half())) {
          detail = "solver slot (1,0,0,0) fails";
          return false;
        }
        if (l >= 1 && !(solver.value(k, l, 0, 1, 0, 0) == -half())) {
          detail = "solver slot (0,1,0,0) fails";
          return false;
        }
        // The solved order-1 level also pins the divergence slots to zero.
        if (k >= 1 && !(solver.value(k, l, 0, 0, 1, 0) == Rational(0))) {
          detail = "solver slot (0,0,1,0) fails";
          return false;
        }
        if (l >= 1 && !(solver.value(k, l, 0, 0, 0, 1) == Rational(0))) {
          detail = "solver slot (0,0,0,1) fails";
          return false;
        }
      }
  }
  detail = "closed form and solver agree on both normalizations";
  return true;
}

// ---------------------------------------------------------------------------
// 3. Recursion residuals: both inversion recursions vanish on the closed
//    form for orders <= 4 (k, l <= 3, n <= 3); the coefficient-level
//    associativity residuals vanish for r <= 3, k, l, m <= 2, n = 1.
bool criterion_residuals(std::string& detail) {
  CoeffFn fn = closed_form_coeffs();
  long inv_count = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l)
        for (const auto& sv : multi_indices(4, 3))
          for (int which : {1, 2}) {
            std::array<int, 4> seed{sv[0], sv[1], sv[2], sv[3]};
            if (!inversion_seed_admissible(which, k, l, seed)) continue;
            ++inv_count;
            if (!inversion_residual(which, n, k, l, seed, fn).is_zero()) {
              detail = "inversion residual nonzero at n=" + std::to_string(n);
              return false;
            }
          }
  long assoc_count = 0;
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l)
      for (int m = 0; m <= 2; ++m)
        for (int r = 0; r <= 3; ++r) {
          ++assoc_count;
          if (!assoc_residual(1, k, l, m, r, fn).empty()) {
            detail = "associativity residual nonzero at (" +
                     std::to_string(k) + "," + std::to_string(l) + "," +
                     std::to_string(m) + "), r=" + std::to_string(r);
            return false;
          }
        }
  detail = std::to_string(inv_count) + " inversion instances, " +
           std::to_string(assoc_count) + " associativity blocks";
  return true;
}

// ---------------------------------------------------------------------------
// 4. The half-density expansion starts Id + (h/2) D: c_1(e) = 1/2 for all
//    eigenvalues 0..10 and n <= 4.
bool criterion_first_order(std::string& detail) {
  for (int n = 1; n <= 4; ++n)
    for (int e = 0; e <= 10; ++e)
      if (!(series_coeff(n, half(), 1, e) == half())) {
        detail = "c_1 differs at n=" + std::to_string(n) +
                 ", e=" + std::to_string(e);
        return false;
      }
  detail = "c_1(e) = 1/2 on all 44 tested eigenvalues";
  return true;
}

// ---------------------------------------------------------------------------
// 5. Star-product properties for every projective generator, n = 1..3,
//    at least 100 seeded random cases per property. All exact.
bool criterion_star_properties(std::string& detail) {
  const int kCases = 100;
  for (int n = 1; n <= 3; ++n) {
    auto fam = projective_generators(n);
    Rng rng(check_seed(2024, "acceptance-star-n" + std::to_string(n)));
    for (int c = 0; c < kCases; ++c) {
      Symbol F = rng.symbol(n, 3, 3, 0, 3);
      Symbol G = rng.symbol(n, 3, 3, 0, 3);
      const VectorField& X = fam.members[c % fam.members.size()];
      const VectorField& Y =
          fam.members[(c / fam.members.size()) % fam.members.size()];
      Symbol JX = moment(X), JY = moment(Y);

      if (!(star_explicit(JX, F) - star_explicit(F, JX) ==
            poisson(JX, F).mul_h(1))) {
        detail = "strong invariance fails, n=" + std::to_string(n);
        return false;
      }
      if (!(star_explicit(JX, JY) - star_explicit(JY, JX) ==
            poisson(JX, JY).mul_h(1))) {
        detail = "covariance fails, n=" + std::to_string(n);
        return false;
      }
      Symbol FG = star_explicit(F, G);
      if (!(lift_lie(X, FG) == star_explicit(lift_lie(X, F), G) +
                                   star_explicit(F, lift_lie(X, G)))) {
        detail = "infinitesimal invariance fails, n=" + std::to_string(n);
        return false;
      }
      if (!(FG.conj() == star_explicit(G.conj(), F.conj()))) {
        detail = "symmetry fails, n=" + std::to_string(n);
        return false;
      }
      if (!(FG.euler_hat() == star_explicit(F.euler_hat(), G) +
                                  star_explicit(F, G.euler_hat()))) {
        detail = "homogeneity fails, n=" + std::to_string(n);
        return false;
      }
    }
  }
  detail = "5 properties x 100 cases x n=1..3, every projective generator";
  return true;
}

// ---------------------------------------------------------------------------
// 6. Operator identities on the bounded basis (x <= 3, xi <= 4).
bool criterion_operator_identities(std::string& detail) {
  Bounds b{3, 4, 0};
  for (int n = 1; n <= 3; ++n) {
    if (!(OpTable(commutator(op_euler(), op_divergence()), n, b) ==
          OpTable(scale(Rational(-1), op_divergence()), n, b))) {
      detail = "[E,D] != -D at n=" + std::to_string(n);
      return false;
    }
    auto inv = inversions(n);
    for (int i = 1; i <= n; ++i) {
      LinOp lhs = commutator(op_lift(inv[i - 1]), op_divergence());
      LinOp rhs = compose(scale(Rational(2), op_euler()) +
                              scale(Rational(n + 1), op_identity()),
                          op_dxi(i));
      if (!(OpTable(lhs, n, b) == OpTable(rhs, n, b))) {
        detail = "inversion relation fails at n=" + std::to_string(n);
        return false;
      }
    }
  }
  {
    std::vector<int> met{1};
    if (!(OpTable(op_R0(met), 1, b) ==
          OpTable(compose(op_euler(), op_euler() - op_identity()), 1, b))) {
      detail = "R0 != E(E-1) at n=1";
      return false;
    }
  }
  for (int n = 1; n <= 2; ++n) {
    if (!commutant_check(projective_generators(n), op_euler(), b).commutes) {
      detail = "E leaves the projective commutant";
      return false;
    }
    auto conf = conformal_generators(n, 0);
    if (!commutant_check(conf, op_euler(), b).commutes ||
        !commutant_check(conf, op_R0(conf.metric), b).commutes) {
      detail = "E or R0 leaves the conformal commutant";
      return false;
    }
    auto repD = commutant_check(conf, op_divergence(), b);
    if (repD.commutes) {
      detail = "D unexpectedly sits in the conformal commutant";
      return false;
    }
  }
  detail = "affine, inversion, sl2 reduction and commutant checks";
  return true;
}

// ---------------------------------------------------------------------------
// 7. Bivectors: invariance of Pi under both families; invariance of the
//    quadratic bivector for both n = 2 signatures; the displayed bracket.
bool criterion_bivectors(std::string& detail) {
  for (int n = 1; n <= 3; ++n) {
    Multivector Pi = pi_bivector(n);
    for (const auto& X : projective_generators(n).members)
      if (!lie_derive(X, Pi).is_zero()) {
        detail = "Pi moves under a projective lift";
        return false;
      }
    for (const auto& X : conformal_generators(n, 0).members)
      if (!lie_derive(X, Pi).is_zero()) {
        detail = "Pi moves under a conformal lift";
        return false;
      }
  }
  for (auto [p, q] : {std::pair<int, int>{2, 0}, {1, 1}}) {
    Multivector L = lambda_bivector(p, q);
    for (const auto& X : conformal_generators(p, q).members)
      if (!lie_derive(X, L).is_zero()) {
        detail = "Lambda moves under conformal (" + std::to_string(p) + "," +
                 std::to_string(q) + ")";
        return false;
      }
  }
  Multivector expected(2, 3);
  expected.add_term({0, 1, 2}, Rational(2) * Symbol::xi(2, 1));
  expected.add_term({0, 1, 3}, Rational(2) * Symbol::xi(2, 2));
  if (!(schouten(pi_bivector(2), lambda_bivector(2, 0)) == expected)) {
    detail = "[Pi, Lambda] differs from the displayed bracket";
    return false;
  }
  detail = "Pi and Lambda invariance plus the nonzero compatibility bracket";
  return true;
}

// ---------------------------------------------------------------------------
// 8. Hochschild: d(dA) = 0 on 100+ random one-cochains; the moment-map
//    operator condition Q(J_X) = h L_X for lambda in {1/3, 1/2, 1}.
bool criterion_hochschild(std::string& detail) {
  Rng rng(check_seed(2024, "acceptance-hochschild"));
  int n = 2;
  std::vector<int> met{1, 1};
  std::vector<LinOp> pool{op_euler(),  op_divergence(), op_T(met),
                          op_R(met),   op_G(met),       op_Delta(met),
                          op_dxi(1),   op_dx(2),
                          op_mult(Symbol::x(n, 1) * Symbol::xi(n, 2))};
  for (int c = 0; c < 110; ++c) {
    LinOp A = scale(rng.rational(), pool[rng.uniform(0, 8)]);
    int extra = rng.uniform(0, 2);
    for (int e = 0; e < extra; ++e)
      A = A + scale(rng.rational(), pool[rng.uniform(0, 8)]);
    if (rng.uniform(0, 3) == 0)
      A = compose(A, pool[rng.uniform(0, 8)]);
    Cochain one(Cochain1([A](const Symbol& F) { return A(F); }));
    Cochain dd = hochschild_delta(hochschild_delta(one));
    Symbol F = rng.symbol(n, 2, 2, 0, 2);
    Symbol G = rng.symbol(n, 2, 2, 0, 2);
    Symbol H = rng.symbol(n, 2, 2, 0, 2);
    if (!dd(F, G, H).is_zero()) {
      detail = "d(dA) != 0 at case " + std::to_string(c);
      return false;
    }
  }
  for (int dim = 1; dim <= 3; ++dim)
    for (const Rational& lam : {Rational(1, 3), half(), Rational(1)})
      for (const auto& X : projective_generators(dim).members)
        if (!(quantize(moment(X), lam) == density_op(X, lam))) {
          detail = "moment condition fails at n=" + std::to_string(dim);
          return false;
        }
  detail = "110 coboundary-squared cases and the moment condition";
  return true;
}

// ---------------------------------------------------------------------------
// 9. Equivalence-class demonstration: Id + hE preserves the invariance
//    checks and breaks the homogeneity check.
bool criterion_equivalence_class(std::string& detail) {
  int cap = 6;
  EquivalenceMap phi;
  phi.layers.emplace_back(1, op_euler());
  StarFn canonical = [](const Symbol& F, const Symbol& G) {
    return star_explicit(F, G);
  };
  for (int n : {1, 2}) {
    StarFn st = transform_star(canonical, phi, {}, cap);
    auto fam = projective_generators(n);
    Rng rng(check_seed(2024, "acceptance-equivalence-n" + std::to_string(n)));
    bool homogeneity_broken = false;
    for (int c = 0; c < 25; ++c) {
      Symbol F = rng.symbol(n, 2, 2, 0, 2);
      Symbol G = rng.symbol(n, 2, 2, 0, 2);
      for (const auto& X : fam.members) {
        Symbol lhs = truncate_nu(lift_lie(X, st(F, G)), cap);
        Symbol rhs = truncate_nu(
            st(lift_lie(X, F), G) + st(F, lift_lie(X, G)), cap);
        if (!(lhs == rhs)) {
          detail = "transformed product lost invariance at n=" +
                   std::to_string(n);
          return false;
        }
      }
      Symbol lhs = truncate_nu(st(F, G).euler_hat(), cap);
      Symbol rhs =
          truncate_nu(st(F.euler_hat(), G) + st(F, G.euler_hat()), cap);
      if (!(lhs == rhs)) homogeneity_broken = true;
    }
    if (!homogeneity_broken) {
      detail = "homogeneity survived the transform at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "invariance preserved, homogeneity witness found (n=1,2)";
  return true;
}

// ---------------------------------------------------------------------------
// 10. CLI golden files: byte-exact coefficient tables and star outputs.
struct RunOut {
  int status = -1;
  std::string out;
};

RunOut run_cli(const std::string& args) {
  RunOut r;
  std::string cmd = std::string(STARQ_BIN_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), got);
  r.status = WEXITSTATUS(pclose(p));
  return r;
}

std::string read_file(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return {};
  std::string s;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0)
    s.append(buf.data(), got);
  std::fclose(f);
  return s;
}

bool criterion_cli_golden(std::string& detail) {
  struct Case {
    std::string args;
    std::string golden;
  };
  std::vector<Case> cases{
      {"coeffs -n 1 -k 1 -l 1 --r-max 3", "coeffs_n1_k1_l1_r3.csv"},
      {"coeffs -n 2 -k 2 -l 1 --r-max 3", "coeffs_n2_k2_l1_r3.csv"},
      {"star -n 1 --route both \"xi1\" \"x1\"", "star_both_n1.txt"},
      {"star -n 2 \"xi1\" \"xi2\"", "star_fiber_n2.txt"},
      {"star -n 1 \"1\" \"x1^3\"", "star_unit_n1.txt"},
      {"quantize -n 1 --lambda 1/2 \"x1*xi1^2\"", "quantize_n1.txt"},
  };
  for (const auto& c : cases) {
    RunOut got = run_cli(c.args);
    if (got.status != 0) {
      detail = "nonzero exit for: " + c.args;
      return false;
    }
    std::string want = read_file(std::string(GOLDEN_DIR) + "/" + c.golden);
    if (want.empty()) {
      detail = "missing golden file " + c.golden;
      return false;
    }
    if (got.out != want) {
      detail = "output differs for: " + c.args;
      return false;
    }
  }
  // Determinism: a second run must be byte-identical.
  RunOut a = run_cli(cases[0].args), b = run_cli(cases[0].args);
  if (a.out != b.out) {
    detail = "nondeterministic coefficient table output";
    return false;
  }
  detail = std::to_string(cases.size()) + " golden comparisons, byte-exact";
  return true;
}

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "route equivalence of the two star-product constructions",
       criterion_route_equivalence},
      {2, "coefficient normalization from closed form and solver",
       criterion_normalization},
      {3, "inversion and associativity recursion residuals vanish",
       criterion_residuals},
      {4, "half-density expansion has first-order coefficient 1/2",
       criterion_first_order},
      {5, "strong invariance, covariance, invariance, symmetry, homogeneity",
       criterion_star_properties},
      {6, "operator identities and commutant membership",
       criterion_operator_identities},
      {7, "bivector invariance and the compatibility bracket",
       criterion_bivectors},
      {8, "coboundary of coboundary vanishes; moment-map condition",
       criterion_hochschild},
      {9, "equivalence transform keeps invariance, breaks homogeneity",
       criterion_equivalence_class},
      {10, "CLI golden files are byte-exact", criterion_cli_golden},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
              << c.title;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
  }
  if (failures == 0)
    std::cout << "all acceptance criteria satisfied" << std::endl;
  else
    std::cout << failures << " criterion(s) failed" << std::endl;
  return failures;
}
