#pragma once

#include <array>
#include <map>
#include <vector>

#include "starq/star.hpp"

namespace starq {

/// Independent determination of the star-product coefficient tables,
/// sharing nothing with the closed forms: order by order, each table level
/// is the unique solution of an affine system assembled extensionally from
///   - the unit and Poisson-bracket normalization at orders 0 and 1,
///   - invariance under the lifts of the inversion generators,
///   - associativity against fiber-degree-zero factors.
/// Every level is checked to be uniquely solvable and consistent.
class CoeffSolver {
 public:
  explicit CoeffSolver(int n);

  /// Solves every table (k, l) with k <= kmax, l <= lmax through order
  /// rmax. Auxiliary tables (K, 0), K <= kmax + lmax, are solved first at
  /// each order; associativity links a table's scale to them.
  void solve(int kmax, int lmax, int rmax);

  /// Solved value under the annihilation convention. Throws if the entry
  /// lies outside the solved range.
  Rational value(int k, int l, int a, int b, int g, int d) const;

  CoeffFn fn() const;
  int dim() const { return n_; }

 private:
  void solve_level(int k, int l, int r);

  int n_;
  std::vector<VectorField> inversions_;
  std::map<std::array<int, 2>, std::map<std::array<int, 4>, Rational>> values_;
  std::map<std::array<int, 2>, int> solved_level_;

  // Lookup state while a level is being solved.
  struct Probe {
    int k = -1, l = -1, r = -1;
    std::vector<std::array<int, 4>> slots;
    std::vector<Rational> vals;
  };
  Probe probe_;
  Rational lookup(int k, int l, int a, int b, int g, int d) const;
};

/// Exact Gaussian elimination over the rationals on an augmented system.
struct LinearSolution {
  bool consistent = false;
  bool unique = false;
  std::vector<Rational> x;
};
LinearSolution solve_linear(std::vector<std::vector<Rational>> rows,
                            std::size_t ncols);

}  // namespace starq
