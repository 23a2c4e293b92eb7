#pragma once

#include <map>
#include <optional>
#include <vector>

#include "starq/symbol.hpp"

namespace starq {

/// Polynomial vector field X = X^i d/dx^i on the base R^n. Components are
/// fiber-free, h-free symbols.
struct VectorField {
  int n;
  std::vector<Symbol> comp;  // length n

  static VectorField zero(int n);
};

VectorField vf_bracket(const VectorField& X, const VectorField& Y);
Symbol vf_divergence(const VectorField& X);

/// Moment map J_X = xi_i X^i of the canonical cotangent lift.
Symbol moment(const VectorField& X);

/// Lie derivative along the canonical lift of X, computed as {J_X, F}.
Symbol lift_lie(const VectorField& X, const Symbol& F);

/// Lie derivative on lambda-densities:
/// L_X^lambda f = X^i df/dx^i + lambda (dX^i/dx^i) f, for fiber-free f.
Symbol density_lie(const VectorField& X, const Rational& lambda,
                   const Symbol& f);

enum class GeometryKind { Projective, Conformal };

/// Symmetry generator family in an adapted flat chart. The projective
/// family has n^2 + 2n members (translations, linear maps, inversions);
/// the conformal family has (n+1)(n+2)/2 (translations, rotations,
/// homothety, inversions), with the flat diagonal metric of signature
/// (p, q) used for raising and lowering indices.
struct GeneratorFamily {
  GeometryKind kind;
  int n = 0;
  int p = 0, q = 0;            // conformal signature, n = p + q
  std::vector<int> metric;     // diagonal +-1 entries, conformal only
  std::vector<VectorField> members;
};

GeneratorFamily projective_generators(int n);
GeneratorFamily conformal_generators(int p, int q);

/// Polynomial-coefficient multivector field on T*R^n. Frame directions are
/// indexed 0..2n-1: index i < n is d/dxi_{i+1}, index n+i is d/dx^{i+1}.
/// Coefficients are stored on strictly increasing index tuples.
class Multivector {
 public:
  Multivector(int n, int degree);

  int dim() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Symbol>& terms() const { return terms_; }

  /// Accumulates c on a (not necessarily sorted) index tuple; the sign of
  /// the sorting permutation is absorbed into the coefficient. Tuples with
  /// repeated indices vanish.
  void add_term(std::vector<int> dirs, const Symbol& c);

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);

 private:
  int n_;
  int degree_;
  std::map<std::vector<int>, Symbol> terms_;
};

/// Graded Schouten-Nijenhuis bracket; degree deg V + deg W - 1. Reduces to
/// the Lie bracket on vector fields and pairs the canonical bivector with
/// itself to zero.
Multivector schouten(const Multivector& V, const Multivector& W);

/// The canonical lift of X as a 1-multivector on T*R^n:
/// X^i d/dx^i - xi_j dX^j/dx^i d/dxi_i.
Multivector lift_multivector(const VectorField& X);

/// Lie derivative of a multivector along the lift of X.
Multivector lie_derive(const VectorField& X, const Multivector& W);

/// Canonical Poisson bivector d/dxi_i ^ d/dx^i with unit coefficients.
Multivector pi_bivector(int n);

/// The second invariant bivector of the two-dimensional conformal chart:
/// (g^{ij} xi_i xi_j) d/dxi_1 ^ d/dxi_2, with the flat surface element
/// absorbed into the normalization. Only defined for n = p + q = 2.
Multivector lambda_bivector(int p, int q);

struct CanonicalBivectors {
  Multivector pi;
  std::optional<Multivector> lambda;
};

CanonicalBivectors canonical_bivectors(int n, const GeneratorFamily& family);

}  // namespace starq
