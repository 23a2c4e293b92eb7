#pragma once

#include <string>
#include <vector>

#include "starq/geometry.hpp"
#include "starq/symbol.hpp"

namespace starq {

/// Total symbol of a differential operator on lambda-densities under normal
/// ordering: a term f(x) h^p xi^b stands for the operator h^(p+|b|) f(x) d^b
/// with all derivatives to the right.
struct DiffOpSymbol {
  Symbol total;
  Rational lambda;

  int dim() const { return total.dim(); }
  friend bool operator==(const DiffOpSymbol& a, const DiffOpSymbol& b) {
    return a.lambda == b.lambda && a.total == b.total;
  }
};

/// Series coefficient c_r(e) = (e + (n+1) lambda)_r / (r! (2e + n + r)_r)
/// acting on the fiber-degree-e eigenspace. The denominator is nonzero for
/// every e >= 0, n >= 1.
Rational series_coeff(int n, const Rational& lambda, int r, int e);

/// Equivariant quantization: Q(F) = sum_r c_r(E) (h D)^r F, evaluated
/// spectrally on the grading of D^r F. Terminates since D lowers the fiber
/// degree.
DiffOpSymbol quantize(const Symbol& F, const Rational& lambda);

/// Exact inverse of quantize, by descending-fiber-degree elimination.
Symbol dequantize(const DiffOpSymbol& A);

/// Normal-ordered operator composition:
/// (A o B)(x, xi) = sum_m (h^|m| / m!) dxi^m A dx^m B.
DiffOpSymbol compose(const DiffOpSymbol& A, const DiffOpSymbol& B);

/// Star-product through the quantization map:
/// F * G = Q^{-1}(Q(F) o Q(G)). A genuine star-product for lambda = 1/2.
Symbol star_quant(const Symbol& F, const Symbol& G, const Rational& lambda);

/// Formal adjoint on half-densities (lambda must be 1/2). Involutive.
DiffOpSymbol adjoint(const DiffOpSymbol& A);

/// Total symbol of h L_X^lambda, the density Lie derivative as an operator:
/// J_X + h lambda div X.
DiffOpSymbol density_op(const VectorField& X, const Rational& lambda);

struct EquivarianceReport {
  bool pass = true;
  std::string witness;  // description of the first failing combination
};

/// Verifies [h L_X^lambda, Q(F)] = h Q(L_X F) for every generator and every
/// sample, and the moment-map condition Q(J_X) = h L_X^lambda.
EquivarianceReport check_equivariance(const Rational& lambda,
                                      const GeneratorFamily& family,
                                      const std::vector<Symbol>& samples);

}  // namespace starq
