#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "starq/geometry.hpp"
#include "starq/symbol.hpp"

namespace starq {

/// Linear endomorphism of the symbol space, held extensionally.
class LinOp {
 public:
  LinOp() = default;
  explicit LinOp(std::function<Symbol(const Symbol&)> f) : f_(std::move(f)) {}

  Symbol operator()(const Symbol& F) const { return f_(F); }
  explicit operator bool() const { return static_cast<bool>(f_); }

 private:
  std::function<Symbol(const Symbol&)> f_;
};

LinOp op_identity();
LinOp op_zero();
/// E = xi_i d/dxi_i.
LinOp op_euler();
/// Graded Euler operator E + h d/dh.
LinOp op_euler_hat();
/// D = d/dx^i d/dxi_i.
LinOp op_divergence();
LinOp op_dx(int i);
LinOp op_dxi(int i);
LinOp op_mult(const Symbol& F);
/// Lie derivative along the canonical lift, F -> {J_X, F}.
LinOp op_lift(const VectorField& X);

/// Metric-dependent operators of the flat conformal chart; metric is the
/// diagonal of +-1 entries.
LinOp op_R(const std::vector<int>& metric);      // multiplication by xi^i xi_i
LinOp op_T(const std::vector<int>& metric);      // d/dxi^i d/dxi_i
LinOp op_G(const std::vector<int>& metric);      // xi^i d/dx^i
LinOp op_Delta(const std::vector<int>& metric);  // d/dx^i d/dx_i
LinOp op_R0(const std::vector<int>& metric);     // R o T
LinOp op_G0(const std::vector<int>& metric);     // G o T
LinOp op_Delta0(const std::vector<int>& metric); // Delta o T

LinOp compose(const LinOp& A, const LinOp& B);
LinOp operator+(const LinOp& A, const LinOp& B);
LinOp operator-(const LinOp& A, const LinOp& B);
LinOp scale(const Rational& c, const LinOp& A);
LinOp commutator(const LinOp& A, const LinOp& B);

/// Monomial-degree bounds for extensional operator comparison: total base
/// degree, total fiber degree, h power.
struct Bounds {
  int x_max = 3;
  int xi_max = 4;
  int nu_max = 0;
};

std::vector<Exponents> monomial_basis(int n, const Bounds& b);

/// Extensional table of an operator on the bounded monomial basis.
class OpTable {
 public:
  OpTable(const LinOp& op, int n, const Bounds& b);

  bool is_zero() const;
  /// First basis monomial with a nonzero image, if any.
  std::optional<Exponents> nonzero_witness() const;
  friend bool operator==(const OpTable& a, const OpTable& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<std::pair<Exponents, Symbol>> images_;
};

OpTable commutator_table(const LinOp& A, const LinOp& B, int n, const Bounds& b);

struct CommutantReport {
  bool commutes = true;
  std::optional<Exponents> witness;  // failing monomial
  int generator_index = -1;          // member of the family that failed
};

/// Checks [lift X, candidate] = 0 on the bounded basis for every generator.
CommutantReport commutant_check(const GeneratorFamily& family,
                                const LinOp& candidate, const Bounds& b);

}  // namespace starq
