#pragma once

#include <map>

#include "starq/symbol.hpp"

namespace starq {

/// Exponents on the doubled space: first factor (x, xi), second (y, eta).
struct PairExponents {
  std::vector<int> x, xi, y, eta;
  int nu = 0;
  friend auto operator<=>(const PairExponents&, const PairExponents&) = default;
};

/// Polynomial on T*R^n x T*R^n representing F(x,xi) (x) G(y,eta), with a
/// shared deformation parameter.
class PairSymbol {
 public:
  explicit PairSymbol(int n) : n_(n) {}

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<PairExponents, Rational>& terms() const { return terms_; }
  void add_term(const PairExponents& e, const Rational& c);

  PairSymbol& operator+=(const PairSymbol& o);
  friend PairSymbol operator*(const Rational& c, const PairSymbol& p);

 private:
  int n_;
  std::map<PairExponents, Rational> terms_;
};

PairSymbol tensor(const Symbol& F, const Symbol& G);

/// Second-order contraction operators on the doubled space, each summed
/// over the coordinate index:
///   XiY  = d/dxi d/dy   (fiber of the first, base of the second)
///   EtaX = d/deta d/dx  (fiber of the second, base of the first)
///   XiX  = d/dxi d/dx   (divergence of the first factor)
///   EtaY = d/deta d/dy  (divergence of the second factor)
enum class Contraction { XiY, EtaX, XiX, EtaY };

PairSymbol contract(Contraction op, const PairSymbol& P);
PairSymbol contract_pow(Contraction op, unsigned k, const PairSymbol& P);

/// Restriction to eta = xi, y = x (multiplies the two factors together).
Symbol restrict_diagonal(const PairSymbol& P);

}  // namespace starq
