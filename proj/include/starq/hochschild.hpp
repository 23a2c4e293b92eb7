#pragma once

#include <functional>
#include <stdexcept>

#include "starq/symbol.hpp"

namespace starq {

using Cochain1 = std::function<Symbol(const Symbol&)>;
using Cochain2 = std::function<Symbol(const Symbol&, const Symbol&)>;
using Cochain3 =
    std::function<Symbol(const Symbol&, const Symbol&, const Symbol&)>;

/// Hochschild cochain on the symbol algebra, of arity 1, 2 or 3, held
/// extensionally as a multilinear map.
class Cochain {
 public:
  explicit Cochain(Cochain1 f) : arity_(1), f1_(std::move(f)) {}
  explicit Cochain(Cochain2 f) : arity_(2), f2_(std::move(f)) {}
  explicit Cochain(Cochain3 f) : arity_(3), f3_(std::move(f)) {}

  int arity() const { return arity_; }

  Symbol operator()(const Symbol& F) const {
    require_arity(1);
    return f1_(F);
  }
  Symbol operator()(const Symbol& F, const Symbol& G) const {
    require_arity(2);
    return f2_(F, G);
  }
  Symbol operator()(const Symbol& F, const Symbol& G, const Symbol& H) const {
    require_arity(3);
    return f3_(F, G, H);
  }

 private:
  void require_arity(int a) const {
    if (arity_ != a)
      throw std::logic_error("Cochain: wrong arity for this call");
  }
  int arity_;
  Cochain1 f1_;
  Cochain2 f2_;
  Cochain3 f3_;
};

/// Hochschild coboundary:
///   (dA)(F,G)    = F A(G) - A(FG) + A(F) G          for arity 1,
///   (dB)(F,G,H)  = F B(G,H) - B(FG,H) + B(F,GH) - B(F,G) H  for arity 2.
/// Arity 3 is unsupported.
inline Cochain hochschild_delta(const Cochain& C) {
  if (C.arity() == 1) {
    return Cochain(Cochain2([C](const Symbol& F, const Symbol& G) {
      return F * C(G) - C(F * G) + C(F) * G;
    }));
  }
  if (C.arity() == 2) {
    return Cochain(
        Cochain3([C](const Symbol& F, const Symbol& G, const Symbol& H) {
          return F * C(G, H) - C(F * G, H) + C(F, G * H) - C(F, G) * H;
        }));
  }
  throw std::invalid_argument("hochschild_delta: unsupported arity");
}

}  // namespace starq
