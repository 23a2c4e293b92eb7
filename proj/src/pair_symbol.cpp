#include "starq/pair_symbol.hpp"

namespace starq {

void PairSymbol::add_term(const PairExponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PairSymbol& PairSymbol::operator+=(const PairSymbol& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PairSymbol operator*(const Rational& c, const PairSymbol& p) {
  PairSymbol r(p.dim());
  if (c.is_zero()) return r;
  for (const auto& [e, v] : p.terms()) r.add_term(e, c * v);
  return r;
}

PairSymbol tensor(const Symbol& F, const Symbol& G) {
  require_same_dim(F, G);
  int n = F.dim();
  PairSymbol r(n);
  for (const auto& [ef, cf] : F.terms()) {
    for (const auto& [eg, cg] : G.terms()) {
      PairExponents e;
      e.x = ef.x;
      e.xi = ef.xi;
      e.y = eg.x;
      e.eta = eg.xi;
      e.nu = ef.nu + eg.nu;
      r.add_term(e, cf * cg);
    }
  }
  return r;
}

namespace {

// Differentiate slot s (0=x,1=xi,2=y,3=eta) of one term at index i.
bool diff_slot(PairExponents& e, Rational& c, int slot, int i) {
  std::vector<int>* v = nullptr;
  switch (slot) {
    case 0: v = &e.x; break;
    case 1: v = &e.xi; break;
    case 2: v = &e.y; break;
    default: v = &e.eta; break;
  }
  int p = (*v)[i];
  if (p == 0) return false;
  (*v)[i] = p - 1;
  c *= Rational(p);
  return true;
}

}  // namespace

PairSymbol contract(Contraction op, const PairSymbol& P) {
  int sa = 0, sb = 0;
  switch (op) {
    case Contraction::XiY: sa = 1; sb = 2; break;
    case Contraction::EtaX: sa = 3; sb = 0; break;
    case Contraction::XiX: sa = 1; sb = 0; break;
    case Contraction::EtaY: sa = 3; sb = 2; break;
  }
  PairSymbol r(P.dim());
  for (const auto& [e, c] : P.terms()) {
    for (int i = 0; i < P.dim(); ++i) {
      PairExponents d = e;
      Rational v = c;
      if (!diff_slot(d, v, sa, i)) continue;
      if (!diff_slot(d, v, sb, i)) continue;
      r.add_term(d, v);
    }
  }
  return r;
}

PairSymbol contract_pow(Contraction op, unsigned k, const PairSymbol& P) {
  PairSymbol r = P;
  for (unsigned j = 0; j < k && !r.is_zero(); ++j) r = contract(op, r);
  return r;
}

Symbol restrict_diagonal(const PairSymbol& P) {
  Symbol r(P.dim());
  for (const auto& [e, c] : P.terms()) {
    Exponents d;
    d.x = e.x;
    d.xi = e.xi;
    for (int i = 0; i < P.dim(); ++i) {
      d.x[i] += e.y[i];
      d.xi[i] += e.eta[i];
    }
    d.nu = e.nu;
    r.add_term(d, c);
  }
  return r;
}

}  // namespace starq
