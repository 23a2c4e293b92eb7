#include "starq/quantize.hpp"

#include <stdexcept>

#include "starq/pair_symbol.hpp"

namespace starq {

Rational series_coeff(int n, const Rational& lambda, int r, int e) {
  if (r < 0 || e < 0) throw std::invalid_argument("series_coeff: bad indices");
  Rational num = pochhammer(Rational(e) + Rational(n + 1) * lambda,
                            static_cast<unsigned>(r));
  Rational den = factorial(static_cast<unsigned>(r)) *
                 pochhammer(Rational(2 * e + n + r), static_cast<unsigned>(r));
  return num / den;
}

DiffOpSymbol quantize(const Symbol& F, const Rational& lambda) {
  int n = F.dim();
  Symbol total(n);
  Symbol cur = F;
  for (int r = 0; !cur.is_zero(); ++r) {
    for (const auto& [e, part] : cur.graded())
      total += series_coeff(n, lambda, r, e) * part.mul_h(r);
    cur = divergence(cur);
  }
  return DiffOpSymbol{total, lambda};
}

Symbol dequantize(const DiffOpSymbol& A) {
  int n = A.dim();
  int kmax = A.total.xi_degree();
  if (kmax < 0) return Symbol(n);

  // Q(F)'s degree-m component is F_m + sum_r c_r(m) h^r D^r F_{m+r};
  // solve for F_m from the top degree down.
  std::vector<Symbol> parts(kmax + 1, Symbol(n));
  for (int m = kmax; m >= 0; --m) {
    Symbol rhs = A.total.graded_part(m);
    for (int r = 1; m + r <= kmax; ++r) {
      Symbol d = parts[m + r];
      for (int j = 0; j < r; ++j) d = divergence(d);
      rhs -= series_coeff(n, A.lambda, r, m) * d.mul_h(r);
    }
    parts[m] = rhs;
  }
  Symbol F(n);
  for (const auto& p : parts) F += p;
  return F;
}

DiffOpSymbol compose(const DiffOpSymbol& A, const DiffOpSymbol& B) {
  if (A.lambda != B.lambda)
    throw std::invalid_argument("compose: density weight mismatch");
  require_same_dim(A.total, B.total);
  // sum_m (h^|m|/m!) dxi^m A dx^m B as a terminating contraction series on
  // the doubled space, restricted back to the diagonal.
  PairSymbol P = tensor(A.total, B.total);
  Symbol out(A.dim());
  Rational inv_fact(1);
  for (int t = 0; !P.is_zero(); ++t) {
    if (t > 0) inv_fact /= Rational(t);
    out += inv_fact * restrict_diagonal(P).mul_h(t);
    P = contract(Contraction::XiY, P);
  }
  return DiffOpSymbol{out, A.lambda};
}

Symbol star_quant(const Symbol& F, const Symbol& G, const Rational& lambda) {
  return dequantize(compose(quantize(F, lambda), quantize(G, lambda)));
}

DiffOpSymbol adjoint(const DiffOpSymbol& A) {
  if (A.lambda != half())
    throw std::invalid_argument("adjoint: defined on half-densities only");
  // Integration by parts at the symbol level: flip h, then re-normal-order
  // with the terminating contraction series sum_m (h^|m|/m!) dx^m dxi^m.
  Symbol cur = A.total.conj();
  Symbol out(A.dim());
  Rational inv_fact(1);
  for (int t = 0; !cur.is_zero(); ++t) {
    if (t > 0) inv_fact /= Rational(t);
    out += inv_fact * cur.mul_h(t);
    Symbol next(A.dim());
    for (int i = 1; i <= A.dim(); ++i) next += cur.diff_x(i).diff_xi(i);
    cur = next;
  }
  return DiffOpSymbol{out, A.lambda};
}

DiffOpSymbol density_op(const VectorField& X, const Rational& lambda) {
  Symbol total = moment(X) + (lambda * vf_divergence(X)).mul_h(1);
  return DiffOpSymbol{total, lambda};
}

EquivarianceReport check_equivariance(const Rational& lambda,
                                      const GeneratorFamily& family,
                                      const std::vector<Symbol>& samples) {
  EquivarianceReport rep;
  for (std::size_t g = 0; g < family.members.size(); ++g) {
    const VectorField& X = family.members[g];
    DiffOpSymbol LX = density_op(X, lambda);

    DiffOpSymbol QJ = quantize(moment(X), lambda);
    if (!(QJ == LX)) {
      rep.pass = false;
      rep.witness = "moment condition fails for generator " + std::to_string(g);
      return rep;
    }

    for (std::size_t s = 0; s < samples.size(); ++s) {
      DiffOpSymbol QF = quantize(samples[s], lambda);
      Symbol lhs = compose(LX, QF).total - compose(QF, LX).total;
      Symbol rhs = quantize(lift_lie(X, samples[s]), lambda).total.mul_h(1);
      if (!(lhs == rhs)) {
        rep.pass = false;
        rep.witness = "generator " + std::to_string(g) + ", sample " +
                      std::to_string(s);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace starq
