#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "starq/rational.hpp"

namespace starq {

/// Exponent data of one symbol term: x^a xi^b h^nu with h the formal
/// deformation parameter (h = i*hbar).
struct Exponents {
  std::vector<int> x;   // base exponents, length n
  std::vector<int> xi;  // fiber exponents, length n
  int nu = 0;           // power of h

  friend auto operator<=>(const Exponents&, const Exponents&) = default;

  int x_degree() const {
    int d = 0;
    for (int e : x) d += e;
    return d;
  }
  int xi_degree() const {
    int d = 0;
    for (int e : xi) d += e;
    return d;
  }
};

/// Fiberwise-polynomial symbol on T*R^n with exact rational coefficients,
/// polynomial in the deformation parameter h. Immutable in use: every
/// operation returns a new value; zero coefficients are never stored.
class Symbol {
 public:
  explicit Symbol(int n);

  static Symbol constant(int n, const Rational& c);
  static Symbol x(int n, int i);   // coordinate x^i, 1-based
  static Symbol xi(int n, int i);  // fiber coordinate xi_i, 1-based
  static Symbol h(int n);          // deformation parameter

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  /// Accumulates c * x^a xi^b h^nu, pruning a resulting zero.
  void add_term(const Exponents& e, const Rational& c);
  Symbol term(const Exponents& e, const Rational& c) const;

  Symbol operator-() const;
  Symbol& operator+=(const Symbol& o);
  Symbol& operator-=(const Symbol& o);
  friend Symbol operator+(Symbol a, const Symbol& b) { return a += b; }
  friend Symbol operator-(Symbol a, const Symbol& b) { return a -= b; }
  friend Symbol operator*(const Symbol& a, const Symbol& b);
  friend Symbol operator*(const Rational& c, const Symbol& a);
  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  Symbol pow(unsigned k) const;

  Symbol diff_x(int i) const;   // d/dx^i, 1-based
  Symbol diff_xi(int i) const;  // d/dxi_i, 1-based

  /// h -> -h (complex conjugation of i*hbar on real symbols).
  Symbol conj() const;

  /// h -> c, substituting an h-free symbol value is not needed; this scales
  /// the h-grading: multiplies every term by h^k.
  Symbol mul_h(int k = 1) const;

  /// Coefficient of h^p as an h-free symbol.
  Symbol nu_coefficient(int p) const;
  int nu_degree() const;  // max h power, -1 for zero

  /// Exact division by h; throws if any term has nu == 0.
  Symbol div_h() const;

  int xi_degree() const;  // max fiber degree, -1 for zero
  int x_degree() const;   // max base degree, -1 for zero
  bool xi_free() const;

  /// Euler operator E = xi_i d/dxi_i: scales each term by its fiber degree.
  Symbol euler() const;
  /// Graded Euler operator: scales each term by fiber degree + h power.
  Symbol euler_hat() const;

  /// Part of fiber degree exactly k.
  Symbol graded_part(int k) const;
  /// Nonzero graded parts, ascending fiber degree.
  std::vector<std::pair<int, Symbol>> graded() const;

 private:
  int n_;
  std::map<Exponents, Rational> terms_;
};

/// All n-tuples of nonnegative integers with entry sum <= max_total,
/// lexicographically ordered.
std::vector<std::vector<int>> multi_indices(int n, int max_total);
/// Tuples with entry sum exactly equal to degree.
std::vector<std::vector<int>> multi_indices_of_degree(int n, int degree);

/// Canonical Poisson bracket {F,G} = dF/dxi_i dG/dx^i - dF/dx^i dG/dxi_i.
Symbol poisson(const Symbol& F, const Symbol& G);

/// Divergence operator D = d/dx^i d/dxi_i applied to a symbol.
Symbol divergence(const Symbol& F);

void require_same_dim(const Symbol& a, const Symbol& b);

}  // namespace starq
