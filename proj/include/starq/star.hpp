#pragma once

#include <array>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "starq/operators.hpp"
#include "starq/pair_symbol.hpp"
#include "starq/symbol.hpp"

namespace starq {

/// Coefficient lookup (n, k, l, alpha, beta, gamma, delta) -> value.
using CoeffFn =
    std::function<Rational(int, int, int, int, int, int, int)>;

/// Closed-form star-product coefficient, memoized and safe to call
/// concurrently. Entries with alpha+gamma > k or beta+delta > l multiply
/// contractions that annihilate the (k, l) block and never act; the table
/// stores the closed-form continuation there, with 0 at indices where a
/// stage of the formula degenerates. Negative indices read as 0.
Rational star_coefficient(int n, int k, int l, int alpha, int beta, int gamma,
                          int delta);

CoeffFn closed_form_coeffs();

/// The order-r bilinear term: for F of fiber degree k and G of fiber degree
/// l, sum of B^{k,l}_{a,b,g,d} over a+b+g+d = r applied through the doubled
/// space, restricted back to the diagonal; extended bilinearly over graded
/// parts. No h factor is attached here.
Symbol star_order_term(const CoeffFn& coeffs, int r, const Symbol& F,
                       const Symbol& G);

/// Full product sum_r h^r star_order_term(r, F, G); the sum terminates at
/// r = deg_xi F + deg_xi G.
Symbol star_with_table(const CoeffFn& coeffs, const Symbol& F, const Symbol& G);

/// The canonical invariant star-product from the closed-form table.
Symbol star_explicit(const Symbol& F, const Symbol& G);

using StarFn = std::function<Symbol(const Symbol&, const Symbol&)>;

/// (F * G - G * F) / h with exact division; throws std::domain_error if the
/// commutator is not divisible by h.
Symbol star_commutator(const Symbol& F, const Symbol& G, const StarFn& star);

/// Left side minus right side of the two inversion-invariance recursions,
/// instantiated at seed (alpha, beta, gamma, delta). which selects the
/// recursion (1 or 2); entries with a negative index read as 0.
Rational inversion_residual(int which, int n, int k, int l,
                            const std::array<int, 4>& seed,
                            const CoeffFn& coeffs);

/// Polynomial in the nine pairwise contraction generators of the tripled
/// space. Index order:
///   0 xi.y   1 xi.z   2 eta.x   3 zeta.x   4 xi.x
///   5 eta.y  6 eta.z  7 zeta.y  8 zeta.z
using GenPoly = std::map<std::array<int, 9>, Rational>;

/// Coefficient-level associativity residual at order r on the grading block
/// (k, l, m): difference of the two association orders as GenPoly, keeping
/// only monomials that act nontrivially on the block (first-factor fiber
/// derivatives <= k, second <= l, third <= m; anything deeper annihilates).
GenPoly assoc_residual(int n, int k, int l, int m, int r, const CoeffFn& coeffs);

/// Drop every term with h power above cap.
Symbol truncate_nu(const Symbol& F, int cap);

/// Formal equivalence map Phi = Id + sum_i h^{order_i} op_i, orders >= 1.
struct EquivalenceMap {
  std::vector<std::pair<int, LinOp>> layers;
};

Symbol apply_equivalence(const EquivalenceMap& phi, const Symbol& F, int nu_cap);
/// Order-by-order inverse, exact up to h^nu_cap.
Symbol apply_equivalence_inverse(const EquivalenceMap& phi, const Symbol& F,
                                 int nu_cap);

/// Substitutes h -> h + sum a_j h^j (mu_tail holds (j, a_j) with j >= 2),
/// truncating above nu_cap.
Symbol reparametrize(const Symbol& S,
                     const std::vector<std::pair<int, Rational>>& mu_tail,
                     int nu_cap);

/// The transformed product Phi^{-1}(Phi(F) * Phi(G)) with the deformation
/// parameter reparametrized by mu, exact up to h^nu_cap. The
/// reparametrization acts on the product coefficients, extended
/// h-bilinearly to h-carrying arguments.
StarFn transform_star(const StarFn& star, const EquivalenceMap& phi,
                      const std::vector<std::pair<int, Rational>>& mu_tail,
                      int nu_cap);

}  // namespace starq
