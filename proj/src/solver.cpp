#include "starq/solver.hpp"

#include <functional>
#include <stdexcept>

#include "starq/geometry.hpp"

namespace starq {

namespace {

Symbol monomial(int n, const std::vector<int>& xexp,
                const std::vector<int>& xiexp) {
  Exponents e;
  e.x = xexp;
  e.xi = xiexp;
  e.nu = 0;
  Symbol s(n);
  s.add_term(e, Rational(1));
  return s;
}

}  // namespace

LinearSolution solve_linear(std::vector<std::vector<Rational>> rows,
                            std::size_t ncols) {
  LinearSolution sol;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rational inv = Rational(1) / rows[rank][col];
    for (std::size_t j = col; j <= ncols; ++j) rows[rank][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      Rational f = rows[i][col];
      for (std::size_t j = col; j <= ncols; ++j)
        rows[i][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (!rows[i][ncols].is_zero()) return sol;  // inconsistent
  sol.consistent = true;
  sol.unique = (rank == ncols);
  if (sol.unique) {
    sol.x.assign(ncols, Rational(0));
    for (std::size_t i = 0; i < rank; ++i) sol.x[pivot_col[i]] = rows[i][ncols];
  }
  return sol;
}

CoeffSolver::CoeffSolver(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("CoeffSolver: n must be >= 1");
  for (int i = 1; i <= n; ++i) {
    VectorField X = VectorField::zero(n);
    for (int j = 0; j < n; ++j)
      X.comp[j] = Symbol::x(n, i) * Symbol::x(n, j + 1);
    inversions_.push_back(X);
  }
}

Rational CoeffSolver::lookup(int k, int l, int a, int b, int g, int d) const {
  if (k < 0 || l < 0 || a < 0 || b < 0 || g < 0 || d < 0) return Rational(0);
  if (a + g > k || b + d > l) return Rational(0);
  int r = a + b + g + d;
  if (k == probe_.k && l == probe_.l && r == probe_.r) {
    std::array<int, 4> slot{a, b, g, d};
    for (std::size_t i = 0; i < probe_.slots.size(); ++i)
      if (probe_.slots[i] == slot) return probe_.vals[i];
    throw std::logic_error("CoeffSolver: probe slot not enumerated");
  }
  auto t = values_.find({k, l});
  if (t != values_.end()) {
    auto it = t->second.find({a, b, g, d});
    if (it != t->second.end()) return it->second;
  }
  auto lv = solved_level_.find({k, l});
  if (lv != solved_level_.end() && r <= lv->second) return Rational(0);
  throw std::logic_error("CoeffSolver: dependency on an unsolved entry (" +
                         std::to_string(k) + "," + std::to_string(l) + ") level " +
                         std::to_string(r));
}

void CoeffSolver::solve(int kmax, int lmax, int rmax) {
  for (int r = 0; r <= rmax; ++r) {
    for (int K = 0; K <= kmax + lmax; ++K) solve_level(K, 0, r);
    for (int l = 1; l <= lmax; ++l)
      for (int k = 0; k <= kmax; ++k) solve_level(k, l, r);
  }
}

void CoeffSolver::solve_level(int k, int l, int r) {
  auto lv = solved_level_.find({k, l});
  if (lv != solved_level_.end() && lv->second >= r) return;

  probe_.k = k;
  probe_.l = l;
  probe_.r = r;
  probe_.slots.clear();
  for (int a = 0; a <= r; ++a)
    for (int b = 0; a + b <= r; ++b)
      for (int g = 0; a + b + g <= r; ++g) {
        int d = r - a - b - g;
        if (a + g <= k && b + d <= l) probe_.slots.push_back({a, b, g, d});
      }
  std::size_t m = probe_.slots.size();
  if (m == 0) {
    solved_level_[{k, l}] = r;
    return;
  }

  CoeffFn table = [this](int, int kk, int ll, int a, int b, int g, int d) {
    return lookup(kk, ll, a, b, g, d);
  };

  for (int tier = 1; tier <= 3; ++tier) {
    int xdeg = tier;            // max base degree of probe monomials
    std::size_t xicap = 2u + 2u * tier;  // cap on fiber multi-indices used

    auto xi_k = multi_indices_of_degree(n_, k);
    auto xi_l = multi_indices_of_degree(n_, l);
    if (xi_k.size() > xicap) xi_k.resize(xicap);
    if (xi_l.size() > xicap) xi_l.resize(xicap);
    std::vector<std::vector<int>> xs = multi_indices(n_, xdeg);

    std::vector<Symbol> Fs, Gs, Hs;
    for (const auto& bk : xi_k)
      for (const auto& ax : xs) Fs.push_back(monomial(n_, ax, bk));
    for (const auto& bl : xi_l)
      for (const auto& ax : xs) Gs.push_back(monomial(n_, ax, bl));
    std::vector<int> zero_xi(n_, 0);
    for (const auto& ax : xs) Hs.push_back(monomial(n_, ax, zero_xi));

    // Residual symbols, affine in the probed slots.
    auto residuals = [&]() {
      std::vector<Symbol> out;
      for (const auto& X : inversions_) {
        for (const auto& F : Fs)
          for (const auto& G : Gs) {
            Symbol t = lift_lie(X, star_order_term(table, r, F, G)) -
                       star_order_term(table, r, lift_lie(X, F), G) -
                       star_order_term(table, r, F, lift_lie(X, G));
            out.push_back(std::move(t));
          }
      }
      for (const auto& F : Fs)
        for (const auto& G : Gs)
          for (const auto& H : Hs) {
            Symbol t(n_);
            for (int j = 0; j <= r; ++j) {
              t += star_order_term(table, r - j, F,
                                   star_order_term(table, j, G, H));
              t -= star_order_term(table, r - j,
                                   star_order_term(table, j, F, G), H);
            }
            out.push_back(std::move(t));
          }
      return out;
    };

    probe_.vals.assign(m, Rational(0));
    std::vector<Symbol> base = residuals();
    std::vector<std::vector<Symbol>> cols(m);
    for (std::size_t i = 0; i < m; ++i) {
      probe_.vals.assign(m, Rational(0));
      probe_.vals[i] = Rational(1);
      cols[i] = residuals();
    }

    // Rows: one per (residual, monomial of its affine span).
    std::vector<std::vector<Rational>> rows;
    for (std::size_t t = 0; t < base.size(); ++t) {
      std::map<Exponents, std::vector<Rational>> coeff_rows;
      auto touch = [&](const Exponents& e) -> std::vector<Rational>& {
        auto [it, fresh] = coeff_rows.try_emplace(e);
        if (fresh) it->second.assign(m + 1, Rational(0));
        return it->second;
      };
      for (const auto& [e, c] : base[t].terms()) touch(e)[m] = -c;
      for (std::size_t i = 0; i < m; ++i)
        for (const auto& [e, c] : cols[i][t].terms()) touch(e)[i] = c;
      // Column entries are (value at e_i) - (value at 0).
      for (auto& [e, row] : coeff_rows) {
        Rational c0 = -row[m];
        for (std::size_t i = 0; i < m; ++i) row[i] -= c0;
        rows.push_back(row);
      }
    }

    // Normalization at the first two orders.
    if (r == 0 || r == 1) {
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational> row(m + 1, Rational(0));
        const auto& s = probe_.slots[i];
        if (r == 0) {
          row[i] = Rational(1);
          row[m] = Rational(1);
          rows.push_back(row);
        } else if (s == std::array<int, 4>{1, 0, 0, 0}) {
          row[i] = Rational(1);
          row[m] = half();
          rows.push_back(row);
        } else if (s == std::array<int, 4>{0, 1, 0, 0}) {
          row[i] = Rational(1);
          row[m] = -half();
          rows.push_back(row);
        }
      }
    }

    LinearSolution sol = solve_linear(std::move(rows), m);
    if (sol.consistent && sol.unique) {
      auto& tv = values_[{k, l}];
      for (std::size_t i = 0; i < m; ++i)
        if (!sol.x[i].is_zero()) tv[probe_.slots[i]] = sol.x[i];
      solved_level_[{k, l}] = r;
      probe_ = Probe{};
      return;
    }
    if (!sol.consistent)
      throw std::logic_error("CoeffSolver: inconsistent system at (" +
                             std::to_string(k) + "," + std::to_string(l) +
                             ") order " + std::to_string(r));
  }
  throw std::logic_error("CoeffSolver: underdetermined system at (" +
                         std::to_string(k) + "," + std::to_string(l) +
                         ") order " + std::to_string(r));
}

Rational CoeffSolver::value(int k, int l, int a, int b, int g, int d) const {
  if (k < 0 || l < 0 || a < 0 || b < 0 || g < 0 || d < 0) return Rational(0);
  if (a + g > k || b + d > l) return Rational(0);
  auto lv = solved_level_.find({k, l});
  int r = a + b + g + d;
  if (lv == solved_level_.end() || lv->second < r)
    throw std::out_of_range("CoeffSolver::value: entry not solved");
  auto t = values_.find({k, l});
  if (t != values_.end()) {
    auto it = t->second.find({a, b, g, d});
    if (it != t->second.end()) return it->second;
  }
  return Rational(0);
}

CoeffFn CoeffSolver::fn() const {
  return [this](int, int k, int l, int a, int b, int g, int d) {
    return value(k, l, a, b, g, d);
  };
}

}  // namespace starq
