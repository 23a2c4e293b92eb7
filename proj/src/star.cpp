#include "starq/star.hpp"

#include <mutex>
#include <stdexcept>

namespace starq {

namespace {

// Outside the range where the paired contraction acts, the table carries
// the closed-form continuation; indices where a stage denominator
// degenerates read as 0. Negative indices always read as 0.
bool negative_index(int k, int l, int a, int b, int g, int d) {
  return k < 0 || l < 0 || a < 0 || b < 0 || g < 0 || d < 0;
}

// First stage: B^{k,l}_{a,b,0,0}.
Rational stage_ab(int n, int k, int l, int a, int b) {
  Rational top = Rational(n - 1, 2) + Rational(k + l);
  Rational den = binomial(Rational(n + 2 * k + 2 * l - a - b),
                          static_cast<unsigned>(a + b));
  if (den.is_zero()) return Rational(0);
  Rational num = binomial(top - Rational(b), static_cast<unsigned>(a)) *
                 binomial(top - Rational(a), static_cast<unsigned>(b));
  Rational sign = (b % 2 == 0) ? Rational(1) : Rational(-1);
  return sign / factorial(static_cast<unsigned>(a + b)) * num / den;
}

// Second stage: B^{k,l}_{a,b,g,0} from the first.
Rational stage_abg(int n, int k, int l, int a, int b, int g) {
  if (g == 0) return stage_ab(n, k, l, a, b);
  Rational scale = pochhammer(Rational(n + 2 * k - g), static_cast<unsigned>(g));
  if (scale.is_zero()) return Rational(0);
  Rational pre = Rational(1) / (factorial(static_cast<unsigned>(g)) * scale);
  Rational sum(0);
  for (int r = 0; r <= g; ++r) {
    int s = g - r;
    Rational term = binomial(Rational(g), static_cast<unsigned>(r)) *
                    pochhammer(Rational(a + 1), static_cast<unsigned>(r)) *
                    pochhammer(Rational(b + 1), static_cast<unsigned>(s)) *
                    pochhammer(Rational(a - l), static_cast<unsigned>(r)) *
                    pochhammer(Rational(b - l), static_cast<unsigned>(s));
    if (term.is_zero()) continue;
    sum += term * stage_ab(n, k, l, a + r, b + s);
  }
  return pre * sum;
}

// Last stage: descending recursion in delta from the second. Each step of
// the downward iteration multiplies the current (a+1) or (b+1), and a is
// raised r+s times while b is raised s+t times along a path, so the
// path-independent products are (a+1)_{r+s} and (b+1)_{s+t}.
Rational stage_abgd(int n, int k, int l, int a, int b, int g, int d) {
  if (d == 0) return stage_abg(n, k, l, a, b, g);
  Rational scale = pochhammer(Rational(n + 2 * l - d), static_cast<unsigned>(d));
  if (scale.is_zero()) return Rational(0);
  Rational pre = Rational(1) / (factorial(static_cast<unsigned>(d)) * scale);
  Rational sum(0);
  for (int r = 0; r <= d; ++r) {
    for (int s = 0; s <= d - r; ++s) {
      int t = d - r - s;
      if (g - s < 0) continue;  // inner entry annihilates
      Rational term =
          trinomial(static_cast<unsigned>(d), static_cast<unsigned>(r),
                    static_cast<unsigned>(s), static_cast<unsigned>(t)) *
          pochhammer(Rational(a + 1), static_cast<unsigned>(r + s)) *
          pochhammer(Rational(b + 1), static_cast<unsigned>(s + t)) *
          pochhammer(Rational(a + g - k), static_cast<unsigned>(r)) *
          pochhammer(Rational(b + g - k), static_cast<unsigned>(t));
      if (term.is_zero()) continue;
      if (s % 2 == 1) term = -term;
      sum += term * stage_abg(n, k, l, a + r + s, b + s + t, g - s);
    }
  }
  return pre * sum;
}

struct CoeffKey {
  int n, k, l, a, b, g, d;
  friend auto operator<=>(const CoeffKey&, const CoeffKey&) = default;
};

std::map<CoeffKey, Rational>& memo() {
  static std::map<CoeffKey, Rational> m;
  return m;
}
std::mutex& memo_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

Rational star_coefficient(int n, int k, int l, int alpha, int beta, int gamma,
                          int delta) {
  if (n < 1) throw std::invalid_argument("star_coefficient: n must be >= 1");
  if (negative_index(k, l, alpha, beta, gamma, delta)) return Rational(0);
  CoeffKey key{n, k, l, alpha, beta, gamma, delta};
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  Rational v = stage_abgd(n, k, l, alpha, beta, gamma, delta);
  std::lock_guard<std::mutex> lock(memo_mutex());
  memo().emplace(key, v);
  return v;
}

CoeffFn closed_form_coeffs() {
  return [](int n, int k, int l, int a, int b, int g, int d) {
    return star_coefficient(n, k, l, a, b, g, d);
  };
}

Symbol star_order_term(const CoeffFn& coeffs, int r, const Symbol& F,
                       const Symbol& G) {
  require_same_dim(F, G);
  int n = F.dim();
  Symbol out(n);
  if (r < 0) return out;
  for (const auto& [k, Fk] : F.graded()) {
    for (const auto& [l, Gl] : G.graded()) {
      if (r > k + l) continue;
      // Progressive contraction over (gamma, delta, alpha, beta) so every
      // prefix is applied once.
      PairSymbol Pg = tensor(Fk, Gl);
      for (int g = 0; g <= k && g <= r; ++g) {
        if (Pg.is_zero()) break;
        PairSymbol Pgd = Pg;
        for (int d = 0; d <= l && g + d <= r; ++d) {
          if (Pgd.is_zero()) break;
          PairSymbol Pgda = Pgd;
          for (int a = 0; a + g <= k && a + g + d <= r; ++a) {
            if (Pgda.is_zero()) break;
            int b = r - a - g - d;
            if (b >= 0 && b + d <= l) {
              Rational c = coeffs(n, k, l, a, b, g, d);
              if (!c.is_zero()) {
                PairSymbol Pfull = contract_pow(Contraction::EtaX,
                                                static_cast<unsigned>(b), Pgda);
                out += c * restrict_diagonal(Pfull);
              }
            }
            Pgda = contract(Contraction::XiY, Pgda);
          }
          Pgd = contract(Contraction::EtaY, Pgd);
        }
        Pg = contract(Contraction::XiX, Pg);
      }
    }
  }
  return out;
}

Symbol star_with_table(const CoeffFn& coeffs, const Symbol& F, const Symbol& G) {
  require_same_dim(F, G);
  int rmax = 0;
  if (F.xi_degree() >= 0 && G.xi_degree() >= 0)
    rmax = F.xi_degree() + G.xi_degree();
  Symbol out(F.dim());
  for (int r = 0; r <= rmax; ++r)
    out += star_order_term(coeffs, r, F, G).mul_h(r);
  return out;
}

Symbol star_explicit(const Symbol& F, const Symbol& G) {
  return star_with_table(closed_form_coeffs(), F, G);
}

Symbol star_commutator(const Symbol& F, const Symbol& G, const StarFn& star) {
  return (star(F, G) - star(G, F)).div_h();
}

Rational inversion_residual(int which, int n, int k, int l,
                            const std::array<int, 4>& seed,
                            const CoeffFn& coeffs) {
  int a = seed[0], b = seed[1], g = seed[2], d = seed[3];
  if (a < 0 || b < 0 || g < 0 || d < 0)
    throw std::invalid_argument("inversion_residual: negative seed");
  Rational lhs(0), rhs(0);
  if (which == 1) {
    lhs += Rational(a + 1) * Rational(a + d - l) * coeffs(n, k, l, a + 1, b, g, d);
    lhs += Rational(b + 1) * Rational(b + d - l) * coeffs(n, k, l, a, b + 1, g, d);
    rhs += Rational(g + 1) * Rational(n + 2 * k - g - 1) *
           coeffs(n, k, l, a, b, g + 1, d);
    if (d >= 1)
      rhs += Rational(a + 1) * Rational(b + 1) *
             coeffs(n, k, l, a + 1, b + 1, g, d - 1);
  } else if (which == 2) {
    lhs += Rational(b + 1) * Rational(b + g - k) * coeffs(n, k, l, a, b + 1, g, d);
    lhs += Rational(a + 1) * Rational(a + g - k) * coeffs(n, k, l, a + 1, b, g, d);
    rhs += Rational(d + 1) * Rational(n + 2 * l - d - 1) *
           coeffs(n, k, l, a, b, g, d + 1);
    if (g >= 1)
      rhs += Rational(a + 1) * Rational(b + 1) *
             coeffs(n, k, l, a + 1, b + 1, g - 1, d);
  } else {
    throw std::invalid_argument("inversion_residual: which must be 1 or 2");
  }
  return lhs - rhs;
}

namespace {

void genpoly_add(GenPoly& p, const std::array<int, 9>& mono, const Rational& c) {
  if (c.is_zero()) return;
  auto it = p.find(mono);
  if (it == p.end()) {
    p.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

GenPoly genpoly_one() {
  GenPoly p;
  p.emplace(std::array<int, 9>{0, 0, 0, 0, 0, 0, 0, 0, 0}, Rational(1));
  return p;
}

GenPoly genpoly_mul(const GenPoly& a, const GenPoly& b) {
  GenPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::array<int, 9> m = ma;
      for (int i = 0; i < 9; ++i) m[i] += mb[i];
      genpoly_add(r, m, ca * cb);
    }
  return r;
}

// (g_{i1} + ... + g_{im})^p by repeated multiplication.
GenPoly sum_power(const std::vector<int>& gens, int p) {
  GenPoly base;
  for (int g : gens) {
    std::array<int, 9> m{};
    m[g] = 1;
    genpoly_add(base, m, Rational(1));
  }
  GenPoly r = genpoly_one();
  for (int i = 0; i < p; ++i) r = genpoly_mul(r, base);
  return r;
}

GenPoly single_power(int gen, int p) {
  GenPoly r;
  std::array<int, 9> m{};
  m[gen] = p;
  r.emplace(m, Rational(1));
  return r;
}

// Fiber-derivative counts of the three tensor factors.
// First factor (xi): generators 0, 1, 4; second (eta): 2, 5, 6;
// third (zeta): 3, 7, 8.
bool effective_monomial(const std::array<int, 9>& m, int k, int l, int mm) {
  int ef = m[0] + m[1] + m[4];
  int eg = m[2] + m[5] + m[6];
  int eh = m[3] + m[7] + m[8];
  return ef <= k && eg <= l && eh <= mm;
}

void enumerate_sum4(int total, const std::function<void(int, int, int, int)>& f) {
  for (int a = 0; a <= total; ++a)
    for (int b = 0; a + b <= total; ++b)
      for (int g = 0; a + b + g <= total; ++g) f(a, b, g, total - a - b - g);
}

}  // namespace

GenPoly assoc_residual(int n, int k, int l, int m, int r, const CoeffFn& coeffs) {
  GenPoly res;
  for (int j = 0; j <= r; ++j) {
    enumerate_sum4(r - j, [&](int a, int b, int g, int d) {
      // Left association: inner product on (G, H), outer on (F, inner).
      enumerate_sum4(j, [&](int a2, int b2, int g2, int d2) {
        Rational c = coeffs(n, k, l + m - j, a, b, g, d) *
                     coeffs(n, l, m, a2, b2, g2, d2);
        if (c.is_zero()) return;
        GenPoly p = sum_power({0, 1}, a);
        p = genpoly_mul(p, sum_power({2, 3}, b));
        p = genpoly_mul(p, single_power(4, g));
        p = genpoly_mul(p, sum_power({5, 6, 7, 8}, d));
        p = genpoly_mul(p, single_power(6, a2));
        p = genpoly_mul(p, single_power(7, b2));
        p = genpoly_mul(p, single_power(5, g2));
        p = genpoly_mul(p, single_power(8, d2));
        for (const auto& [mono, pc] : p) genpoly_add(res, mono, c * pc);
      });
      // Right association: inner product on (F, G), outer on (inner, H).
      enumerate_sum4(j, [&](int a2, int b2, int g2, int d2) {
        Rational c = coeffs(n, k + l - j, m, a, b, g, d) *
                     coeffs(n, k, l, a2, b2, g2, d2);
        if (c.is_zero()) return;
        GenPoly p = sum_power({1, 6}, a);
        p = genpoly_mul(p, sum_power({3, 7}, b));
        p = genpoly_mul(p, sum_power({4, 0, 2, 5}, g));
        p = genpoly_mul(p, single_power(8, d));
        p = genpoly_mul(p, single_power(0, a2));
        p = genpoly_mul(p, single_power(2, b2));
        p = genpoly_mul(p, single_power(4, g2));
        p = genpoly_mul(p, single_power(5, d2));
        for (const auto& [mono, pc] : p) genpoly_add(res, mono, -(c * pc));
      });
    });
  }
  // Keep only monomials acting nontrivially on the (k, l, m) block.
  GenPoly out;
  for (const auto& [mono, c] : res)
    if (effective_monomial(mono, k, l, m)) out.emplace(mono, c);
  return out;
}

Symbol truncate_nu(const Symbol& F, int cap) {
  Symbol out(F.dim());
  for (const auto& [e, c] : F.terms())
    if (e.nu <= cap) out.add_term(e, c);
  return out;
}

Symbol apply_equivalence(const EquivalenceMap& phi, const Symbol& F, int nu_cap) {
  Symbol out = F;
  for (const auto& [order, op] : phi.layers) {
    if (order < 1) throw std::invalid_argument("equivalence layers start at h^1");
    out += op(F).mul_h(order);
  }
  return truncate_nu(out, nu_cap);
}

Symbol apply_equivalence_inverse(const EquivalenceMap& phi, const Symbol& F,
                                 int nu_cap) {
  // Neumann series: each application of (Phi - Id) raises the h order, so
  // the series is finite after truncation.
  Symbol out = F;
  Symbol acc = F;
  while (true) {
    Symbol next(F.dim());
    for (const auto& [order, op] : phi.layers)
      next += op(acc).mul_h(order);
    next = truncate_nu(next, nu_cap);
    if (next.is_zero()) break;
    acc = -next;
    out += acc;
  }
  return truncate_nu(out, nu_cap);
}

Symbol reparametrize(const Symbol& S,
                     const std::vector<std::pair<int, Rational>>& mu_tail,
                     int nu_cap) {
  int n = S.dim();
  // mu(h) as an h-polynomial, then its powers, truncated.
  Symbol mu = Symbol::h(n);
  for (const auto& [j, c] : mu_tail) {
    if (j < 2) throw std::invalid_argument("reparametrization tail starts at h^2");
    mu += (c * Symbol::constant(n, Rational(1))).mul_h(j);
  }
  std::vector<Symbol> mu_pow{Symbol::constant(n, Rational(1))};
  Symbol out(n);
  for (const auto& [e, c] : S.terms()) {
    while (static_cast<int>(mu_pow.size()) <= e.nu)
      mu_pow.push_back(truncate_nu(mu_pow.back() * mu, nu_cap));
    Exponents base = e;
    base.nu = 0;
    Symbol term(n);
    term.add_term(base, c);
    out += term * mu_pow[e.nu];
  }
  return truncate_nu(out, nu_cap);
}

StarFn transform_star(const StarFn& star, const EquivalenceMap& phi,
                      const std::vector<std::pair<int, Rational>>& mu_tail,
                      int nu_cap) {
  // Reparametrized base product, h-bilinear in its arguments.
  StarFn repar = [star, mu_tail, nu_cap](const Symbol& F, const Symbol& G) {
    Symbol out(F.dim());
    for (int p = 0; p <= std::max(F.nu_degree(), 0); ++p) {
      Symbol Fp = F.nu_coefficient(p);
      if (Fp.is_zero()) continue;
      for (int q = 0; q <= std::max(G.nu_degree(), 0); ++q) {
        Symbol Gq = G.nu_coefficient(q);
        if (Gq.is_zero()) continue;
        out += reparametrize(star(Fp, Gq), mu_tail, nu_cap).mul_h(p + q);
      }
    }
    return truncate_nu(out, nu_cap);
  };
  if (phi.layers.empty()) return repar;
  return [repar, phi, nu_cap](const Symbol& F, const Symbol& G) {
    Symbol s = repar(apply_equivalence(phi, F, nu_cap),
                     apply_equivalence(phi, G, nu_cap));
    return apply_equivalence_inverse(phi, s, nu_cap);
  };
}

}  // namespace starq
