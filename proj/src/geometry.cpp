#include "starq/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace starq {

VectorField VectorField::zero(int n) {
  VectorField X;
  X.n = n;
  X.comp.assign(n, Symbol(n));
  return X;
}

VectorField vf_bracket(const VectorField& X, const VectorField& Y) {
  if (X.n != Y.n) throw std::invalid_argument("vf_bracket: dimension mismatch");
  VectorField Z = VectorField::zero(X.n);
  for (int i = 0; i < X.n; ++i) {
    for (int j = 1; j <= X.n; ++j) {
      Z.comp[i] += X.comp[j - 1] * Y.comp[i].diff_x(j);
      Z.comp[i] -= Y.comp[j - 1] * X.comp[i].diff_x(j);
    }
  }
  return Z;
}

Symbol vf_divergence(const VectorField& X) {
  Symbol d(X.n);
  for (int i = 1; i <= X.n; ++i) d += X.comp[i - 1].diff_x(i);
  return d;
}

Symbol moment(const VectorField& X) {
  Symbol J(X.n);
  for (int i = 1; i <= X.n; ++i) J += Symbol::xi(X.n, i) * X.comp[i - 1];
  return J;
}

Symbol lift_lie(const VectorField& X, const Symbol& F) {
  if (X.n != F.dim()) throw std::invalid_argument("lift_lie: dimension mismatch");
  return poisson(moment(X), F);
}

Symbol density_lie(const VectorField& X, const Rational& lambda,
                   const Symbol& f) {
  if (X.n != f.dim())
    throw std::invalid_argument("density_lie: dimension mismatch");
  if (!f.xi_free())
    throw std::invalid_argument("density_lie: argument must be fiber-free");
  Symbol r(X.n);
  for (int i = 1; i <= X.n; ++i) r += X.comp[i - 1] * f.diff_x(i);
  r += lambda * (vf_divergence(X) * f);
  return r;
}

GeneratorFamily projective_generators(int n) {
  if (n < 1) throw std::invalid_argument("projective_generators: n >= 1");
  GeneratorFamily fam;
  fam.kind = GeometryKind::Projective;
  fam.n = n;
  // Translations d/dx^i.
  for (int i = 0; i < n; ++i) {
    VectorField X = VectorField::zero(n);
    X.comp[i] = Symbol::constant(n, Rational(1));
    fam.members.push_back(X);
  }
  // Linear maps x^i d/dx^j.
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < n; ++j) {
      VectorField X = VectorField::zero(n);
      X.comp[j] = Symbol::x(n, i);
      fam.members.push_back(X);
    }
  }
  // Inversions x^i x^j d/dx^j.
  for (int i = 1; i <= n; ++i) {
    VectorField X = VectorField::zero(n);
    for (int j = 0; j < n; ++j) X.comp[j] = Symbol::x(n, i) * Symbol::x(n, j + 1);
    fam.members.push_back(X);
  }
  return fam;
}

GeneratorFamily conformal_generators(int p, int q) {
  int n = p + q;
  if (n < 1) throw std::invalid_argument("conformal_generators: p + q >= 1");
  GeneratorFamily fam;
  fam.kind = GeometryKind::Conformal;
  fam.n = n;
  fam.p = p;
  fam.q = q;
  fam.metric.assign(n, 1);
  for (int i = p; i < n; ++i) fam.metric[i] = -1;
  const auto eps = [&](int i) { return Rational(fam.metric[i - 1]); };

  // Translations d/dx^i.
  for (int i = 0; i < n; ++i) {
    VectorField X = VectorField::zero(n);
    X.comp[i] = Symbol::constant(n, Rational(1));
    fam.members.push_back(X);
  }
  // Rotations x_i d/dx^j - x_j d/dx^i, i < j.
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      VectorField X = VectorField::zero(n);
      X.comp[j - 1] = eps(i) * Symbol::x(n, i);
      X.comp[i - 1] = -(eps(j) * Symbol::x(n, j));
      fam.members.push_back(X);
    }
  }
  // Homothety x^i d/dx^i.
  {
    VectorField X = VectorField::zero(n);
    for (int i = 0; i < n; ++i) X.comp[i] = Symbol::x(n, i + 1);
    fam.members.push_back(X);
  }
  // Inversions x_j x^j d/dx^i - 2 x_i x^j d/dx^j.
  Symbol r2(n);
  for (int j = 1; j <= n; ++j) r2 += eps(j) * (Symbol::x(n, j) * Symbol::x(n, j));
  for (int i = 1; i <= n; ++i) {
    VectorField X = VectorField::zero(n);
    X.comp[i - 1] = r2;
    for (int j = 0; j < n; ++j)
      X.comp[j] -= Rational(2) * (eps(i) * (Symbol::x(n, i) * Symbol::x(n, j + 1)));
    fam.members.push_back(X);
  }
  return fam;
}

Multivector::Multivector(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1) throw std::invalid_argument("Multivector: dimension must be >= 1");
  if (degree < 0) throw std::invalid_argument("Multivector: negative degree");
}

namespace {

// Sorts dirs in place; returns 0 if a repeated index occurs, else the sign
// of the sorting permutation.
int sort_sign(std::vector<int>& dirs) {
  int sign = 1;
  for (std::size_t i = 1; i < dirs.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && dirs[j - 1] > dirs[j]) {
      std::swap(dirs[j - 1], dirs[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < dirs.size(); ++i)
    if (dirs[i] == dirs[i - 1]) return 0;
  return sign;
}

}  // namespace

void Multivector::add_term(std::vector<int> dirs, const Symbol& c) {
  if (static_cast<int>(dirs.size()) != degree_)
    throw std::invalid_argument("Multivector::add_term: wrong arity");
  for (int d : dirs)
    if (d < 0 || d >= 2 * n_)
      throw std::out_of_range("Multivector::add_term: direction out of range");
  int sign = sort_sign(dirs);
  if (sign == 0 || c.is_zero()) return;
  Symbol v = (sign > 0) ? c : -c;
  auto it = terms_.find(dirs);
  if (it == terms_.end()) {
    terms_.emplace(std::move(dirs), std::move(v));
  } else {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Multivector Multivector::operator-() const {
  Multivector r(n_, degree_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (n_ != o.n_ || degree_ != o.degree_)
    throw std::invalid_argument("Multivector: shape mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

namespace {

// Coefficient derivative along frame direction d (same indexing as the
// multivector frame: d < n is d/dxi_{d+1}, d >= n is d/dx^{d-n+1}).
Symbol dir_diff(const Symbol& c, int d, int n) {
  return d < n ? c.diff_xi(d + 1) : c.diff_x(d - n + 1);
}

// One interior product step: sum_a (dP/dtheta_a) (dQ/dz^a) with the frame
// slot of P removed by a right derivative and the leftover factors of P
// wedged in front of those of Q.
Multivector dot(const Multivector& P, const Multivector& Q) {
  int n = P.dim();
  Multivector r(n, P.degree() + Q.degree() - 1);
  for (const auto& [ip, cp] : P.terms()) {
    for (std::size_t pos = 0; pos < ip.size(); ++pos) {
      int a = ip[pos];
      std::vector<int> rest;
      rest.reserve(ip.size() - 1);
      for (std::size_t t = 0; t < ip.size(); ++t)
        if (t != pos) rest.push_back(ip[t]);
      int sgn = ((ip.size() - 1 - pos) % 2 == 0) ? 1 : -1;
      for (const auto& [iq, cq] : Q.terms()) {
        Symbol dc = dir_diff(cq, a, n);
        if (dc.is_zero()) continue;
        std::vector<int> merged = rest;
        merged.insert(merged.end(), iq.begin(), iq.end());
        Symbol coeff = cp * dc;
        r.add_term(std::move(merged), (sgn > 0) ? coeff : -coeff);
      }
    }
  }
  return r;
}

}  // namespace

// Normalized so that the bracket with a vector field is the Lie derivative
// and a bivector brackets with itself to zero. Both graded suspension signs
// occur in the literature; this one orients the bivector-bivector bracket
// so the two-dimensional compatibility bracket comes out positive.
Multivector schouten(const Multivector& V, const Multivector& W) {
  if (V.dim() != W.dim())
    throw std::invalid_argument("schouten: dimension mismatch");
  int susp = ((V.degree() - 1) * (W.degree() - 1)) % 2 == 0 ? 1 : -1;
  Multivector r = dot(V, W);
  if (susp < 0) r = -r;
  r += -dot(W, V);
  return r;
}

Multivector lift_multivector(const VectorField& X) {
  int n = X.n;
  Multivector r(n, 1);
  for (int i = 0; i < n; ++i) r.add_term({n + i}, X.comp[i]);
  for (int i = 1; i <= n; ++i) {
    Symbol c(n);
    for (int j = 1; j <= n; ++j)
      c -= Symbol::xi(n, j) * X.comp[j - 1].diff_x(i);
    r.add_term({i - 1}, c);
  }
  return r;
}

Multivector lie_derive(const VectorField& X, const Multivector& W) {
  return schouten(lift_multivector(X), W);
}

Multivector pi_bivector(int n) {
  Multivector r(n, 2);
  for (int i = 0; i < n; ++i)
    r.add_term({i, n + i}, Symbol::constant(n, Rational(1)));
  return r;
}

Multivector lambda_bivector(int p, int q) {
  if (p + q != 2)
    throw std::invalid_argument("lambda_bivector: only defined for n = 2");
  int n = 2;
  Symbol r2(n);
  r2 += Rational(p >= 1 ? 1 : -1) * (Symbol::xi(n, 1) * Symbol::xi(n, 1));
  r2 += Rational(p >= 2 ? 1 : -1) * (Symbol::xi(n, 2) * Symbol::xi(n, 2));
  Multivector r(n, 2);
  r.add_term({0, 1}, r2);
  return r;
}

CanonicalBivectors canonical_bivectors(int n, const GeneratorFamily& family) {
  CanonicalBivectors out{pi_bivector(n), std::nullopt};
  if (family.kind == GeometryKind::Conformal && n == 2)
    out.lambda = lambda_bivector(family.p, family.q);
  return out;
}

}  // namespace starq
