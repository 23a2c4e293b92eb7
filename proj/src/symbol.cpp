#include "starq/symbol.hpp"

#include <functional>
#include <stdexcept>

namespace starq {

std::vector<std::vector<int>> multi_indices(int n, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(0, max_total);
  return out;
}

std::vector<std::vector<int>> multi_indices_of_degree(int n, int degree) {
  std::vector<std::vector<int>> out;
  for (auto& m : multi_indices(n, degree)) {
    int s = 0;
    for (int e : m) s += e;
    if (s == degree) out.push_back(std::move(m));
  }
  return out;
}

Symbol::Symbol(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Symbol: dimension must be >= 1");
}

Symbol Symbol::constant(int n, const Rational& c) {
  Symbol s(n);
  Exponents e;
  e.x.assign(n, 0);
  e.xi.assign(n, 0);
  s.add_term(e, c);
  return s;
}

Symbol Symbol::x(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("Symbol::x: index out of range");
  Symbol s(n);
  Exponents e;
  e.x.assign(n, 0);
  e.xi.assign(n, 0);
  e.x[i - 1] = 1;
  s.add_term(e, Rational(1));
  return s;
}

Symbol Symbol::xi(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("Symbol::xi: index out of range");
  Symbol s(n);
  Exponents e;
  e.x.assign(n, 0);
  e.xi.assign(n, 0);
  e.xi[i - 1] = 1;
  s.add_term(e, Rational(1));
  return s;
}

Symbol Symbol::h(int n) {
  Symbol s(n);
  Exponents e;
  e.x.assign(n, 0);
  e.xi.assign(n, 0);
  e.nu = 1;
  s.add_term(e, Rational(1));
  return s;
}

void Symbol::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Symbol Symbol::term(const Exponents& e, const Rational& c) const {
  Symbol s(n_);
  s.add_term(e, c);
  return s;
}

Symbol Symbol::operator-() const {
  Symbol s(n_);
  for (const auto& [e, c] : terms_) s.terms_.emplace(e, -c);
  return s;
}

Symbol& Symbol::operator+=(const Symbol& o) {
  require_same_dim(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Symbol& Symbol::operator-=(const Symbol& o) {
  require_same_dim(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Symbol operator*(const Symbol& a, const Symbol& b) {
  require_same_dim(a, b);
  Symbol r(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (int i = 0; i < a.n_; ++i) {
        e.x[i] += eb.x[i];
        e.xi[i] += eb.xi[i];
      }
      e.nu += eb.nu;
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Symbol operator*(const Rational& c, const Symbol& a) {
  Symbol r(a.n_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : a.terms_) r.terms_.emplace(e, c * v);
  return r;
}

Symbol Symbol::pow(unsigned k) const {
  Symbol r = Symbol::constant(n_, Rational(1));
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

Symbol Symbol::diff_x(int i) const {
  Symbol r(n_);
  for (const auto& [e, c] : terms_) {
    int p = e.x[i - 1];
    if (p == 0) continue;
    Exponents d = e;
    d.x[i - 1] = p - 1;
    r.add_term(d, Rational(p) * c);
  }
  return r;
}

Symbol Symbol::diff_xi(int i) const {
  Symbol r(n_);
  for (const auto& [e, c] : terms_) {
    int p = e.xi[i - 1];
    if (p == 0) continue;
    Exponents d = e;
    d.xi[i - 1] = p - 1;
    r.add_term(d, Rational(p) * c);
  }
  return r;
}

Symbol Symbol::conj() const {
  Symbol r(n_);
  for (const auto& [e, c] : terms_)
    r.terms_.emplace(e, (e.nu % 2 == 0) ? c : -c);
  return r;
}

Symbol Symbol::mul_h(int k) const {
  Symbol r(n_);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    d.nu += k;
    if (d.nu < 0) throw std::domain_error("Symbol::mul_h: negative h power");
    r.terms_.emplace(d, c);
  }
  return r;
}

Symbol Symbol::nu_coefficient(int p) const {
  Symbol r(n_);
  for (const auto& [e, c] : terms_) {
    if (e.nu != p) continue;
    Exponents d = e;
    d.nu = 0;
    r.terms_.emplace(d, c);
  }
  return r;
}

int Symbol::nu_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    if (e.nu > d) d = e.nu;
  return d;
}

Symbol Symbol::div_h() const {
  Symbol r(n_);
  for (const auto& [e, c] : terms_) {
    if (e.nu == 0)
      throw std::domain_error("Symbol::div_h: term without h factor");
    Exponents d = e;
    d.nu -= 1;
    r.terms_.emplace(d, c);
  }
  return r;
}

int Symbol::xi_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    if (e.xi_degree() > d) d = e.xi_degree();
  return d;
}

int Symbol::x_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    if (e.x_degree() > d) d = e.x_degree();
  return d;
}

bool Symbol::xi_free() const {
  for (const auto& [e, c] : terms_)
    if (e.xi_degree() != 0) return false;
  return true;
}

Symbol Symbol::euler() const {
  Symbol r(n_);
  for (const auto& [e, c] : terms_) {
    int k = e.xi_degree();
    if (k != 0) r.terms_.emplace(e, Rational(k) * c);
  }
  return r;
}

Symbol Symbol::euler_hat() const {
  Symbol r(n_);
  for (const auto& [e, c] : terms_) {
    int k = e.xi_degree() + e.nu;
    if (k != 0) r.terms_.emplace(e, Rational(k) * c);
  }
  return r;
}

Symbol Symbol::graded_part(int k) const {
  Symbol r(n_);
  for (const auto& [e, c] : terms_)
    if (e.xi_degree() == k) r.terms_.emplace(e, c);
  return r;
}

std::vector<std::pair<int, Symbol>> Symbol::graded() const {
  std::map<int, Symbol> parts;
  for (const auto& [e, c] : terms_) {
    auto [it, inserted] = parts.try_emplace(e.xi_degree(), n_);
    it->second.add_term(e, c);
  }
  std::vector<std::pair<int, Symbol>> out;
  out.reserve(parts.size());
  for (auto& [k, part] : parts) out.emplace_back(k, std::move(part));
  return out;
}

Symbol poisson(const Symbol& F, const Symbol& G) {
  require_same_dim(F, G);
  Symbol r(F.dim());
  for (int i = 1; i <= F.dim(); ++i) {
    r += F.diff_xi(i) * G.diff_x(i);
    r -= F.diff_x(i) * G.diff_xi(i);
  }
  return r;
}

Symbol divergence(const Symbol& F) {
  Symbol r(F.dim());
  for (int i = 1; i <= F.dim(); ++i) r += F.diff_x(i).diff_xi(i);
  return r;
}

void require_same_dim(const Symbol& a, const Symbol& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch between symbols");
}

}  // namespace starq
